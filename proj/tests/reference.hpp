#pragma once

// Test-side reference computations. None of these call into the library's
// formulas; they count monomials or expand Chow-ring products directly.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace ref {

// Number of exponent vectors of length len with entries in [lo, hi] summing to total.
inline std::int64_t count_vectors(int len, long total, long lo, long hi) {
  if (len == 0) return total == 0 ? 1 : 0;
  std::int64_t out = 0;
  for (long e = lo; e <= hi; ++e) out += count_vectors(len - 1, total - e, lo, hi);
  return out;
}

// h^0(P^k, O(d)): monomials of degree d in k+1 variables.
inline std::int64_t h0_pk(int k, long d) { return d < 0 ? 0 : count_vectors(k + 1, d, 0, d); }

// h^k(P^k, O(d)): inverse monomials x^e with every e_i <= -1 and sum e = d.
inline std::int64_t htop_pk(int k, long d) {
  const long deepest = d + static_cast<long>(k);  // every other entry at -1
  if (deepest > -1) return 0;
  return count_vectors(k + 1, d, deepest, -1);
}

// Cohomology of O(a,b) on P^m x P^n, index 0..m+n, from the two Cech pieces.
inline std::vector<std::int64_t> cohomology(int m, int n, long a, long b) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(m + n + 1), 0);
  const std::int64_t x[2] = {h0_pk(m, a), htop_pk(m, a)};
  const std::int64_t y[2] = {h0_pk(n, b), htop_pk(n, b)};
  const int xi[2] = {0, m};
  const int yi[2] = {0, n};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) h[static_cast<std::size_t>(xi[i] + yi[j])] += x[i] * y[j];
  return h;
}

// Chow ring of P^m x P^n truncated at h1^{m+1} = h2^{n+1} = 0.
struct Cycle {
  std::map<std::pair<int, int>, std::int64_t> terms;
};

inline Cycle divisor(long a, long b) {
  Cycle c;
  if (a) c.terms[{1, 0}] = a;
  if (b) c.terms[{0, 1}] = b;
  return c;
}

inline Cycle times(const Cycle& lhs, const Cycle& rhs, int m, int n) {
  Cycle out;
  for (const auto& [p, u] : lhs.terms)
    for (const auto& [q, v] : rhs.terms) {
      const int i = p.first + q.first;
      const int j = p.second + q.second;
      if (i <= m && j <= n) out.terms[{i, j}] += u * v;
    }
  return out;
}

inline std::int64_t top_degree(const Cycle& c, int m, int n) {
  auto it = c.terms.find({m, n});
  return it == c.terms.end() ? 0 : it->second;
}

// Degree of O(p,q) restricted to the complete intersection of the given divisors
// (which must have total dimension 1).
inline std::int64_t curve_degree(int m, int n, const std::vector<std::pair<long, long>>& gens, long p, long q) {
  Cycle c;
  c.terms[{0, 0}] = 1;
  for (const auto& [a, b] : gens) c = times(c, divisor(a, b), m, n);
  return top_degree(times(c, divisor(p, q), m, n), m, n);
}

// Hilbert polynomial of a curve complete intersection, as (slope, constant),
// using adjunction for the genus.
inline std::pair<std::int64_t, std::int64_t> curve_hilbert_polynomial(int m, int n,
                                                                      const std::vector<std::pair<long, long>>& gens) {
  long sa = 0;
  long sb = 0;
  for (const auto& [a, b] : gens) {
    sa += a;
    sb += b;
  }
  const std::int64_t deg = curve_degree(m, n, gens, 1, 1);
  const std::int64_t two_g_minus_2 = curve_degree(m, n, gens, sa - m - 1, sb - n - 1);
  const std::int64_t genus = two_g_minus_2 / 2 + 1;
  return {deg, 1 - genus};
}

// Every subset sum of signed excesses; the raw form of the regular-sequence test.
inline bool regular_by_subsets(int m, int n, const std::vector<std::pair<long, long>>& gens) {
  const std::size_t c = gens.size();
  for (unsigned long mask = 1; mask < (1UL << c); ++mask) {
    long x = 0;
    long y = 0;
    for (std::size_t i = 0; i < c; ++i)
      if (mask & (1UL << i)) {
        x += gens[i].first - gens[i].second;
        y += gens[i].second - gens[i].first;
      }
    if (x >= m + 1 || y >= n + 1) return false;
  }
  return true;
}

// Dense product of two bihomogeneous polynomials over F_p, keyed by exponent.
using Poly = std::map<std::vector<int>, std::uint64_t>;

inline Poly multiply(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly out;
  for (const auto& [e, u] : f)
    for (const auto& [k, v] : g) {
      std::vector<int> s(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) s[i] = e[i] + k[i];
      auto& slot = out[s];
      slot = (slot + u * v) % p;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace ref
