#include "bici/cispec.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "bici/errors.hpp"
#include "bici/koszul.hpp"

namespace bici {

CiSpec CiSpec::make(int m, int n, const std::vector<std::pair<long, long>>& pairs) {
  std::vector<Bidegree> degrees;
  degrees.reserve(pairs.size());
  for (const auto& [a, b] : pairs) degrees.push_back({a, b});
  return make(AmbientSpace(m, n), std::move(degrees));
}

CiSpec CiSpec::make(AmbientSpace space, std::vector<Bidegree> bidegrees) {
  const long c = static_cast<long>(bidegrees.size());
  const long max_c = space.m + space.n - 1;
  if (c < 1 || c > max_c) {
    std::ostringstream os;
    os << "codimension c = " << c << " outside [1, m+n-1] = [1, " << max_c << "]";
    throw InvalidInput(os.str());
  }
  for (std::size_t i = 0; i < bidegrees.size(); ++i) {
    if (bidegrees[i].a < 0 || bidegrees[i].b < 0) {
      std::ostringstream os;
      os << "generator " << i + 1 << " has negative bidegree " << bidegrees[i];
      throw InvalidInput(os.str());
    }
  }
  for (std::size_t i = 0; i < bidegrees.size(); ++i) {
    if (bidegrees[i].a + bidegrees[i].b < 2) {
      std::ostringstream os;
      os << "generator " << i + 1 << " has bidegree " << bidegrees[i] << " with a + b < 2";
      throw InvalidInput(os.str());
    }
  }
  std::sort(bidegrees.begin(), bidegrees.end());
  return CiSpec(space, std::move(bidegrees));
}

Bidegree CiSpec::total() const {
  Bidegree t{0, 0};
  for (const auto& d : bidegrees_) t += d;
  return t;
}

CiSpec CiSpec::swapped() const {
  std::vector<Bidegree> reversed;
  reversed.reserve(bidegrees_.size());
  for (const auto& d : bidegrees_) reversed.push_back(d.swapped());
  std::sort(reversed.begin(), reversed.end());
  return CiSpec(space_.swapped(), std::move(reversed));
}

std::string CiSpec::to_string() const {
  std::ostringstream os;
  os << "P^" << space_.m << " x P^" << space_.n << " [";
  for (std::size_t i = 0; i < bidegrees_.size(); ++i) os << (i ? ", " : "") << bidegrees_[i];
  os << ']';
  return os.str();
}

GroupedSpec group(const CiSpec& spec) {
  GroupedSpec g;
  for (const auto& d : spec.bidegrees()) {
    if (!g.groups.empty() && g.groups.back().degree == d)
      ++g.groups.back().multiplicity;
    else
      g.groups.push_back({d, 1});
  }
  return g;
}

bool is_regular_sequence_criterion(const CiSpec& spec) {
  long x_excess = 0;
  long y_excess = 0;
  for (const auto& d : spec.bidegrees()) {
    x_excess += std::max(d.a - d.b, 0L);
    y_excess += std::max(d.b - d.a, 0L);
  }
  return x_excess <= spec.space().m && y_excess <= spec.space().n;
}

bool regular_criterion_outside_hypothesis(const CiSpec& spec) {
  const auto& degrees = spec.bidegrees();
  const bool x_tilted = std::any_of(degrees.begin(), degrees.end(), [](Bidegree d) { return d.a > d.b; });
  const bool y_tilted = std::any_of(degrees.begin(), degrees.end(), [](Bidegree d) { return d.b > d.a; });
  return (spec.space().m == 1 && x_tilted) || (spec.space().n == 1 && y_tilted);
}

namespace {

// Checks the two ordering inequalities for every (S, gamma) with gamma not in
// S, restricted to |S| = m for the first and |S| = n for the second unless
// all_subsets is set.
bool ordering_holds(const CiSpec& spec, bool all_subsets) {
  const auto& degrees = spec.bidegrees();
  const std::size_t c = degrees.size();
  const long m = spec.space().m;
  const long n = spec.space().n;
  for (unsigned long mask = 1; mask < (1UL << c); ++mask) {
    const long size = std::popcount(mask);
    const bool check_first = all_subsets || size == m;
    const bool check_second = all_subsets || size == n;
    if (!check_first && !check_second) continue;
    Bidegree sum{0, 0};
    for (std::size_t i = 0; i < c; ++i)
      if (mask & (1UL << i)) sum += degrees[i];
    for (std::size_t g = 0; g < c; ++g) {
      if (mask & (1UL << g)) continue;
      const Bidegree gamma = degrees[g];
      if (check_first && !(sum.a < gamma.a + m + 1 || gamma.b < sum.b)) return false;
      if (check_second && !(sum.b < gamma.b + n + 1 || gamma.a < sum.a)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_acm_order(const CiSpec& spec) { return ordering_holds(spec, false); }

bool is_acm_order_all_subsets(const CiSpec& spec) { return ordering_holds(spec, true); }

bool is_acm(const CiSpec& spec) { return is_regular_sequence_criterion(spec) && is_acm_order(spec); }

std::optional<std::string> acm_violation(const CiSpec& spec) {
  if (!is_regular_sequence_criterion(spec))
    return spec.to_string() + " is not a regular sequence: some subset of a_i - b_i reaches m+1 or of b_i - a_i reaches n+1";
  if (!is_acm_order(spec))
    return spec.to_string() + " violates the ACM ordering conditions";
  return std::nullopt;
}

void require_acm(const CiSpec& spec) {
  if (auto why = acm_violation(spec)) throw NotAcm(*why);
}

Bidegree dualizing_bidegree(const CiSpec& spec) {
  const Bidegree t = spec.total();
  return {t.a - spec.space().m - 1, t.b - spec.space().n - 1};
}

bool is_canonical_ample(const CiSpec& spec) {
  if (spec.dimension() != 1) return false;
  for (const auto& d : spec.bidegrees())
    if (d.a < 1 || d.b < 1) return false;
  // sum a = m + 2 and sum b = n + 2
  return dualizing_bidegree(spec) == Bidegree{1, 1};
}

std::vector<Bidegree> hypersurface_hp_ambiguity(AmbientSpace space, Bidegree d) {
  if (d.a < 0 || d.b < 0 || d.a + d.b < 2) {
    std::ostringstream os;
    os << "hypersurface bidegree " << d << " must have a, b >= 0 and a + b >= 2";
    throw InvalidInput(os.str());
  }
  if (d.a < d.b) {
    auto swapped = hypersurface_hp_ambiguity(space.swapped(), d.swapped());
    for (auto& x : swapped) x = x.swapped();
    return swapped;
  }

  std::vector<Bidegree> out{d};
  const Bidegree candidate{d.b + space.m - space.n, d.a};
  if (candidate.a < 0 || candidate.b < 0 || candidate == d) return out;
  const Bidegree own[] = {d};
  const Bidegree other[] = {candidate};
  if (koszul_hilbert_polynomial(space, own) == koszul_hilbert_polynomial(space, other)) out.push_back(candidate);
  return out;
}

}  // namespace bici
