#include "bici/oracle.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "bici/errors.hpp"
#include "bici/koszul.hpp"

namespace bici {

namespace {

// Compositions of total into parts nonnegative entries, descending lex order.
void compositions(int total, int parts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    prefix.push_back(first);
    compositions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> compositions(long total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  compositions(static_cast<int>(total), parts, prefix, out);
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

void check_prime(std::uint32_t prime) {
  if (prime < kMinOraclePrime || !is_prime(prime)) {
    std::ostringstream os;
    os << "oracle prime " << prime << " must be a prime >= " << kMinOraclePrime;
    throw InvalidInput(os.str());
  }
}

}  // namespace

// --- monomials ---------------------------------------------------------------

MonomialBasis::MonomialBasis(AmbientSpace space, Bidegree degree) : space_(space), degree_(degree) {
  if (degree.a < 0 || degree.b < 0) {
    std::ostringstream os;
    os << "monomial basis of negative bidegree " << degree;
    throw InvalidInput(os.str());
  }
  x_parts_ = compositions(degree.a, space.m + 1);
  y_parts_ = compositions(degree.b, space.n + 1);
  for (std::size_t i = 0; i < x_parts_.size(); ++i) x_index_.emplace(x_parts_[i], i);
  for (std::size_t i = 0; i < y_parts_.size(); ++i) y_index_.emplace(y_parts_[i], i);
}

Exponent MonomialBasis::exponent(std::size_t index) const {
  const auto& x = x_parts_[index / y_parts_.size()];
  const auto& y = y_parts_[index % y_parts_.size()];
  Exponent e(x);
  e.insert(e.end(), y.begin(), y.end());
  return e;
}

std::vector<Exponent> MonomialBasis::exponents() const {
  std::vector<Exponent> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(exponent(i));
  return out;
}

std::size_t MonomialBasis::index_of(std::span<const int> e) const {
  const std::size_t mx = static_cast<std::size_t>(space_.m) + 1;
  if (e.size() != mx + static_cast<std::size_t>(space_.n) + 1) return size();
  const auto xi = x_index_.find(std::vector<int>(e.begin(), e.begin() + mx));
  if (xi == x_index_.end()) return size();
  const auto yi = y_index_.find(std::vector<int>(e.begin() + mx, e.end()));
  if (yi == y_index_.end()) return size();
  return xi->second * y_parts_.size() + yi->second;
}

MonomialBasis monomial_basis(AmbientSpace space, Bidegree d) { return MonomialBasis(space, d); }

// --- sampling ----------------------------------------------------------------

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

FormSample sample_form(AmbientSpace space, Bidegree degree, std::uint32_t prime, std::uint64_t seed,
                       std::uint64_t ordinal) {
  const std::size_t count = monomial_basis(space, degree).size();
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(ordinal),
                    static_cast<std::uint32_t>(ordinal >> 32),
                    static_cast<std::uint32_t>(degree.a),
                    static_cast<std::uint32_t>(degree.b),
                    prime};
  std::mt19937_64 gen(seq);
  // Rejection keeps the residues exactly uniform and independent of the
  // standard library's distribution implementation.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % prime;
  FormSample f{degree, prime, seed, {}};
  f.coefficients.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t x;
    do {
      x = gen();
    } while (x >= limit);
    f.coefficients.push_back(static_cast<std::uint32_t>(x % prime));
  }
  return f;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return splitmix64(master ^ splitmix64(trial));
}

// --- linear algebra ------------------------------------------------------------

SparseMatrix ideal_matrix(AmbientSpace space, std::span<const FormSample> forms, Bidegree twist) {
  const MonomialBasis target(space, twist);
  SparseMatrix matrix;
  matrix.rows = target.size();
  for (const auto& form : forms) {
    const Bidegree rest = twist - form.degree;
    if (rest.a < 0 || rest.b < 0) continue;
    const auto form_exponents = monomial_basis(space, form.degree).exponents();
    const MonomialBasis multipliers(space, rest);
    for (std::size_t mu = 0; mu < multipliers.size(); ++mu) {
      const Exponent shift = multipliers.exponent(mu);
      auto& column = matrix.columns.emplace_back();
      Exponent product(shift.size());
      for (std::size_t k = 0; k < form_exponents.size(); ++k) {
        if (form.coefficients[k] == 0) continue;
        for (std::size_t v = 0; v < shift.size(); ++v) product[v] = form_exponents[k][v] + shift[v];
        column.emplace_back(static_cast<std::uint32_t>(target.index_of(product)), form.coefficients[k]);
      }
      std::sort(column.begin(), column.end());
    }
  }
  return matrix;
}

std::size_t rank_mod_p(const SparseMatrix& matrix, std::uint32_t prime) {
  const std::size_t width = matrix.rows;
  const std::size_t count = matrix.columns.size();
  if (width == 0 || count == 0) return 0;
  const std::uint64_t p = prime;
  // Below 2^16 every update adds less than 2^32, so rows can accumulate
  // unreduced in 64 bits for up to 2^32 pivot steps.
  const bool lazy = p < (1U << 16);

  // Each sparse column becomes one dense vector; eliminate across vectors.
  std::vector<std::uint64_t> dense(count * width, 0);
  for (std::size_t i = 0; i < count; ++i)
    for (const auto& [row, value] : matrix.columns[i]) dense[i * width + row] = value % p;

  std::size_t rank = 0;
  for (std::size_t j = 0; j < width && rank < count; ++j) {
    std::size_t pivot = count;
    for (std::size_t i = rank; i < count; ++i) {
      auto& e = dense[i * width + j];
      e %= p;
      if (e != 0 && pivot == count) pivot = i;
    }
    if (pivot == count) continue;

    std::uint64_t* top = &dense[rank * width];
    if (pivot != rank) std::swap_ranges(top + j, top + width, &dense[pivot * width + j]);
    const std::uint64_t inv = pow_mod(top[j], p - 2, p);
    for (std::size_t k = j; k < width; ++k) top[k] = top[k] % p * inv % p;

    for (std::size_t i = rank + 1; i < count; ++i) {
      std::uint64_t* row = &dense[i * width];
      const std::uint64_t e = row[j];
      if (e == 0) continue;
      const std::uint64_t f = p - e;
      row[j] = 0;
      if (lazy) {
        for (std::size_t k = j + 1; k < width; ++k) row[k] += f * top[k];
      } else {
        for (std::size_t k = j + 1; k < width; ++k) row[k] = (row[k] + f * top[k]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t ideal_dim_bruteforce(AmbientSpace space, std::span<const Bidegree> generators, Bidegree twist,
                                 std::uint32_t prime, std::uint64_t seed) {
  check_prime(prime);
  if (twist.a < 0 || twist.b < 0) {
    std::ostringstream os;
    os << "oracle twist " << twist << " must be nonnegative";
    throw InvalidInput(os.str());
  }
  std::vector<FormSample> forms;
  forms.reserve(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i)
    forms.push_back(sample_form(space, generators[i], prime, seed, i));
  return rank_mod_p(ideal_matrix(space, forms, twist), prime);
}

// --- end-to-end ------------------------------------------------------------------

bool OracleReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const OracleRow& r) { return r.pass; });
}

OracleReport verify_spec(const CiSpec& spec, long d_max, std::uint32_t prime, std::uint64_t seed, int trials) {
  require_acm(spec);
  check_prime(prime);
  if (trials < 1) throw InvalidInput("oracle needs at least one trial, got " + std::to_string(trials));
  if (d_max < 0) throw InvalidInput("oracle d_max must be >= 0, got " + std::to_string(d_max));

  OracleReport report;
  report.prime = prime;
  report.seed = seed;
  report.trials = trials;

  const auto policy = std::thread::hardware_concurrency() > 1 ? std::launch::async : std::launch::deferred;
  for (long d = 0; d <= d_max; ++d) {
    const Bidegree twist{d, d};
    OracleRow row;
    row.d = d;
    row.predicted = ideal_h0(spec.space(), spec.bidegrees(), twist);

    std::vector<std::future<std::size_t>> pending;
    for (int t = 0; t < trials; ++t) {
      pending.push_back(std::async(policy, [&spec, twist, prime, s = trial_seed(seed, t)] {
        return ideal_dim_bruteforce(spec.space(), spec.bidegrees(), twist, prime, s);
      }));
    }
    bool any_equal = false;
    bool none_above = true;
    for (auto& f : pending) {
      const std::size_t r = f.get();
      row.observed.push_back(r);
      const Integer observed(static_cast<unsigned long>(r));
      any_equal = any_equal || observed == row.predicted;
      none_above = none_above && observed <= row.predicted;
    }
    row.pass = any_equal && none_above;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace bici
