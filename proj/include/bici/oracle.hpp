#pragma once

// Brute-force check of the Koszul counts: sample random bihomogeneous forms
// over F_p, span all products F_i * monomial in a target bidegree, and take
// the rank.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "bici/cispec.hpp"
#include "bici/combinat.hpp"

namespace bici {

inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr int kDefaultTrials = 3;
/// Smallest accepted oracle prime (2^13).
inline constexpr std::uint32_t kMinOraclePrime = 8192;

using Exponent = std::vector<int>;  // m+1 x-exponents followed by n+1 y-exponents

/// Monomials of one bidegree, x-part major, each part in descending lex order.
class MonomialBasis {
public:
  MonomialBasis(AmbientSpace space, Bidegree degree);

  AmbientSpace space() const { return space_; }
  Bidegree degree() const { return degree_; }
  std::size_t size() const { return x_parts_.size() * y_parts_.size(); }
  Exponent exponent(std::size_t index) const;
  std::vector<Exponent> exponents() const;
  /// Position of a monomial of this bidegree; size() if it does not belong.
  std::size_t index_of(std::span<const int> exponent) const;

private:
  AmbientSpace space_;
  Bidegree degree_;
  std::vector<std::vector<int>> x_parts_;
  std::vector<std::vector<int>> y_parts_;
  std::map<std::vector<int>, std::size_t> x_index_;
  std::map<std::vector<int>, std::size_t> y_index_;
};

/// Throws InvalidInput for a negative bidegree.
MonomialBasis monomial_basis(AmbientSpace space, Bidegree d);

/// Deterministic primality test for 32-bit moduli.
bool is_prime(std::uint64_t p);

struct FormSample {
  Bidegree degree;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> coefficients;  // indexed by monomial_basis(space, degree)
};

/// Dense form with coefficients uniform in [0, p), reproducible from
/// (seed, prime, degree, ordinal).
FormSample sample_form(AmbientSpace space, Bidegree degree, std::uint32_t prime, std::uint64_t seed,
                       std::uint64_t ordinal);

/// Seed of trial t derived from a master seed.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

/// Column-major sparse matrix over F_p; entries are (row, value) with value in [1, p).
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> columns;
};

/// Columns F * mu for every form F and every monomial mu of bidegree
/// twist - deg(F); rows indexed by monomial_basis(space, twist). Forms whose
/// bidegree exceeds the twist contribute nothing.
SparseMatrix ideal_matrix(AmbientSpace space, std::span<const FormSample> forms, Bidegree twist);

/// Rank over F_p by Gaussian elimination.
std::size_t rank_mod_p(const SparseMatrix& matrix, std::uint32_t prime);

/// Rank of the degree-twist piece of the ideal of one random form per
/// generator. Requires a prime >= 2^13 and twist >= 0 componentwise.
std::size_t ideal_dim_bruteforce(AmbientSpace space, std::span<const Bidegree> generators, Bidegree twist,
                                 std::uint32_t prime, std::uint64_t seed);

struct OracleRow {
  long d = 0;
  Integer predicted;
  std::vector<std::size_t> observed;  // one per trial
  bool pass = false;                  // some trial equal, none above
};

struct OracleReport {
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = kDefaultSeed;
  int trials = kDefaultTrials;
  std::vector<OracleRow> rows;

  bool all_pass() const;
};

/// Compares ideal_h0(spec, (d,d)) with the brute-force rank for d = 0..d_max.
OracleReport verify_spec(const CiSpec& spec, long d_max, std::uint32_t prime = kDefaultPrime,
                         std::uint64_t seed = kDefaultSeed, int trials = kDefaultTrials);

}  // namespace bici
