#pragma once

// Exact binomials, univariate rational polynomials and line-bundle cohomology
// on P^m x P^n.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bici {

using Integer = mpz_class;
using Rational = mpq_class;

struct AmbientSpace {
  int m = 1;
  int n = 1;

  AmbientSpace() = default;
  /// Throws InvalidInput unless m >= 1 and n >= 1.
  AmbientSpace(int m_, int n_);

  int dimension() const { return m + n; }
  AmbientSpace swapped() const { return {n, m}; }

  friend bool operator==(const AmbientSpace&, const AmbientSpace&) = default;
};

/// Twist (a, b). Ordering is lexicographic: a first, then b.
struct Bidegree {
  long a = 0;
  long b = 0;

  Bidegree swapped() const { return {b, a}; }

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  friend Bidegree operator+(Bidegree x, Bidegree y) { return {x.a + y.a, x.b + y.b}; }
  friend Bidegree operator-(Bidegree x, Bidegree y) { return {x.a - y.a, x.b - y.b}; }
  Bidegree& operator+=(Bidegree o) {
    a += o.a;
    b += o.b;
    return *this;
  }
};

std::ostream& operator<<(std::ostream& os, const Bidegree& d);

/// Generalized binomial x(x-1)...(x-k+1)/k!, valid for negative x.
Integer binomial(const Integer& x, unsigned long k);
Integer binomial(long x, unsigned long k);

class RationalPolynomial {
public:
  RationalPolynomial() = default;
  /// Coefficients indexed by power of t; trailing zeros are trimmed.
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  RationalPolynomial(std::initializer_list<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  /// binomial(t + shift, k) expanded as a polynomial of degree k in t.
  static RationalPolynomial binomial_in_t(long shift, unsigned k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Zero for powers above the degree.
  Rational coefficient(std::size_t power) const;
  Rational leading_coefficient() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& t) const;
  bool integer_valued_at(long t) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& c);

  friend RationalPolynomial operator+(RationalPolynomial x, const RationalPolynomial& y) { return x += y; }
  friend RationalPolynomial operator-(RationalPolynomial x, const RationalPolynomial& y) { return x -= y; }
  friend RationalPolynomial operator*(RationalPolynomial x, const RationalPolynomial& y) { return x *= y; }
  friend RationalPolynomial operator*(RationalPolynomial x, const Rational& c) { return x *= c; }
  friend bool operator==(const RationalPolynomial& x, const RationalPolynomial& y) {
    return x.coeffs_ == y.coeffs_;
  }

  /// "10t - 5", "2t^2 + 3t + 1", "(1/2)t^2 - 1/2"; "0" for the zero polynomial.
  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p);

/// h^0 ... h^{m+n} of a line bundle.
struct CohomologyVector {
  std::vector<Integer> dims;

  std::size_t size() const { return dims.size(); }
  const Integer& operator[](std::size_t i) const { return dims[i]; }
  friend bool operator==(const CohomologyVector&, const CohomologyVector&) = default;
};

/// Number of monomials of bidegree d; zero when either entry is negative.
Integer h0_dim(AmbientSpace space, Bidegree d);

/// Cohomology of O(a, b) via Kunneth and Bott on each factor.
CohomologyVector line_bundle_cohomology(AmbientSpace space, Bidegree d);

/// Alternating sum of line_bundle_cohomology.
Integer euler_characteristic(AmbientSpace space, Bidegree d);

}  // namespace bici
