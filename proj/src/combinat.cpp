#include "bici/combinat.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "bici/errors.hpp"

namespace bici {

AmbientSpace::AmbientSpace(int m_, int n_) : m(m_), n(n_) {
  if (m < 1 || n < 1) {
    throw InvalidInput("ambient P^" + std::to_string(m) + " x P^" + std::to_string(n) +
                       ": both factor dimensions must be >= 1");
  }
}

std::ostream& operator<<(std::ostream& os, const Bidegree& d) {
  return os << '(' << d.a << ',' << d.b << ')';
}

Integer binomial(const Integer& x, unsigned long k) {
  // After step i the accumulator holds binomial(x, i + 1), so every division is exact.
  Integer r = 1;
  for (unsigned long i = 0; i < k; ++i) {
    r *= x - i;
    if (r == 0) return r;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i + 1);
  }
  return r;
}

Integer binomial(long x, unsigned long k) { return binomial(Integer(x), k); }

// --- RationalPolynomial ----------------------------------------------------

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coefficients)
    : RationalPolynomial(std::vector<Rational>(coefficients)) {}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::binomial_in_t(long shift, unsigned k) {
  // (t + shift)(t + shift - 1)...(t + shift - k + 1) / k!
  RationalPolynomial result = constant(1);
  for (unsigned i = 0; i < k; ++i) {
    result *= RationalPolynomial({Rational(shift - static_cast<long>(i)), Rational(1)});
    result *= Rational(1, i + 1);
  }
  return result;
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational RationalPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational RationalPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool RationalPolynomial::integer_valued_at(long t) const {
  return evaluate(Rational(t)).get_den() == 1;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    const bool integral = mag.get_den() == 1;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) {
        if (integral)
          os << mag.get_str();
        else
          os << '(' << mag.get_str() << ')';
      }
      os << 't';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p) { return os << p.to_string(); }

// --- cohomology ------------------------------------------------------------

namespace {

// h^0 and h^k of O(e) on P^k; every other group vanishes.
Integer projective_h0(int k, long e) { return e >= 0 ? binomial(k + e, k) : Integer(0); }
Integer projective_htop(int k, long e) { return e <= -k - 1 ? binomial(-e - 1, k) : Integer(0); }

}  // namespace

Integer h0_dim(AmbientSpace space, Bidegree d) {
  if (d.a < 0 || d.b < 0) return 0;
  return binomial(space.m + d.a, space.m) * binomial(space.n + d.b, space.n);
}

CohomologyVector line_bundle_cohomology(AmbientSpace space, Bidegree d) {
  const int m = space.m;
  const int n = space.n;
  CohomologyVector v;
  v.dims.assign(static_cast<std::size_t>(m + n + 1), Integer(0));

  const Integer first[2] = {projective_h0(m, d.a), projective_htop(m, d.a)};
  const Integer second[2] = {projective_h0(n, d.b), projective_htop(n, d.b)};
  const int first_index[2] = {0, m};
  const int second_index[2] = {0, n};
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) v.dims[first_index[r] + second_index[s]] += first[r] * second[s];
  return v;
}

Integer euler_characteristic(AmbientSpace space, Bidegree d) {
  const auto h = line_bundle_cohomology(space, d);
  Integer chi = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i % 2 == 0)
      chi += h[i];
    else
      chi -= h[i];
  }
  return chi;
}

}  // namespace bici
