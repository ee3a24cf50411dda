#include "bici/koszul.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "bici/errors.hpp"

namespace bici {

namespace {

// Calls fn(sum, parity) for every subset (including the empty one when
// include_empty), where parity is the subset size mod 2.
template <typename Fn>
void for_each_subset(std::span<const Bidegree> gens, bool include_empty, Fn&& fn) {
  const std::size_t c = gens.size();
  for (unsigned long mask = include_empty ? 0 : 1; mask < (1UL << c); ++mask) {
    Bidegree sum{0, 0};
    int size = 0;
    for (std::size_t i = 0; i < c; ++i) {
      if (mask & (1UL << i)) {
        sum += gens[i];
        ++size;
      }
    }
    fn(sum, size % 2);
  }
}

}  // namespace

Integer ideal_h0(AmbientSpace space, std::span<const Bidegree> prefix, Bidegree twist) {
  if (prefix.empty()) return 0;
  require_acm(CiSpec::make(space, std::vector<Bidegree>(prefix.begin(), prefix.end())));

  Integer total = 0;
  for_each_subset(prefix, false, [&](Bidegree sum, int odd) {
    const Integer h = h0_dim(space, twist - sum);
    if (odd)
      total += h;
    else
      total -= h;
  });
  return total;
}

Integer hilbert_function(const CiSpec& spec, long d) {
  require_acm(spec);
  if (d < 0) throw InvalidInput("hilbert_function: degree must be >= 0, got " + std::to_string(d));
  const Bidegree diagonal{d, d};
  return h0_dim(spec.space(), diagonal) - ideal_h0(spec.space(), spec.bidegrees(), diagonal);
}

RationalPolynomial koszul_hilbert_polynomial(AmbientSpace space, std::span<const Bidegree> generators) {
  RationalPolynomial p;
  for_each_subset(generators, true, [&](Bidegree sum, int odd) {
    auto term = RationalPolynomial::binomial_in_t(space.m - sum.a, space.m) *
                RationalPolynomial::binomial_in_t(space.n - sum.b, space.n);
    if (odd)
      p -= term;
    else
      p += term;
  });
  return p;
}

RationalPolynomial hilbert_polynomial(const CiSpec& spec) {
  require_acm(spec);
  auto p = koszul_hilbert_polynomial(spec.space(), spec.bidegrees());
  if (p.degree() != spec.dimension()) {
    std::ostringstream os;
    os << "Hilbert polynomial of " << spec.to_string() << " has degree " << p.degree() << ", expected "
       << spec.dimension();
    throw std::logic_error(os.str());
  }
  for (long t = 0; t <= spec.space().dimension() + 2; ++t) {
    if (!p.integer_valued_at(t))
      throw std::logic_error("Hilbert polynomial " + p.to_string() + " is not integer-valued at t = " +
                             std::to_string(t));
  }
  return p;
}

CurveGenus genus_of_curve(const CiSpec& spec) {
  require_acm(spec);
  if (spec.dimension() != 1)
    throw InvalidInput(spec.to_string() + " is not a curve: dimension " + std::to_string(spec.dimension()));
  const auto p = hilbert_polynomial(spec);

  CurveGenus out;
  const Rational constant = p.coefficient(0);
  const Rational leading = p.coefficient(1);
  // Integrality at t = 0, 1 already checked by hilbert_polynomial.
  out.genus = 1 - constant.get_num();
  out.degree = leading.get_num();
  out.canonical = dualizing_bidegree(spec) == Bidegree{1, 1};
  out.degree_is_2g_minus_2 = out.degree == 2 * out.genus - 2;
  return out;
}

bool hilbert_function_consistency(const CiSpec& spec, long d_min, long d_max) {
  require_acm(spec);
  const Bidegree t = spec.total();
  if (d_min < t.a + t.b) {
    std::ostringstream os;
    os << "hilbert_function_consistency: d_min = " << d_min << " is below the stabilization bound "
       << t.a + t.b;
    throw InvalidInput(os.str());
  }
  const auto p = hilbert_polynomial(spec);
  for (long d = d_min; d <= d_max; ++d) {
    if (Rational(hilbert_function(spec, d)) != p.evaluate(Rational(d))) return false;
  }
  return true;
}

}  // namespace bici
