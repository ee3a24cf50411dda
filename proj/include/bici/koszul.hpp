#pragma once

// Graded pieces of the ideal, Hilbert functions and Hilbert polynomials of
// complete intersections, all by inclusion-exclusion over the Koszul complex.

#include <span>

#include "bici/cispec.hpp"
#include "bici/combinat.hpp"

namespace bici {

/// dim H^0(X, I_Y(twist)) for Y cut out by generic forms of the prefix bidegrees:
///   sum over nonempty S of (-1)^{|S|+1} h0_dim(twist - sum_S (a_i, b_i)).
/// The sum is exact when no H^q(O(twist - sum_S)) with 1 <= q < |S| survives,
/// which the ordering conditions secure at the generator bidegrees used by the
/// tower. Off-diagonal twists can miss a correction term.
/// An empty prefix gives 0. A nonempty prefix must form an ACM spec; otherwise
/// NotAcm is thrown (InvalidInput if it is not even a valid spec).
Integer ideal_h0(AmbientSpace space, std::span<const Bidegree> prefix, Bidegree twist);

/// h0_dim((d,d)) - ideal_h0(all generators, (d,d)). Requires an ACM spec and d >= 0.
Integer hilbert_function(const CiSpec& spec, long d);

/// Alternating sum over all subsets of binomial(m + t - A_S, m) binomial(n + t - B_S, n).
/// No ACM check; this is the Euler characteristic of O_Y(t,t) for any
/// complete intersection with these generator bidegrees.
RationalPolynomial koszul_hilbert_polynomial(AmbientSpace space, std::span<const Bidegree> generators);

/// Hilbert polynomial under the Segre embedding. Requires an ACM spec; the
/// result has degree m+n-c and is checked to be integer-valued.
RationalPolynomial hilbert_polynomial(const CiSpec& spec);

struct CurveGenus {
  Integer genus;
  Integer degree;            // leading coefficient of p(t) = degree * t + 1 - genus
  bool canonical = false;    // dualizing bidegree is (1,1)
  bool degree_is_2g_minus_2 = false;
};

/// Requires an ACM spec of dimension one.
CurveGenus genus_of_curve(const CiSpec& spec);

/// hilbert_function(spec, d) == hilbert_polynomial(spec)(d) for all d in
/// [d_min, d_max]. Requires d_min >= sum a_i + sum b_i.
bool hilbert_function_consistency(const CiSpec& spec, long d_min, long d_max);

}  // namespace bici
