#pragma once

// Numerical invariants of simple semihomogeneous bundles of slope a/b with
// respect to a polarization of type (d_1, ..., d_g).
//
// u(a, b) is the square root of the order of A[b] ∩ K(a l). Since
// K(a l) = ⊕_i (Z/|a| d_i)^2 and A[b] ∩ K(a l) is its b-torsion, the order is
// ∏_i gcd(b, |a| d_i)^2. The rank is b^g / u and the Euler characteristic is
// a^g χ(l) / u.

#include <string>

#include "polnum/errors.hpp"
#include "polnum/numeric.hpp"
#include "polnum/polarization.hpp"

namespace polnum {

inline Integer u_invariant(const PolarizationType &t, const Integer &a,
                           const Integer &b) {
  if (a == 0)
    throw DomainError("slope numerator must be nonzero");
  if (b <= 0)
    throw DomainError("slope denominator must be positive");
  if (gcd(a, b) != 1)
    throw DomainError("slope not reduced");
  const Integer abs_a = abs(a);
  Integer u = 1;
  for (const auto &d : t.dims())
    u *= gcd(b, abs_a * d);
  return u;
}

struct SemihomClass {
  PolarizationType base;
  ExactRational slope;
  Integer rank;
  Integer euler;
  Integer u;
  Side side = Side::primal;

  /// rank * slope * d_1; the determinant of the bundle is this multiple of
  /// the primitive class l / d_1.
  Integer determinant_multiple() const {
    const ExactRational d = ExactRational(rank) * slope * ExactRational(base.first());
    if (!d.is_integer())
      throw InvariantViolation("rank * slope * d1 is not integral for slope " +
                               slope.to_string());
    return d.numerator();
  }
};

inline SemihomClass make_class(const PolarizationType &t,
                               const ExactRational &slope,
                               Side side = Side::primal) {
  if (slope.is_zero())
    throw DomainError("slope must be nonzero");
  const Integer &a = slope.numerator();
  const Integer &b = slope.denominator();
  const unsigned g = t.g();
  const Integer u = u_invariant(t, a, b);

  const Integer bg = ipow(b, g);
  const Integer ag_chi = ipow(a, g) * chi(t);
  if (bg % u != 0 || ag_chi % u != 0)
    throw InvariantViolation("u(" + a.str() + "," + b.str() +
                             ") does not divide b^g and a^g chi");

  SemihomClass c{t, slope, bg / u, ag_chi / u, u, side};
  c.determinant_multiple();
  return c;
}

/// Class of the Fourier-Mukai image of E of the given slope: it lives on the
/// dual type with slope -1/(d_1 d_g slope) and its rank is |χ(E)|.
inline SemihomClass fm_image_class(const PolarizationType &t,
                                   const ExactRational &slope,
                                   Side side = Side::primal) {
  if (slope.is_zero())
    throw DomainError("slope must be nonzero");
  const SemihomClass source = make_class(t, slope, side);
  const ExactRational image_slope = -(ExactRational(t.d1dg()) * slope).reciprocal();
  SemihomClass image = make_class(dual_type(t), image_slope, opposite(side));
  if (image.rank != abs(source.euler))
    throw InvariantViolation("FM image rank " + image.rank.str() +
                             " != |euler| " + abs(source.euler).str() +
                             " of source slope " + slope.to_string());
  if (abs(image.euler) != source.rank)
    throw InvariantViolation("FM image |euler| " + abs(image.euler).str() +
                             " != source rank " + source.rank.str());
  return image;
}

} // namespace polnum
