#pragma once

// Thresholds of the ideal of a point (beta^0 <= beta^1) and of multiplication
// maps of sections against semihomogeneous bundles (s^0, s^1), with every
// conversion between them.
//
// Values here are inputs or derived bookkeeping; nothing in this header
// computes beta for a particular abelian variety.

#include <string>
#include <utility>
#include <vector>

#include "polnum/errors.hpp"
#include "polnum/numeric.hpp"
#include "polnum/polarization.hpp"

namespace polnum {

enum class Provenance { user_input, derived, bound_only };

inline const char *to_string(Provenance p) {
  switch (p) {
  case Provenance::user_input:
    return "user-input";
  case Provenance::derived:
    return "derived";
  case Provenance::bound_only:
    return "bound-only";
  }
  return "?";
}

struct ThresholdPair {
  ExtendedRational beta0;
  ExtendedRational beta1;
  PolarizationType pol;
  Provenance provenance;

  ThresholdPair(ExtendedRational b0, ExtendedRational b1, PolarizationType t,
                Provenance p)
      : beta0(std::move(b0)), beta1(std::move(b1)), pol(std::move(t)),
        provenance(p) {
    if (!(beta0 > 0) || !(beta1 > 0))
      throw DomainError("thresholds must be positive");
    if (beta0 > beta1)
      throw DomainError("beta0 must not exceed beta1");
    // beta1 <= 1 holds for integral polarizations; derived fractional-scale
    // values are not checked.
    if (provenance == Provenance::user_input && beta1 > 1)
      throw DomainError("beta1 of an integral polarization is at most 1");
  }
};

struct SurjInjThresholds {
  ExtendedRational s0;
  ExtendedRational s1;
  ExactRational nu;
  PolarizationType pol;

  SurjInjThresholds(ExtendedRational a, ExtendedRational b, ExactRational n,
                    PolarizationType t)
      : s0(std::move(a)), s1(std::move(b)), nu(std::move(n)),
        pol(std::move(t)) {
    if (!(s0 > 0) || !(s1 > 0))
      throw DomainError("s thresholds must be positive");
    if (nu.sign() <= 0)
      throw DomainError("nu must be positive");
  }
};

/// s = β/(ν-β), or +inf when β >= ν.
inline ExtendedRational s_from_beta(const ExtendedRational &beta,
                                    const ExactRational &nu) {
  if (nu.sign() <= 0)
    throw DomainError("nu must be positive");
  if (!(beta > 0))
    throw DomainError("beta must be positive");
  if (beta >= ExtendedRational(nu))
    return ExtendedRational::infinity();
  const ExactRational &b = beta.finite();
  return b / (nu - b);
}

/// beta recovered from s. When exact is false only beta >= value is known.
struct BetaValue {
  ExactRational value;
  bool exact;
};

inline BetaValue beta_from_s(const ExtendedRational &s,
                             const ExactRational &nu) {
  if (nu.sign() <= 0)
    throw DomainError("nu must be positive");
  if (!(s > 0))
    throw DomainError("s must be positive");
  if (s.is_infinite())
    return {nu, false};
  const ExactRational &v = s.finite();
  return {nu * v / (ExactRational(1) + v), true};
}

/// beta^{1-i} of the dual polarization from beta^i: 1/(d_1 d_g beta^i).
/// The index only labels the result; the formula is the same for i = 0, 1.
inline ExactRational dual_beta(const ExtendedRational &beta, int i,
                               const PolarizationType &t) {
  if (i != 0 && i != 1)
    throw DomainError("threshold index must be 0 or 1");
  if (beta.is_infinite())
    throw DomainError("no finite dual threshold for beta = +inf");
  const ExactRational &b = beta.finite();
  if (b.sign() <= 0)
    throw DomainError("beta must be positive");
  return (ExactRational(t.d1dg()) * b).reciprocal();
}

/// beta^1 of l from s^0 of nu times the dual polarization:
/// (s0 + 1)/(s0 d_1 d_g nu). For s0 = +inf the limit 1/(d_1 d_g nu) is
/// returned with exact = false.
inline BetaValue beta1_from_dual_s0(const ExtendedRational &s0,
                                    const ExactRational &nu,
                                    const PolarizationType &t) {
  if (nu.sign() <= 0)
    throw DomainError("nu must be positive");
  if (!(s0 > 0))
    throw DomainError("s0 must be positive");
  const ExactRational m = ExactRational(t.d1dg()) * nu;
  if (s0.is_infinite())
    return {m.reciprocal(), false};
  const ExactRational &s = s0.finite();
  return {(s + 1) / (s * m), true};
}

/// s at scale mu from s at scale nu, keeping ν s/(1+s) fixed. +inf when the
/// common beta is >= mu.
inline ExtendedRational cross_nu(const ExactRational &s_nu,
                                 const ExactRational &nu,
                                 const ExactRational &mu) {
  if (s_nu.sign() <= 0 || nu.sign() <= 0 || mu.sign() <= 0)
    throw DomainError("cross_nu requires positive arguments");
  const ExactRational top = nu * s_nu;
  const ExactRational bottom = mu * (ExactRational(1) + s_nu) - top;
  if (bottom.sign() <= 0)
    return ExtendedRational::infinity();
  return top / bottom;
}

/// What the thresholds say about the simple bundle of slope λ.
enum class SectionStatus {
  globally_generated,             // λ > beta1
  generically_globally_generated, // λ = beta1, not globally generated
  sections_nowhere_vanishing,     // λ < beta0
  zeros_not_filling,              // λ = beta0, ev injective as a sheaf map
};

inline const char *to_string(SectionStatus s) {
  switch (s) {
  case SectionStatus::globally_generated:
    return "globally generated";
  case SectionStatus::generically_globally_generated:
    return "generically globally generated, not globally generated";
  case SectionStatus::sections_nowhere_vanishing:
    return "sections nowhere vanishing";
  case SectionStatus::zeros_not_filling:
    return "sections have zeros not filling A";
  }
  return "?";
}

inline std::vector<SectionStatus> classify(const ThresholdPair &p,
                                           const ExactRational &lambda) {
  std::vector<SectionStatus> out;
  const ExtendedRational l(lambda);
  if (l > p.beta1)
    out.push_back(SectionStatus::globally_generated);
  if (l == p.beta1)
    out.push_back(SectionStatus::generically_globally_generated);
  if (l < p.beta0)
    out.push_back(SectionStatus::sections_nowhere_vanishing);
  if (l == p.beta0)
    out.push_back(SectionStatus::zeros_not_filling);
  return out;
}

} // namespace polnum
