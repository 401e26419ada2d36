#pragma once

// Cohomological rank functions as exact black-box evaluators Q -> Q>=0 with
// metadata, plus the combinators that transform them: twisting by a
// semihomogeneous class, rescaling the polarization, isogeny pullback,
// Fourier-Mukai transform, the ideal-sheaf duality and the change of
// variable relating the ideal of a point to the evaluation complex.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polnum/errors.hpp"
#include "polnum/numeric.hpp"
#include "polnum/polarization.hpp"
#include "polnum/semihom.hpp"

namespace polnum {

/// A rational interval, possibly unbounded on either side.
struct Interval {
  std::optional<ExactRational> lo;
  std::optional<ExactRational> hi;
  bool lo_open = true;
  bool hi_open = true;

  static Interval whole() { return {}; }
  static Interval positive() { return {ExactRational(0), std::nullopt, true, true}; }
  static Interval negative() { return {std::nullopt, ExactRational(0), true, true}; }
  static Interval open(ExactRational a, ExactRational b) {
    return {std::move(a), std::move(b), true, true};
  }

  bool contains(const ExactRational &x) const {
    if (lo && (lo_open ? !(x > *lo) : !(x >= *lo)))
      return false;
    if (hi && (hi_open ? !(x < *hi) : !(x <= *hi)))
      return false;
    return true;
  }

  /// { x - delta : x in this }
  Interval shifted_down(const ExactRational &delta) const {
    Interval r = *this;
    if (r.lo)
      *r.lo -= delta;
    if (r.hi)
      *r.hi -= delta;
    return r;
  }

  /// { x / factor : x in this }, factor > 0
  Interval divided(const ExactRational &factor) const {
    Interval r = *this;
    if (r.lo)
      *r.lo /= factor;
    if (r.hi)
      *r.hi /= factor;
    return r;
  }

  std::string to_string() const {
    std::string s = lo ? (lo_open ? "(" : "[") + lo->to_string() : "(-inf";
    s += ", ";
    s += hi ? hi->to_string() + (hi_open ? ")" : "]") : "+inf)";
    return s;
  }
};

class RankFunction {
public:
  using Evaluator = std::function<ExactRational(const ExactRational &)>;

  RankFunction(Evaluator eval, int degree, Side side,
               FractionalPolarization pol, Interval domain = Interval::whole())
      : eval_(std::make_shared<const Evaluator>(std::move(eval))),
        degree_(degree), side_(side), pol_(std::move(pol)),
        domain_(std::move(domain)) {}

  ExactRational operator()(const ExactRational &x) const {
    if (!domain_.contains(x))
      throw DomainError("evaluation at " + x.to_string() + " outside domain " +
                        domain_.to_string());
    ExactRational v = (*eval_)(x);
    if (v.sign() < 0)
      throw InvariantViolation("rank function returned negative value " +
                               v.to_string() + " at " + x.to_string());
    return v;
  }

  int degree() const { return degree_; }
  Side side() const { return side_; }
  const FractionalPolarization &pol() const { return pol_; }
  const Interval &domain() const { return domain_; }

  RankFunction with_degree(int degree) const {
    RankFunction r = *this;
    r.degree_ = degree;
    return r;
  }

private:
  std::shared_ptr<const Evaluator> eval_;
  int degree_;
  Side side_;
  FractionalPolarization pol_;
  Interval domain_;
};

/// h^0, ..., h^g of one object; index = cohomological degree.
using RankFamily = std::vector<RankFunction>;

inline RankFunction zero_function(int degree, Side side,
                                  const FractionalPolarization &pol) {
  return RankFunction([](const ExactRational &) { return ExactRational(0); },
                      degree, side, pol);
}

/// h^i of the structure sheaf: χ λ^g in degree 0 for λ > 0, χ (-λ)^g in
/// degree g for λ < 0, zero elsewhere.
inline RankFamily model_structure_sheaf(const PolarizationType &t,
                                        Side side = Side::primal) {
  const unsigned g = t.g();
  const ExactRational c(chi(t));
  const FractionalPolarization pol(t, 1);
  RankFamily family;
  for (unsigned i = 0; i <= g; ++i)
    family.push_back(zero_function(static_cast<int>(i), side, pol));
  family[0] = RankFunction(
      [c, g](const ExactRational &x) {
        return x.sign() > 0 ? c * x.pow(g) : ExactRational(0);
      },
      0, side, pol);
  family[g] = RankFunction(
      [c, g](const ExactRational &x) {
        return x.sign() < 0 ? c * (-x).pow(g) : ExactRational(0);
      },
      static_cast<int>(g), side, pol);
  return family;
}

/// t -> rank(C) * f(slope(C) + t)
inline RankFunction tensor_semihom(const RankFunction &f,
                                   const SemihomClass &c) {
  if (!(f.pol().base() == c.base) || f.pol().scale() != 1 ||
      f.side() != c.side)
    throw DomainError("base mismatch between rank function and class");
  const ExactRational r(c.rank);
  const ExactRational s = c.slope;
  return RankFunction([f, r, s](const ExactRational &t) { return r * f(s + t); },
                      f.degree(), f.side(), f.pol(),
                      f.domain().shifted_down(s));
}

/// h^i of the simple semihomogeneous bundle of class c.
inline RankFamily model_semihom(const SemihomClass &c) {
  RankFamily family;
  for (const auto &f : model_structure_sheaf(c.base, c.side))
    family.push_back(tensor_semihom(f, c));
  return family;
}

/// h^i of the Fourier-Mukai transform of the simple bundle of slope λ0 on
/// type t. The image is the bundle of fm_image_class, placed in degree 0
/// when λ0 > 0 (IT(0) source) and in degree g when λ0 < 0 (IT(g) source).
inline RankFamily fm_transform_model(const PolarizationType &t,
                                     const ExactRational &slope,
                                     Side side = Side::primal) {
  const SemihomClass image = fm_image_class(t, slope, side);
  const RankFamily bundle = model_semihom(image);
  const int g = static_cast<int>(t.g());
  const int shift = slope.sign() > 0 ? 0 : g;
  const FractionalPolarization pol(image.base, 1);
  RankFamily family;
  for (int j = 0; j <= g; ++j) {
    const int src = j - shift;
    if (src >= 0 && src <= g)
      family.push_back(bundle[static_cast<std::size_t>(src)].with_degree(j));
    else
      family.push_back(zero_function(j, image.side, pol));
  }
  return family;
}

/// λ -> f(ν λ), on the polarization scaled by ν.
inline RankFunction scale_polarization(const RankFunction &f,
                                       const ExactRational &nu) {
  if (nu.sign() <= 0)
    throw DomainError("scale must be positive");
  FractionalPolarization pol(f.pol().base(), f.pol().scale() * nu);
  return RankFunction([f, nu](const ExactRational &x) { return f(nu * x); },
                      f.degree(), f.side(), std::move(pol),
                      f.domain().divided(nu));
}

/// Multiplicativity under an isogeny of the given degree.
inline RankFunction isogeny_pullback(const RankFunction &f,
                                     const Integer &degree) {
  if (degree < 1)
    throw DomainError("isogeny degree must be >= 1");
  const ExactRational d(degree);
  return RankFunction([f, d](const ExactRational &x) { return d * f(x); },
                      f.degree(), f.side(), f.pol(), f.domain());
}

enum class FmSign { neg, pos };

/// Rank functions on type t from those of a transform on the dual type.
///   neg: h(λ) = χ (-λ)^g fhat(-1/(c λ)),  λ < 0, degree kept
///   pos: h(λ) = χ  λ^g  fhat( 1/(c λ)),  λ > 0, degree i -> g - i
/// with χ = χ(ν l) and c = (ν d_1)(ν d_g) for fhat living on ν times the dual
/// polarization.
inline RankFunction fm_transform(const RankFunction &fhat,
                                 const PolarizationType &t, FmSign sign) {
  if (!(fhat.pol().base() == dual_type(t)))
    throw DomainError("transform input must live on the dual type " +
                      dual_type(t).to_string());
  const FractionalPolarization pol(t, fhat.pol().scale());
  const ExactRational c = pol.formal_d1dg();
  const ExactRational x = pol.formal_chi();
  const unsigned g = t.g();
  const Side side = opposite(fhat.side());
  if (sign == FmSign::neg) {
    return RankFunction(
        [fhat, c, x, g](const ExactRational &lam) {
          return x * (-lam).pow(g) * fhat(-(c * lam).reciprocal());
        },
        fhat.degree(), side, pol, Interval::negative());
  }
  return RankFunction(
      [fhat, c, x, g](const ExactRational &lam) {
        return x * lam.pow(g) * fhat((c * lam).reciprocal());
      },
      static_cast<int>(g) - fhat.degree(), side, pol, Interval::positive());
}

/// h^i of the ideal of the origin on type t from h^{1-i} of the ideal of the
/// origin on the dual: λ -> f(1/(c λ)) for λ > 0.
inline RankFunction ideal_duality(const RankFunction &f,
                                  const PolarizationType &t, int i) {
  if (i != 0 && i != 1)
    throw DomainError("ideal duality is defined for degrees 0 and 1");
  if (f.degree() != 1 - i)
    throw DomainError("ideal duality to degree " + std::to_string(i) +
                      " needs an input of degree " + std::to_string(1 - i));
  if (!(f.pol().base() == dual_type(t)))
    throw DomainError("ideal duality input must live on the dual type " +
                      dual_type(t).to_string());
  const FractionalPolarization pol(t, f.pol().scale());
  const ExactRational c = pol.formal_d1dg();
  return RankFunction(
      [f, c](const ExactRational &lam) { return f((c * lam).reciprocal()); }, i,
      opposite(f.side()), pol, Interval::positive());
}

enum class EvDirection { forward, inverse };

/// Change of variable y = λ/(1-λ) between the ideal of the origin and the
/// evaluation complex of the bundle of slope ν, both on the polarization ν l:
///   forward: G on (0,inf) -> f(λ) = (1-λ)^g / (χ(ν l) r(ν)) G(λ/(1-λ)), λ in (0,1)
///   inverse: f on (0,1)   -> G(y) = χ(ν l) r(ν) (1+y)^g f(y/(1+y)),    y > 0
inline RankFunction ev_complex_relation(const RankFunction &f,
                                        const ExactRational &nu,
                                        const PolarizationType &t,
                                        EvDirection direction) {
  const FractionalPolarization pol(t, nu);
  if (!(f.pol() == pol))
    throw DomainError("evaluation-complex relation input must live on " +
                      nu.to_string() + " times the polarization " +
                      t.to_string());
  const ExactRational weight =
      pol.formal_chi() * ExactRational(make_class(t, nu).rank);
  const unsigned g = t.g();
  if (direction == EvDirection::forward) {
    return RankFunction(
        [f, weight, g](const ExactRational &lam) {
          const ExactRational one_minus = ExactRational(1) - lam;
          return one_minus.pow(g) / weight * f(lam / one_minus);
        },
        f.degree(), f.side(), pol, Interval::open(0, 1));
  }
  return RankFunction(
      [f, weight, g](const ExactRational &y) {
        const ExactRational one_plus = ExactRational(1) + y;
        return weight * one_plus.pow(g) * f(y / one_plus);
      },
      f.degree(), f.side(), pol, Interval::positive());
}

} // namespace polnum
