#pragma once

// Lower bound for the base point freeness threshold beta^1 of a polarization
// of type T:
//
//   beta^1 >= sup over admissible ν of  (1 / (d_1 d_g ν)) (1 + 1/r(ν)),
//
// where r(ν) is the rank of the simple semihomogeneous bundle of slope ν on
// the dual type, and ν is admissible when ν^g χ(dual) > 1. With a known
// beta^0 of the dual, every ν > beta^0 is admissible as well.
//
// maximize() searches reduced ν with denominator <= N. Since r >= 1 the
// value at ν never exceeds 2/(d_1 d_g ν), which bounds the scan from above.

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polnum/errors.hpp"
#include "polnum/numeric.hpp"
#include "polnum/polarization.hpp"
#include "polnum/semihom.hpp"

namespace polnum {

struct BoundResult {
  ExactRational best_nu;
  ExactRational bound;
  std::uint64_t candidates_tested = 0;
  std::optional<ExactRational> pruned_at;
  bool ge_half = false;
  bool ge_one = false;
};

/// The admissible region for ν.
class Admissibility {
public:
  explicit Admissibility(const PolarizationType &t,
                         std::optional<ExactRational> beta0_dual = std::nullopt)
      : g_(t.g()), chi_dual_(chi(dual_type(t))),
        beta0_dual_(std::move(beta0_dual)) {
    if (beta0_dual_ && beta0_dual_->sign() <= 0)
      throw DomainError("beta0 of the dual must be positive");
  }

  bool operator()(const ExactRational &nu) const {
    if (nu.sign() <= 0)
      return false;
    if (compare_power(nu, g_, chi_dual_) == std::strong_ordering::greater)
      return true;
    return beta0_dual_ && nu > *beta0_dual_;
  }

  /// Smallest numerator a >= 1 with a/den admissible (ignoring coprimality).
  Integer first_numerator(const Integer &den) const {
    // a = den + 1 is always admissible since chi_dual >= 1.
    Integer lo = 1, hi = den + 1;
    while (lo < hi) {
      const Integer mid = (lo + hi) / 2;
      if ((*this)(ExactRational::reduce(mid, den)))
        hi = mid;
      else
        lo = mid + 1;
    }
    return lo;
  }

  /// Smallest admissible integer.
  Integer first_integer() const { return first_numerator(1); }

  const std::optional<ExactRational> &beta0_dual() const { return beta0_dual_; }

private:
  unsigned g_;
  Integer chi_dual_;
  std::optional<ExactRational> beta0_dual_;
};

/// The bound expression at ν; throws when ν is not admissible.
inline ExactRational
bound_at(const PolarizationType &t, const ExactRational &nu,
         const std::optional<ExactRational> &beta0_dual = std::nullopt) {
  if (nu.sign() <= 0)
    throw DomainError("nu must be positive");
  if (!Admissibility(t, beta0_dual)(nu))
    throw DomainError("below admissibility threshold");
  const SemihomClass c = make_class(dual_type(t), nu, Side::dual);
  const ExactRational r(c.rank);
  return (ExactRational(t.d1dg()) * nu).reciprocal() *
         (ExactRational(1) + r.reciprocal());
}

namespace detail {

inline void set_milestones(BoundResult &r) {
  r.ge_half = r.bound >= ExactRational::reduce(1, 2);
  r.ge_one = r.bound >= 1;
}

// Larger value wins; ties go to the smaller ν.
inline bool improves(const ExactRational &value, const ExactRational &nu,
                     const std::optional<BoundResult> &best) {
  if (!best)
    return true;
  if (value != best->bound)
    return value > best->bound;
  return nu < best->best_nu;
}

} // namespace detail

/// Exact maximum of bound_at over admissible reduced ν with denominator at
/// most max_denominator. Returns nullopt when no candidate exists.
inline std::optional<BoundResult>
maximize(const PolarizationType &t, std::uint64_t max_denominator,
         const std::optional<ExactRational> &beta0_dual = std::nullopt) {
  if (max_denominator == 0)
    throw DomainError("max_denominator must be >= 1");
  const Admissibility admissible(t, beta0_dual);
  const ExactRational m(t.d1dg());
  std::optional<BoundResult> best;
  std::uint64_t tested = 0;

  // Values at ν beyond 2/(m * best) cannot reach best.
  auto cutoff = [&]() -> std::optional<ExactRational> {
    if (!best)
      return std::nullopt;
    return ExactRational(2) / (m * best->bound);
  };

  for (std::uint64_t b = 1; b <= max_denominator; ++b) {
    const Integer den(b);
    auto stream = DenominatorStream::from_numerator(
        den, admissible.first_numerator(den));
    while (true) {
      const ExactRational nu = stream.current();
      if (const auto limit = cutoff(); limit && nu > *limit)
        break;
      const ExactRational value = bound_at(t, nu, beta0_dual);
      ++tested;
      if (detail::improves(value, nu, best))
        best = BoundResult{nu, value, 0, std::nullopt, false, false};
      stream.advance();
    }
  }
  if (!best)
    return std::nullopt;
  best->candidates_tested = tested;
  best->pruned_at = cutoff();
  detail::set_milestones(*best);
  return best;
}

} // namespace polnum
