#pragma once

// Deliberately naive reference computations used to validate the closed
// forms in semihom.hpp and the pruned search in bounds.hpp.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "polnum/bounds.hpp"
#include "polnum/errors.hpp"
#include "polnum/numeric.hpp"
#include "polnum/polarization.hpp"
#include "polnum/semihom.hpp"

namespace polnum::oracles {

inline constexpr std::uint64_t kGroupGuard = 10'000'000;

/// ⊕_i (Z/n_i)^2. Each order is stored once and counted twice.
struct FiniteGroupSpec {
  std::vector<std::uint64_t> cyclic_orders;

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (auto k : cyclic_orders) {
      if (k == 0)
        throw DomainError("cyclic orders must be >= 1");
      if (k > kGroupGuard || n > kGroupGuard / (k * k))
        return kGroupGuard + 1;
      n *= k * k;
    }
    return n;
  }

  /// Number of x with b x = 0, by visiting every element.
  std::uint64_t count_killed_by(std::uint64_t b) const {
    if (order() > kGroupGuard)
      throw DomainError("group too large for enumeration");
    std::vector<std::uint64_t> moduli;
    for (auto k : cyclic_orders) {
      moduli.push_back(k);
      moduli.push_back(k);
    }
    // Odometer over all coordinates; `bad` counts coordinates with b x_j != 0.
    std::vector<std::uint64_t> digit(moduli.size(), 0);
    std::size_t bad = 0;
    std::uint64_t count = 0;
    auto killed = [&](std::size_t j) { return (b * digit[j]) % moduli[j] == 0; };
    while (true) {
      if (bad == 0)
        ++count;
      std::size_t j = 0;
      for (; j < moduli.size(); ++j) {
        const bool was = killed(j);
        digit[j] = digit[j] + 1 == moduli[j] ? 0 : digit[j] + 1;
        const bool now = killed(j);
        if (was && !now)
          ++bad;
        else if (!was && now)
          --bad;
        if (digit[j] != 0)
          break;
      }
      if (j == moduli.size())
        return count;
    }
  }
};

inline std::uint64_t to_u64(const Integer &x) {
  if (x < 0 || x > Integer(std::numeric_limits<std::uint64_t>::max()))
    throw DomainError("value out of oracle range");
  return static_cast<std::uint64_t>(x);
}

inline FiniteGroupSpec kernel_group(const PolarizationType &t, const Integer &a) {
  FiniteGroupSpec spec;
  for (const auto &d : t.dims())
    spec.cyclic_orders.push_back(to_u64(abs(a) * d));
  return spec;
}

inline bool within_guard(const PolarizationType &t, const Integer &a) {
  return kernel_group(t, a).order() <= kGroupGuard;
}

/// Square root of #{x in K(a l) : b x = 0}, counted element by element.
inline Integer brute_u(const PolarizationType &t, const Integer &a,
                       const Integer &b) {
  if (a == 0 || b <= 0)
    throw DomainError("brute_u needs a != 0 and b > 0");
  if (gcd(a, b) != 1)
    throw DomainError("slope not reduced");
  const std::uint64_t n = kernel_group(t, a).count_killed_by(to_u64(b));
  std::uint64_t root = 0;
  while ((root + 1) * (root + 1) <= n)
    ++root;
  if (root * root != n)
    throw InvariantViolation("b-torsion count " + std::to_string(n) +
                             " is not a perfect square");
  return Integer(root);
}

/// Unpruned maximization. The value at any admissible integer k is
/// 2/(d_1 d_g k), and every ν has value < 2/(d_1 d_g ν), so nothing beyond
/// the smallest admissible integer k0 can reach the value at k0. Scans every
/// reduced ν in (0, k0] with denominator <= N.
inline std::optional<BoundResult>
brute_max(const PolarizationType &t, std::uint64_t max_denominator,
          const std::optional<ExactRational> &beta0_dual = std::nullopt) {
  const Admissibility admissible(t, beta0_dual);
  const ExactRational k0(admissible.first_integer());
  std::optional<BoundResult> best;
  std::uint64_t tested = 0;
  for (const auto &nu : enumerate_rationals(0, k0, max_denominator)) {
    if (!admissible(nu))
      continue;
    const ExactRational value = bound_at(t, nu, beta0_dual);
    ++tested;
    if (!best || value > best->bound ||
        (value == best->bound && nu < best->best_nu))
      best = BoundResult{nu, value, 0, std::nullopt, false, false};
  }
  if (!best)
    return std::nullopt;
  best->candidates_tested = tested;
  best->ge_half = best->bound >= ExactRational::reduce(1, 2);
  best->ge_one = best->bound >= 1;
  return best;
}

} // namespace polnum::oracles
