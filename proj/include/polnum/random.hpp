#pragma once

// Random generators for property suites.

#include <cstdint>
#include <random>
#include <vector>

#include "polnum/numeric.hpp"
#include "polnum/polarization.hpp"

namespace polnum::random {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng &rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// A valid type with g in [1, max_g] and d_g in [1, max_last], built from the
/// top down by picking each entry among the divisors of the next one.
inline PolarizationType type(Rng &rng, unsigned max_g, std::int64_t max_last,
                             unsigned min_g = 1) {
  const auto g = static_cast<std::size_t>(uniform(rng, min_g, max_g));
  std::vector<std::int64_t> dims(g);
  dims[g - 1] = uniform(rng, 1, max_last);
  for (std::size_t k = g - 1; k-- > 0;) {
    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 1; d <= dims[k + 1]; ++d)
      if (dims[k + 1] % d == 0)
        divisors.push_back(d);
    dims[k] = divisors[static_cast<std::size_t>(
        uniform(rng, 0, static_cast<std::int64_t>(divisors.size()) - 1))];
  }
  std::vector<Integer> out(dims.begin(), dims.end());
  return validate_type(std::move(out));
}

/// p/q with 1 <= q <= max_den and |p| <= max_num, reduced.
inline ExactRational rational(Rng &rng, std::int64_t max_num,
                              std::int64_t max_den) {
  return ExactRational::reduce(uniform(rng, -max_num, max_num),
                               uniform(rng, 1, max_den));
}

inline ExactRational positive_rational(Rng &rng, std::int64_t max_num,
                                       std::int64_t max_den) {
  return ExactRational::reduce(uniform(rng, 1, max_num),
                               uniform(rng, 1, max_den));
}

inline ExactRational nonzero_rational(Rng &rng, std::int64_t max_num,
                                      std::int64_t max_den) {
  const auto p = positive_rational(rng, max_num, max_den);
  return uniform(rng, 0, 1) ? p : -p;
}

/// A rational strictly inside (0, 1).
inline ExactRational unit_interval(Rng &rng, std::int64_t max_den) {
  const std::int64_t q = uniform(rng, 2, max_den);
  return ExactRational::reduce(uniform(rng, 1, q - 1), q);
}

} // namespace polnum::random
