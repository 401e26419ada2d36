#pragma once

#include <string_view>

#include "polnum/numeric.hpp"
#include "polnum/polarization.hpp"

namespace polnum::test {

inline ExactRational Q(std::string_view s) { return ExactRational::parse(s); }
inline PolarizationType T(std::string_view s) { return parse_type(s); }

} // namespace polnum::test
