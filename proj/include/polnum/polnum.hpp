#pragma once

#include "polnum/bounds.hpp"
#include "polnum/crf.hpp"
#include "polnum/errors.hpp"
#include "polnum/numeric.hpp"
#include "polnum/oracles.hpp"
#include "polnum/polarization.hpp"
#include "polnum/semihom.hpp"
#include "polnum/thresholds.hpp"
