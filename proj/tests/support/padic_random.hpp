#pragma once

#include "radon/padic/random.hpp"

namespace radon::testing {

using padic::Cell;
using padic::PAdicScalar;
using padic::PAdicVector;
using padic::RFunction;
using padic::random_cc;
using padic::random_kernel;
using padic::random_map;
using padic::random_point;
using padic::random_scalar;
using padic::random_schwartz;
using padic::random_test_function;
using padic::sample_points;

}  // namespace radon::testing
