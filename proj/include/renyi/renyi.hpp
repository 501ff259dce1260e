#pragma once

#include "renyi/alpha.hpp"
#include "renyi/bisection.hpp"
#include "renyi/compensated_sum.hpp"
#include "renyi/curvature.hpp"
#include "renyi/discrete_models.hpp"
#include "renyi/distribution.hpp"
#include "renyi/entropy.hpp"
#include "renyi/error.hpp"
#include "renyi/negative_curvature.hpp"
#include "renyi/robustness.hpp"
#include "renyi/tolerance.hpp"
