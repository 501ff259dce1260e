#pragma once

#include "renyi/error.hpp"

namespace renyi {

/// Independent tolerance knobs shared by the library.
struct TolerancePolicy {
  double sum_tol = 1e-12;   // slack on |sum(p) - 1| when validating input
  double eq_tol = 1e-12;    // equality of reals (alpha == 1, vanishing sums)
  double root_tol = 1e-8;   // bisection stopping width

  void validate() const {
    if (!(sum_tol > 0.0) || !(eq_tol > 0.0) || !(root_tol > 0.0)) {
      throw Error(ErrorKind::InvalidRange, "tolerances must be strictly positive");
    }
  }
};

}  // namespace renyi
