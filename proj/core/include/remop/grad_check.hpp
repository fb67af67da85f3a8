#pragma once

#include <functional>
#include <vector>

#include "remop/matrix.hpp"

namespace remop {

// Compares hand-derived gradients against central finite differences.
//
// f evaluates the scalar objective at the *current* contents of params;
// grad_check perturbs each parameter element in place and restores it.
// analytic holds the gradients at the unperturbed point, one matrix per
// parameter, same shapes. Returns the max over all elements of
//   |g_analytic - g_fd| / max(1, |g_analytic|, |g_fd|).
// Throws EvalError if f returns a non-finite value.
double grad_check(const std::function<double()>& f,
                  const std::vector<Matrix*>& params,
                  const std::vector<const Matrix*>& analytic,
                  double h = 1e-5);

}  // namespace remop
