#include "remop/grad_check.hpp"

#include <algorithm>
#include <cmath>

#include "remop/errors.hpp"

namespace remop {

namespace {
double checked_eval(const std::function<double()>& f) {
  const double v = f();
  if (!std::isfinite(v)) throw EvalError("grad_check: objective evaluated to a non-finite value");
  return v;
}
}  // namespace

double grad_check(const std::function<double()>& f,
                  const std::vector<Matrix*>& params,
                  const std::vector<const Matrix*>& analytic,
                  double h) {
  if (params.size() != analytic.size()) {
    throw ShapeError("grad_check: params and analytic gradient counts differ");
  }
  double worst = 0.0;
  for (size_t p = 0; p < params.size(); ++p) {
    Matrix& param = *params[p];
    const Matrix& grad = *analytic[p];
    if (!param.same_shape(grad)) {
      throw ShapeError("grad_check: parameter " + param.shape_str() + " vs gradient " + grad.shape_str());
    }
    for (size_t i = 0; i < param.data.size(); ++i) {
      const double saved = param.data[i];
      param.data[i] = saved + h;
      const double f_plus = checked_eval(f);
      param.data[i] = saved - h;
      const double f_minus = checked_eval(f);
      param.data[i] = saved;
      const double g_fd = (f_plus - f_minus) / (2.0 * h);
      const double g_an = grad.data[i];
      const double denom = std::max({1.0, std::fabs(g_an), std::fabs(g_fd)});
      worst = std::max(worst, std::fabs(g_an - g_fd) / denom);
    }
  }
  return worst;
}

}  // namespace remop
