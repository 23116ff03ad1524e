#ifndef LDRLAB_GRAD_CHECK_HPP
#define LDRLAB_GRAD_CHECK_HPP

#include <functional>
#include <span>

#include "ldrlab/tensor.hpp"

namespace ldrlab {

// Central-difference check of analytic gradients.
//
// Callers populate each parameter's grad buffer with the analytic gradient,
// then pass a side-effect-free closure that evaluates the scalar objective at
// the parameters' current values. Every coordinate is perturbed by +-step and
// compared; the return value is
//   max over coordinates of |analytic - numeric| / max(1, |analytic|, |numeric|).
//
// step must lie in [1e-7, 1e-3]; a non-finite objective value raises
// NumericError.
double grad_check(const std::function<double()>& objective,
                  std::span<Parameter* const> params, double step);

}  // namespace ldrlab

#endif
