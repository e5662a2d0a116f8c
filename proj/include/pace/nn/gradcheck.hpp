#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "pace/nn/params.hpp"

namespace pace::nn {

struct GradCheckResult {
  double max_relative_error = 0.0;
  std::string worst_entry;
  std::size_t checked = 0;
};

// |a - n| / max(|a|, |n|, floor). The floor keeps central-difference roundoff
// on near-zero components from dominating.
double relative_error(double analytic, double numeric, double floor);

// Central differences of `loss` against every entry of every tensor in the
// store (or every stride-th entry). Parameters are restored afterwards.
GradCheckResult check_param_gradients(ParamStore& store, const Gradients& analytic,
                                      const std::function<double()>& loss, double h = 1e-6,
                                      double floor = 1e-3, std::size_t stride = 1);

// Same for a free input vector.
GradCheckResult check_vector_gradient(std::span<double> x, std::span<const double> analytic,
                                      const std::function<double()>& loss, double h = 1e-6,
                                      double floor = 1e-3);

}  // namespace pace::nn
