// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eegdec/nn/layers.hpp"
#include "eegdec/nn/tensor.hpp"

namespace eegdec::nn {

struct GradCheckReport {
  double max_rel_err = 0.0;
  double max_abs_err = 0.0;
  std::string worst_param;
  std::size_t worst_coord = 0;
};

/// Central finite differences against the backpropagated gradient. `f` must
/// rebuild the forward graph from the current parameter values and return
/// the scalar loss. Relative error per coordinate is
/// |analytic - numeric| / max(1e-6, |analytic|, |numeric|).
GradCheckReport grad_check(const std::function<Tensor()>& f,
                           const std::vector<std::pair<std::string, Tensor>>& params,
                           double eps = 1e-5);

GradCheckReport grad_check(const std::function<Tensor()>& f, const ParamStore& params,
                           double eps = 1e-5);

}  // namespace eegdec::nn
