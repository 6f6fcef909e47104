// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "eegdec/nn/tensor.hpp"

namespace eegdec::nn {

/// Adam with optional decoupled weight decay (AdamW when weight_decay > 0).
struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 0.0;
};

class Adam {
 public:
  Adam(std::vector<Tensor> params, const AdamConfig& cfg);

  void zero_grad();
  void step();
  long steps_taken() const { return t_; }

 private:
  std::vector<Tensor> params_;
  AdamConfig cfg_;
  std::vector<std::vector<double>> m_, v_;
  long t_ = 0;
};

}  // namespace eegdec::nn
