// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/nn/optim.hpp"

#include <cmath>

namespace eegdec::nn {

Adam::Adam(std::vector<Tensor> params, const AdamConfig& cfg) : params_(std::move(params)), cfg_(cfg) {
  m_.reserve(params_.size());
  v_.reserve(params_.size());
  for (const auto& p : params_) {
    m_.emplace_back(p.numel(), 0.0);
    v_.emplace_back(p.numel(), 0.0);
  }
}

void Adam::zero_grad() {
  for (auto& p : params_) p.zero_grad();
}

void Adam::step() {
  ++t_;
  const double bc1 = 1.0 - std::pow(cfg_.beta1, t_);
  const double bc2 = 1.0 - std::pow(cfg_.beta2, t_);
  for (std::size_t pi = 0; pi < params_.size(); ++pi) {
    auto& value = params_[pi].value();
    auto& grad = params_[pi].grad();
    if (grad.size() != value.size()) continue;  // never touched by backward
    auto& m = m_[pi];
    auto& v = v_[pi];
    for (std::size_t i = 0; i < value.size(); ++i) {
      const double g = grad[i];
      m[i] = cfg_.beta1 * m[i] + (1.0 - cfg_.beta1) * g;
      v[i] = cfg_.beta2 * v[i] + (1.0 - cfg_.beta2) * g * g;
      const double mhat = m[i] / bc1;
      const double vhat = v[i] / bc2;
      double update = mhat / (std::sqrt(vhat) + cfg_.eps);
      if (cfg_.weight_decay > 0.0) update += cfg_.weight_decay * value[i];
      value[i] -= cfg_.lr * update;
    }
  }
}

}  // namespace eegdec::nn
