// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/pretrain/losses.hpp"

#include <stdexcept>

#include "eegdec/nn/ops.hpp"

namespace eegdec::pretrain {

using nn::Tensor;
namespace ops = nn::ops;

Tensor contrastive_loss(const Tensor& c_pre, const Tensor& z_tar, const MaskPlan& plan,
                        int n_negatives, double temperature, Rng& rng,
                        bool* sampled_with_replacement) {
  if (c_pre.shape() != z_tar.shape()) {
    throw std::invalid_argument("contrastive loss: prediction/target shape mismatch");
  }
  if (n_negatives < 1) throw std::invalid_argument("n_negatives must be >= 1");
  if (!(temperature > 0)) throw std::invalid_argument("temperature must be positive");
  const auto masked = plan.masked_indices();
  if (masked.empty()) throw std::invalid_argument("contrastive loss needs >= 1 masked frame");
  if (masked.size() < 2) {
    throw std::invalid_argument("contrastive loss needs >= 2 masked frames to draw negatives");
  }
  if (sampled_with_replacement) *sampled_with_replacement = false;

  const double inv_temp = 1.0 / temperature;
  std::vector<Tensor> frame_losses;
  frame_losses.reserve(masked.size());
  for (const std::size_t t : masked) {
    std::vector<std::size_t> candidates;
    candidates.reserve(masked.size() - 1);
    for (const std::size_t j : masked) {
      if (j != t) candidates.push_back(j);
    }

    std::vector<std::size_t> negatives;
    negatives.reserve(static_cast<std::size_t>(n_negatives));
    if (candidates.size() >= static_cast<std::size_t>(n_negatives)) {
      // partial Fisher-Yates draw without replacement
      for (int i = 0; i < n_negatives; ++i) {
        const std::size_t j =
            static_cast<std::size_t>(i) + rng.below(candidates.size() - static_cast<std::size_t>(i));
        std::swap(candidates[static_cast<std::size_t>(i)], candidates[j]);
        negatives.push_back(candidates[static_cast<std::size_t>(i)]);
      }
    } else {
      if (sampled_with_replacement) *sampled_with_replacement = true;
      for (int i = 0; i < n_negatives; ++i) {
        negatives.push_back(candidates[rng.below(candidates.size())]);
      }
    }

    const Tensor pred = ops::row(c_pre, t);
    std::vector<Tensor> sims;
    sims.reserve(negatives.size() + 1);
    sims.push_back(ops::scale(ops::cosine(pred, ops::row(z_tar, t)), inv_temp));
    for (const std::size_t j : negatives) {
      sims.push_back(ops::scale(ops::cosine(pred, ops::row(c_pre, j)), inv_temp));
    }
    const Tensor logits = ops::stack_scalars(sims);
    frame_losses.push_back(ops::sub(ops::logsumexp(logits), ops::pick(logits, 0)));
  }
  return ops::mean_all(ops::stack_scalars(frame_losses));
}

Tensor reconstruction_loss(const Tensor& c_pre, const Tensor& z_tar, const MaskPlan& plan,
                           bool masked_only) {
  if (c_pre.shape() != z_tar.shape()) {
    throw std::invalid_argument("reconstruction loss: prediction/target shape mismatch");
  }
  if (!masked_only) {
    return ops::mean_all(ops::abs(ops::sub(c_pre, z_tar)));
  }
  const auto idx = plan.masked_indices();
  if (idx.empty()) throw std::invalid_argument("masked-only reconstruction with empty mask");
  const Tensor pred = ops::gather_rows(c_pre, idx);
  const Tensor target = ops::gather_rows(z_tar, idx);
  return ops::mean_all(ops::abs(ops::sub(pred, target)));
}

}  // namespace eegdec::pretrain
