// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "eegdec/common/rng.hpp"
#include "eegdec/nn/tensor.hpp"
#include "eegdec/pretrain/mask.hpp"

namespace eegdec::pretrain {

/// Per masked frame: cosine similarities (divided by the temperature) between
/// the prediction and {true target, negatives sampled from predictions at
/// other masked positions of the same sequence}, then -log softmax of the
/// positive, averaged over masked frames. Falls back to sampling with
/// replacement (with a warning flag) when fewer candidates than n_negatives
/// exist; throws when no candidate exists at all.
nn::Tensor contrastive_loss(const nn::Tensor& c_pre, const nn::Tensor& z_tar,
                            const MaskPlan& plan, int n_negatives, double temperature, Rng& rng,
                            bool* sampled_with_replacement = nullptr);

/// Mean absolute error between prediction and target. Averages over all
/// frames by default (the masked_only flag restricts to masked frames).
nn::Tensor reconstruction_loss(const nn::Tensor& c_pre, const nn::Tensor& z_tar,
                               const MaskPlan& plan, bool masked_only = false);

}  // namespace eegdec::pretrain
