// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "eegdec/nn/tensor.hpp"

namespace eegdec::task {

/// Pearson correlation with population (1/N) normalization in both the
/// covariance and the standard deviations (the factors cancel in the ratio;
/// N/(N-1) would cancel identically). Throws std::domain_error on zero
/// variance rather than silently returning 0.
double pcc(std::span<const double> y, std::span<const double> y_hat);

/// -PCC as a differentiable loss on [N] tensors.
nn::Tensor neg_pcc_loss(const nn::Tensor& y, const nn::Tensor& y_hat);

/// Numerically stable binary cross entropy on a single logit.
nn::Tensor bce_loss(const nn::Tensor& logit, int label);

}  // namespace eegdec::task
