// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eegdec/nn/tensor.hpp"

namespace eegdec::nn::ops {

// ---- elementwise / structural ----
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double k);
Tensor abs(const Tensor& a);

/// [T x D] + [D], broadcast over rows (bias add).
Tensor add_row_broadcast(const Tensor& x, const Tensor& bias);

/// Same data, new shape (element count must match).
Tensor reshape(const Tensor& x, std::vector<std::size_t> shape);

Tensor slice_cols(const Tensor& x, std::size_t c0, std::size_t c1);
Tensor concat_cols(const std::vector<Tensor>& xs);
Tensor slice_rows(const Tensor& x, std::size_t r0, std::size_t r1);
Tensor gather_rows(const Tensor& x, const std::vector<std::size_t>& idx);
Tensor row(const Tensor& x, std::size_t r);  // [T x D] -> [D]

// ---- matrix products ----
Tensor matmul(const Tensor& a, const Tensor& b);     // [M x K] . [K x N]
Tensor matmul_nt(const Tensor& a, const Tensor& b);  // [M x K] . [N x K]^T

// ---- nonlinearities ----
Tensor gelu(const Tensor& x);  // exact erf form
Tensor swish(const Tensor& x);
Tensor sigmoid(const Tensor& x);
Tensor softmax_rows(const Tensor& x);

// ---- normalization ----
Tensor layer_norm(const Tensor& x, const Tensor& gain, const Tensor& bias, double eps = 1e-5);

// ---- convolutions over time ([T x D] layout) ----
/// Cross-correlation with weight [K * D_in x D_out] (kernel-major rows) and
/// bias [D_out]; zero padding.
Tensor conv1d(const Tensor& x, const Tensor& weight, const Tensor& bias, std::size_t kernel,
              std::size_t stride, std::size_t padding);
/// Depthwise, stride 1, same padding (odd kernel); weight [K x D], bias [D].
Tensor depthwise_conv1d(const Tensor& x, const Tensor& weight, const Tensor& bias,
                        std::size_t kernel);

// ---- masking / reductions ----
/// Rows of x where mask[t] != 0 are replaced by the embedding vector [D].
Tensor replace_masked_rows(const Tensor& x, const std::vector<std::uint8_t>& mask,
                           const Tensor& embedding);
Tensor mean_all(const Tensor& x);
Tensor sum_all(const Tensor& x);

// ---- similarity and losses ----
/// Per-row cosine similarity of two [T x D] tensors -> [T].
Tensor rowwise_cosine(const Tensor& a, const Tensor& b);
Tensor cosine(const Tensor& a, const Tensor& b);  // two [D] vectors -> scalar
Tensor stack_scalars(const std::vector<Tensor>& xs);
Tensor logsumexp(const Tensor& x);           // [N] -> scalar
Tensor pick(const Tensor& x, std::size_t i);  // [N] -> scalar
/// Pearson correlation of two [N] vectors (population normalization).
/// Throws on zero variance in either argument.
Tensor pearson(const Tensor& a, const Tensor& b);
/// Numerically stable binary cross entropy on a single logit.
Tensor bce_with_logit(const Tensor& logit, int label);

}  // namespace eegdec::nn::ops
