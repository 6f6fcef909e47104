// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eegdec/common/rng.hpp"
#include "eegdec/nn/tensor.hpp"

namespace eegdec::nn {

/// Ordered, uniquely-named parameter registry. Checkpoints serialize in
/// registration order.
class ParamStore {
 public:
  Tensor add(const std::string& name, Tensor t);
  const std::vector<std::pair<std::string, Tensor>>& items() const { return items_; }
  std::vector<Tensor> tensors() const;
  const Tensor& at(const std::string& name) const;
  std::size_t total_coords() const;

 private:
  std::vector<std::pair<std::string, Tensor>> items_;
};

Tensor uniform_param(ParamStore& store, const std::string& name, std::vector<std::size_t> shape,
                     double scale, Rng& rng);
Tensor const_param(ParamStore& store, const std::string& name, std::vector<std::size_t> shape,
                   double fill);

// ---- layer configs (validated at construction) ----
struct AttentionConfig {
  std::size_t model_dim = 0;
  std::size_t n_heads = 1;
};
struct FfnConfig {
  std::size_t model_dim = 0;
  std::size_t hidden_dim = 0;
};
struct ConformerConfig {
  std::size_t model_dim = 0;
  std::size_t ffn_dim = 0;
  std::size_t n_heads = 1;
  std::size_t conv_kernel = 31;
  std::size_t conv_dim = 0;  // 0 = model_dim
};

struct LinearLayer {
  Tensor weight;  // [in x out]
  Tensor bias;    // [out]
  LinearLayer() = default;
  LinearLayer(ParamStore& store, const std::string& name, std::size_t in, std::size_t out,
              Rng& rng);
  Tensor forward(const Tensor& x) const;
};

struct Conv1dLayer {
  Tensor weight;  // [K*in x out]
  Tensor bias;
  std::size_t kernel = 3, in_dim = 0, out_dim = 0, stride = 1, padding = 0;
  Conv1dLayer() = default;
  Conv1dLayer(ParamStore& store, const std::string& name, std::size_t kernel, std::size_t in,
              std::size_t out, std::size_t stride, std::size_t padding, Rng& rng);
  Tensor forward(const Tensor& x) const;
};

struct DepthwiseConv1dLayer {
  Tensor weight;  // [K x D]
  Tensor bias;
  std::size_t kernel = 31, dim = 0;
  DepthwiseConv1dLayer() = default;
  DepthwiseConv1dLayer(ParamStore& store, const std::string& name, std::size_t kernel,
                       std::size_t dim, Rng& rng);
  Tensor forward(const Tensor& x) const;
};

struct LayerNormLayer {
  Tensor gain, bias;
  double eps = 1e-5;
  LayerNormLayer() = default;
  LayerNormLayer(ParamStore& store, const std::string& name, std::size_t dim, double eps = 1e-5);
  Tensor forward(const Tensor& x) const;
};

/// Scaled dot-product multi-head self-attention. The optional mask is a
/// [T x T] row-major allowed-matrix (0 entries are blocked).
struct MhsaLayer {
  LinearLayer q, k, v, o;
  std::size_t n_heads = 1, model_dim = 0;
  MhsaLayer() = default;
  MhsaLayer(ParamStore& store, const std::string& name, const AttentionConfig& cfg, Rng& rng);
  Tensor forward(const Tensor& x, const std::vector<std::uint8_t>* mask = nullptr) const;
};

struct FeedForwardLayer {
  enum class Act { gelu, swish };
  LinearLayer fc1, fc2;
  Act act = Act::gelu;
  FeedForwardLayer() = default;
  FeedForwardLayer(ParamStore& store, const std::string& name, const FfnConfig& cfg, Act act,
                   Rng& rng);
  Tensor forward(const Tensor& x) const;
};

/// Pre-norm Transformer encoder layer (GELU feed-forward).
struct TransformerEncoderLayer {
  LayerNormLayer ln_attn, ln_ffn;
  MhsaLayer attn;
  FeedForwardLayer ffn;
  TransformerEncoderLayer() = default;
  TransformerEncoderLayer(ParamStore& store, const std::string& name, const AttentionConfig& acfg,
                          const FfnConfig& fcfg, Rng& rng);
  Tensor forward(const Tensor& x) const;
};

/// Conformer block: half FFN -> MHSA -> conv module -> half FFN, residual
/// throughout, final layer norm. The conv module normalization is a layer
/// norm (per-sequence processing keeps no batch statistics).
struct ConformerBlock {
  LayerNormLayer ln_ffn1, ln_attn, ln_conv, ln_mid, ln_ffn2, ln_final;
  FeedForwardLayer ffn1, ffn2;
  MhsaLayer attn;
  LinearLayer conv_pw1;  // D -> 2*conv_dim
  DepthwiseConv1dLayer conv_dw;
  LinearLayer conv_pw2;  // conv_dim -> D
  std::size_t conv_dim = 0;
  ConformerBlock() = default;
  ConformerBlock(ParamStore& store, const std::string& name, const ConformerConfig& cfg, Rng& rng);
  Tensor forward(const Tensor& x) const;
};

/// Learned absolute positional embedding added to the first T rows.
struct PositionalEmbedding {
  Tensor table;  // [T_max x D]
  PositionalEmbedding() = default;
  PositionalEmbedding(ParamStore& store, const std::string& name, std::size_t t_max,
                      std::size_t dim, Rng& rng);
  Tensor forward(const Tensor& x) const;
};

}  // namespace eegdec::nn
