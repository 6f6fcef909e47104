// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/nn/layers.hpp"

#include <cmath>
#include <stdexcept>

#include "eegdec/nn/ops.hpp"

namespace eegdec::nn {

Tensor ParamStore::add(const std::string& name, Tensor t) {
  for (const auto& [existing, _] : items_) {
    if (existing == name) throw std::logic_error("duplicate parameter name: " + name);
  }
  t.set_requires_grad(true);
  items_.emplace_back(name, t);
  return t;
}

std::vector<Tensor> ParamStore::tensors() const {
  std::vector<Tensor> out;
  out.reserve(items_.size());
  for (const auto& [_, t] : items_) out.push_back(t);
  return out;
}

const Tensor& ParamStore::at(const std::string& name) const {
  for (const auto& [n, t] : items_) {
    if (n == name) return t;
  }
  throw std::out_of_range("no parameter named " + name);
}

std::size_t ParamStore::total_coords() const {
  std::size_t n = 0;
  for (const auto& [_, t] : items_) n += t.numel();
  return n;
}

Tensor uniform_param(ParamStore& store, const std::string& name, std::vector<std::size_t> shape,
                     double scale, Rng& rng) {
  Tensor t = Tensor::zeros(shape);
  for (double& v : t.value()) v = rng.real(-scale, scale);
  return store.add(name, t);
}

Tensor const_param(ParamStore& store, const std::string& name, std::vector<std::size_t> shape,
                   double fill) {
  return store.add(name, Tensor::full(std::move(shape), fill));
}

LinearLayer::LinearLayer(ParamStore& store, const std::string& name, std::size_t in,
                         std::size_t out, Rng& rng) {
  if (in == 0 || out == 0) throw std::invalid_argument("linear dims must be positive");
  const double scale = std::sqrt(1.0 / static_cast<double>(in));
  weight = uniform_param(store, name + ".weight", {in, out}, scale, rng);
  bias = const_param(store, name + ".bias", {out}, 0.0);
}

Tensor LinearLayer::forward(const Tensor& x) const {
  return ops::add_row_broadcast(ops::matmul(x, weight), bias);
}

Conv1dLayer::Conv1dLayer(ParamStore& store, const std::string& name, std::size_t kernel_,
                         std::size_t in, std::size_t out, std::size_t stride_,
                         std::size_t padding_, Rng& rng)
    : kernel(kernel_), in_dim(in), out_dim(out), stride(stride_), padding(padding_) {
  if (in == 0 || out == 0 || kernel == 0) throw std::invalid_argument("conv dims must be positive");
  if (stride == 0) throw std::invalid_argument("conv stride must be positive");
  const double scale = std::sqrt(1.0 / static_cast<double>(kernel * in));
  weight = uniform_param(store, name + ".weight", {kernel * in, out}, scale, rng);
  bias = const_param(store, name + ".bias", {out}, 0.0);
}

Tensor Conv1dLayer::forward(const Tensor& x) const {
  return ops::conv1d(x, weight, bias, kernel, stride, padding);
}

DepthwiseConv1dLayer::DepthwiseConv1dLayer(ParamStore& store, const std::string& name,
                                           std::size_t kernel_, std::size_t dim_, Rng& rng)
    : kernel(kernel_), dim(dim_) {
  if (kernel % 2 == 0) throw std::invalid_argument("depthwise kernel must be odd");
  const double scale = std::sqrt(1.0 / static_cast<double>(kernel));
  weight = uniform_param(store, name + ".weight", {kernel, dim}, scale, rng);
  bias = const_param(store, name + ".bias", {dim}, 0.0);
}

Tensor DepthwiseConv1dLayer::forward(const Tensor& x) const {
  return ops::depthwise_conv1d(x, weight, bias, kernel);
}

LayerNormLayer::LayerNormLayer(ParamStore& store, const std::string& name, std::size_t dim,
                               double eps_)
    : eps(eps_) {
  gain = const_param(store, name + ".gain", {dim}, 1.0);
  bias = const_param(store, name + ".bias", {dim}, 0.0);
}

Tensor LayerNormLayer::forward(const Tensor& x) const {
  return ops::layer_norm(x, gain, bias, eps);
}

MhsaLayer::MhsaLayer(ParamStore& store, const std::string& name, const AttentionConfig& cfg,
                     Rng& rng)
    : n_heads(cfg.n_heads), model_dim(cfg.model_dim) {
  if (cfg.model_dim == 0 || cfg.n_heads == 0 || cfg.model_dim % cfg.n_heads != 0) {
    throw std::invalid_argument("attention model_dim must be divisible by n_heads");
  }
  q = LinearLayer(store, name + ".q", model_dim, model_dim, rng);
  k = LinearLayer(store, name + ".k", model_dim, model_dim, rng);
  v = LinearLayer(store, name + ".v", model_dim, model_dim, rng);
  o = LinearLayer(store, name + ".o", model_dim, model_dim, rng);
}

Tensor MhsaLayer::forward(const Tensor& x, const std::vector<std::uint8_t>* mask) const {
  if (x.cols() != model_dim) throw std::invalid_argument("mhsa: input width mismatch");
  const std::size_t t_len = x.rows();
  const std::size_t head_dim = model_dim / n_heads;
  const Tensor qq = q.forward(x);
  const Tensor kk = k.forward(x);
  const Tensor vv = v.forward(x);

  Tensor mask_bias;
  if (mask) {
    if (mask->size() != t_len * t_len) throw std::invalid_argument("mhsa: mask size mismatch");
    std::vector<double> bias_data(t_len * t_len, 0.0);
    for (std::size_t i = 0; i < bias_data.size(); ++i) {
      if (!(*mask)[i]) bias_data[i] = -1e30;
    }
    mask_bias = Tensor::from_flat(std::move(bias_data), {t_len, t_len});
  }

  std::vector<Tensor> heads;
  heads.reserve(n_heads);
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(head_dim));
  for (std::size_t h = 0; h < n_heads; ++h) {
    const std::size_t c0 = h * head_dim, c1 = (h + 1) * head_dim;
    const Tensor qh = ops::slice_cols(qq, c0, c1);
    const Tensor kh = ops::slice_cols(kk, c0, c1);
    const Tensor vh = ops::slice_cols(vv, c0, c1);
    Tensor scores = ops::scale(ops::matmul_nt(qh, kh), inv_sqrt);
    if (mask) scores = ops::add(scores, mask_bias);
    const Tensor probs = ops::softmax_rows(scores);
    heads.push_back(ops::matmul(probs, vh));
  }
  return o.forward(ops::concat_cols(heads));
}

FeedForwardLayer::FeedForwardLayer(ParamStore& store, const std::string& name,
                                   const FfnConfig& cfg, Act act_, Rng& rng)
    : act(act_) {
  fc1 = LinearLayer(store, name + ".fc1", cfg.model_dim, cfg.hidden_dim, rng);
  fc2 = LinearLayer(store, name + ".fc2", cfg.hidden_dim, cfg.model_dim, rng);
}

Tensor FeedForwardLayer::forward(const Tensor& x) const {
  const Tensor h = fc1.forward(x);
  return fc2.forward(act == Act::gelu ? ops::gelu(h) : ops::swish(h));
}

TransformerEncoderLayer::TransformerEncoderLayer(ParamStore& store, const std::string& name,
                                                 const AttentionConfig& acfg,
                                                 const FfnConfig& fcfg, Rng& rng) {
  ln_attn = LayerNormLayer(store, name + ".ln_attn", acfg.model_dim);
  ln_ffn = LayerNormLayer(store, name + ".ln_ffn", acfg.model_dim);
  attn = MhsaLayer(store, name + ".attn", acfg, rng);
  ffn = FeedForwardLayer(store, name + ".ffn", fcfg, FeedForwardLayer::Act::gelu, rng);
}

Tensor TransformerEncoderLayer::forward(const Tensor& x) const {
  const Tensor a = ops::add(x, attn.forward(ln_attn.forward(x)));
  return ops::add(a, ffn.forward(ln_ffn.forward(a)));
}

ConformerBlock::ConformerBlock(ParamStore& store, const std::string& name,
                               const ConformerConfig& cfg, Rng& rng) {
  const std::size_t d = cfg.model_dim;
  conv_dim = cfg.conv_dim == 0 ? d : cfg.conv_dim;
  if (cfg.conv_kernel % 2 == 0) throw std::invalid_argument("conformer conv kernel must be odd");
  const FfnConfig fcfg{.model_dim = d, .hidden_dim = cfg.ffn_dim};
  const AttentionConfig acfg{.model_dim = d, .n_heads = cfg.n_heads};
  ln_ffn1 = LayerNormLayer(store, name + ".ln_ffn1", d);
  ffn1 = FeedForwardLayer(store, name + ".ffn1", fcfg, FeedForwardLayer::Act::swish, rng);
  ln_attn = LayerNormLayer(store, name + ".ln_attn", d);
  attn = MhsaLayer(store, name + ".attn", acfg, rng);
  ln_conv = LayerNormLayer(store, name + ".ln_conv", d);
  conv_pw1 = LinearLayer(store, name + ".conv_pw1", d, 2 * conv_dim, rng);
  conv_dw = DepthwiseConv1dLayer(store, name + ".conv_dw", cfg.conv_kernel, conv_dim, rng);
  ln_mid = LayerNormLayer(store, name + ".ln_mid", conv_dim);
  conv_pw2 = LinearLayer(store, name + ".conv_pw2", conv_dim, d, rng);
  ln_ffn2 = LayerNormLayer(store, name + ".ln_ffn2", d);
  ffn2 = FeedForwardLayer(store, name + ".ffn2", fcfg, FeedForwardLayer::Act::swish, rng);
  ln_final = LayerNormLayer(store, name + ".ln_final", d);
}

Tensor ConformerBlock::forward(const Tensor& x) const {
  // Macaron half-step feed-forward blocks around attention and convolution.
  Tensor h = ops::add(x, ops::scale(ffn1.forward(ln_ffn1.forward(x)), 0.5));
  h = ops::add(h, attn.forward(ln_attn.forward(h)));
  {
    const Tensor pre = conv_pw1.forward(ln_conv.forward(h));
    const Tensor a = ops::slice_cols(pre, 0, conv_dim);
    const Tensor b = ops::slice_cols(pre, conv_dim, 2 * conv_dim);
    const Tensor glu = ops::mul(a, ops::sigmoid(b));
    const Tensor conv = conv_dw.forward(glu);
    const Tensor normed = ops::swish(ln_mid.forward(conv));
    h = ops::add(h, conv_pw2.forward(normed));
  }
  h = ops::add(h, ops::scale(ffn2.forward(ln_ffn2.forward(h)), 0.5));
  return ln_final.forward(h);
}

PositionalEmbedding::PositionalEmbedding(ParamStore& store, const std::string& name,
                                         std::size_t t_max, std::size_t dim, Rng& rng) {
  table = uniform_param(store, name + ".table", {t_max, dim}, 0.02, rng);
}

Tensor PositionalEmbedding::forward(const Tensor& x) const {
  if (x.rows() > table.rows()) {
    throw std::invalid_argument("sequence longer than the positional table");
  }
  if (x.cols() != table.cols()) throw std::invalid_argument("positional width mismatch");
  return ops::add(x, ops::slice_rows(table, 0, x.rows()));
}

}  // namespace eegdec::nn
