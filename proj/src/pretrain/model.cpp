// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/pretrain/model.hpp"

#include <stdexcept>

#include "eegdec/nn/ops.hpp"

namespace eegdec::pretrain {

Eeg2vecModel::Eeg2vecModel(const Eeg2vecConfig& cfg, std::uint64_t init_seed) : cfg_(cfg) {
  cfg_.validate();
  Rng rng(init_seed);
  const auto k = static_cast<std::size_t>(cfg.encoder_kernel);
  const auto dim = static_cast<std::size_t>(cfg.encoder_dim);
  const std::size_t pad = (k - 1) / 2;

  for (int l = 0; l < cfg.encoder_layers; ++l) {
    const std::size_t in = l == 0 ? static_cast<std::size_t>(cfg.input_channels) : dim;
    const std::string name = "encoder.conv" + std::to_string(l);
    enc_convs_.emplace_back(params_, name, k, in, dim, static_cast<std::size_t>(1), pad, rng);
    enc_norms_.emplace_back(params_, "encoder.norm" + std::to_string(l), dim);
  }
  mask_embedding_ = uniform_param(params_, "context.mask_embedding", {dim}, 0.1, rng);
  in_proj_ = nn::LinearLayer(params_, "context.in_proj", dim,
                             static_cast<std::size_t>(cfg.context_dim), rng);
  pos_ = nn::PositionalEmbedding(params_, "context.pos", static_cast<std::size_t>(cfg.max_frames),
                                 static_cast<std::size_t>(cfg.context_dim), rng);
  const nn::AttentionConfig acfg{.model_dim = static_cast<std::size_t>(cfg.context_dim),
                                 .n_heads = static_cast<std::size_t>(cfg.context_heads)};
  const nn::FfnConfig fcfg{.model_dim = static_cast<std::size_t>(cfg.context_dim),
                           .hidden_dim = static_cast<std::size_t>(cfg.context_ffn_dim)};
  for (int l = 0; l < cfg.context_layers; ++l) {
    context_layers_.emplace_back(params_, "context.layer" + std::to_string(l), acfg, fcfg, rng);
  }
  final_norm_ = nn::LayerNormLayer(params_, "context.final_norm",
                                   static_cast<std::size_t>(cfg.context_dim));
  out_proj_ = nn::LinearLayer(params_, "context.out_proj",
                              static_cast<std::size_t>(cfg.context_dim), dim, rng);
}

nn::Tensor Eeg2vecModel::input_from_eeg(const MatrixF& eeg) {
  MatrixD x(eeg.cols(), eeg.rows());
  for (std::size_t c = 0; c < eeg.rows(); ++c) {
    for (std::size_t t = 0; t < eeg.cols(); ++t) x(t, c) = eeg(c, t);
  }
  return nn::Tensor::from_matrix(x);
}

nn::Tensor Eeg2vecModel::encode_features(const nn::Tensor& x_tc) const {
  if (x_tc.cols() != static_cast<std::size_t>(cfg_.input_channels)) {
    throw std::invalid_argument("encoder channel mismatch: got " + std::to_string(x_tc.cols()) +
                                ", configured " + std::to_string(cfg_.input_channels));
  }
  nn::Tensor h = x_tc;
  for (std::size_t l = 0; l < enc_convs_.size(); ++l) {
    h = nn::ops::gelu(enc_norms_[l].forward(enc_convs_[l].forward(h)));
  }
  return h;
}

nn::Tensor Eeg2vecModel::context_states(const nn::Tensor& z, const MaskPlan* plan) const {
  nn::Tensor h = z;
  if (plan) {
    if (plan->masked.size() != z.rows()) {
      throw std::invalid_argument("mask plan length does not match the frame count");
    }
    h = nn::ops::replace_masked_rows(h, plan->masked, mask_embedding_);
  }
  h = pos_.forward(in_proj_.forward(h));
  for (const auto& layer : context_layers_) h = layer.forward(h);
  return final_norm_.forward(h);
}

nn::Tensor Eeg2vecModel::context_forward(const nn::Tensor& z, const MaskPlan* plan) const {
  return out_proj_.forward(context_states(z, plan));
}

FrozenExtractor::FrozenExtractor(const Eeg2vecConfig& cfg, const nn::LoadedCheckpoint& ckpt) {
  model_ = std::make_shared<Eeg2vecModel>(cfg, /*init_seed=*/0);
  nn::load_into(ckpt, model_->params());
}

FrozenExtractor FrozenExtractor::from_checkpoint(const std::filesystem::path& path) {
  const nn::LoadedCheckpoint ckpt = nn::load_checkpoint(path);
  const Eeg2vecConfig cfg = Eeg2vecConfig::from_json(ckpt.arch);
  return FrozenExtractor(cfg, ckpt);
}

MatrixD FrozenExtractor::extract(const MatrixF& eeg) const {
  nn::NoGradGuard no_grad;
  const nn::Tensor x = Eeg2vecModel::input_from_eeg(eeg);
  const nn::Tensor z = model_->encode_features(x);
  const nn::Tensor c = model_->context_states(z, nullptr);
  MatrixD out(c.rows(), c.cols());
  out.data() = c.value();
  return out;
}

}  // namespace eegdec::pretrain
