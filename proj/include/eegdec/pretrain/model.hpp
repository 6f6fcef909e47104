// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <memory>
#include <vector>

#include "eegdec/common/matrix.hpp"
#include "eegdec/nn/checkpoint.hpp"
#include "eegdec/nn/layers.hpp"
#include "eegdec/pretrain/config.hpp"
#include "eegdec/pretrain/mask.hpp"

namespace eegdec::pretrain {

/// Feature encoder + context module. The encoder emits encoder_dim features
/// at the input frame rate (stride-1 convolutions); the context module runs
/// at context_dim and is projected back to encoder_dim for the losses.
class Eeg2vecModel {
 public:
  Eeg2vecModel(const Eeg2vecConfig& cfg, std::uint64_t init_seed);

  const Eeg2vecConfig& config() const { return cfg_; }
  nn::ParamStore& params() { return params_; }
  const nn::ParamStore& params() const { return params_; }

  /// EEG [C x T] as a [T x C] tensor -> features z [T x encoder_dim].
  nn::Tensor encode_features(const nn::Tensor& x_tc) const;

  /// Masked context pass -> predictions c_pre [T x encoder_dim].
  /// plan == nullptr runs without masking.
  nn::Tensor context_forward(const nn::Tensor& z, const MaskPlan* plan) const;

  /// Pre-projection context states [T x context_dim]; plan optional.
  nn::Tensor context_states(const nn::Tensor& z, const MaskPlan* plan) const;

  /// Convenience: [C x T] float matrix to the [T x C] input tensor.
  static nn::Tensor input_from_eeg(const MatrixF& eeg);

 private:
  Eeg2vecConfig cfg_;
  nn::ParamStore params_;
  std::vector<nn::Conv1dLayer> enc_convs_;
  std::vector<nn::LayerNormLayer> enc_norms_;
  nn::Tensor mask_embedding_;
  nn::LinearLayer in_proj_;
  nn::PositionalEmbedding pos_;
  std::vector<nn::TransformerEncoderLayer> context_layers_;
  nn::LayerNormLayer final_norm_;
  nn::LinearLayer out_proj_;
};

/// A pretrained model loaded for downstream use; forwards run under
/// NoGradGuard so task training never touches extractor parameters.
class FrozenExtractor {
 public:
  FrozenExtractor(const Eeg2vecConfig& cfg, const nn::LoadedCheckpoint& ckpt);
  static FrozenExtractor from_checkpoint(const std::filesystem::path& path);

  /// EEG [C x T] -> representation [T x context_dim], no masking, no grads.
  MatrixD extract(const MatrixF& eeg) const;

  const Eeg2vecConfig& config() const { return model_->config(); }
  std::size_t output_dim() const { return static_cast<std::size_t>(config().context_dim); }
  const nn::ParamStore& params() const { return model_->params(); }

 private:
  std::shared_ptr<Eeg2vecModel> model_;
};

}  // namespace eegdec::pretrain
