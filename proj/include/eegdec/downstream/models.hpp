// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "eegdec/common/matrix.hpp"
#include "eegdec/downstream/config.hpp"
#include "eegdec/nn/layers.hpp"

namespace eegdec::task {

/// Match-mismatch classifier over a frozen EEG representation: projections
/// into a shared Conformer backbone, frame-wise cosine similarity against
/// each candidate stimulus, and an antisymmetric scalar head
/// logit = w * (sim_a - sim_b), so swapping the stimuli negates the logit.
class MatchMismatchModel {
 public:
  MatchMismatchModel(const DownstreamConfig& cfg, std::size_t extractor_dim,
                     std::uint64_t init_seed);

  struct Prediction {
    double similarity_a = 0.0;
    double similarity_b = 0.0;
    double logit = 0.0;
    int predicted = 0;  // 1 iff logit > 0
    nn::Tensor logit_tensor;
  };

  /// eeg_rep is the frozen extractor output [T x extractor_dim]; the stimulus
  /// windows are raw envelopes of the same length.
  Prediction forward(const MatrixD& eeg_rep, std::span<const float> stim_a,
                     std::span<const float> stim_b) const;

  nn::ParamStore& params() { return params_; }
  const nn::ParamStore& params() const { return params_; }
  const DownstreamConfig& config() const { return cfg_; }

 private:
  nn::Tensor backbone_forward(const nn::Tensor& projected, bool speech_branch) const;
  nn::Tensor speech_features(std::span<const float> stim) const;

  DownstreamConfig cfg_;
  std::size_t extractor_dim_ = 0;
  nn::ParamStore params_;
  nn::LinearLayer eeg_proj_;
  std::vector<nn::Conv1dLayer> speech_convs_;
  nn::LinearLayer speech_proj_;
  nn::PositionalEmbedding pos_;
  std::vector<nn::ConformerBlock> backbone_;
  std::vector<nn::ConformerBlock> speech_backbone_;  // empty when shared
  nn::Tensor head_weight_;                           // scalar
};

/// Envelope regressor: frozen representation -> projection -> Conformer
/// backbone -> per-frame linear head -> envelope prediction of length T.
class RegressionModel {
 public:
  RegressionModel(const DownstreamConfig& cfg, std::size_t extractor_dim, std::uint64_t init_seed);

  /// -> [T] prediction tensor.
  nn::Tensor forward(const MatrixD& eeg_rep) const;

  nn::ParamStore& params() { return params_; }
  const nn::ParamStore& params() const { return params_; }
  const DownstreamConfig& config() const { return cfg_; }

 private:
  DownstreamConfig cfg_;
  std::size_t extractor_dim_ = 0;
  nn::ParamStore params_;
  nn::LinearLayer proj_;
  nn::PositionalEmbedding pos_;
  std::vector<nn::ConformerBlock> backbone_;
  nn::LinearLayer head_;
};

}  // namespace eegdec::task
