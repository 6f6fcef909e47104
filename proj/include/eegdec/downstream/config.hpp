// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include <json.hpp>

namespace eegdec::task {

/// Task-model and training configuration shared by the match-mismatch and
/// regression heads. Defaults are the full-scale values; desk configs ship
/// under configs/.
struct DownstreamConfig {
  // speech feature extractor: 2 conv layers, kernel 3, dim 64
  int speech_layers = 2;
  int speech_kernel = 3;
  int speech_dim = 64;
  // Conformer backbone
  int backbone_layers = 4;
  int backbone_dim = 128;
  int backbone_ffn_dim = 512;
  int backbone_heads = 4;
  int backbone_conv_kernel = 31;
  int backbone_conv_dim = 128;
  bool shared_backbone = true;  // speech branch reuses the EEG backbone
  // training
  double lr = 1e-4;
  double weight_decay = 0.01;
  int epochs = 100;
  int batch_size = 8;
  double win_s = 3.0;
  double hop_s = 3.0;
  // channel-mixing augmentation (training batches only)
  bool augment = false;
  double alpha_min = 0.0;
  double alpha_max = 0.2;
  int max_frames = 512;
  int max_train_segments_per_epoch = 0;  // 0 = use every segment
  std::uint64_t seed = 0;

  void validate() const;
  nlohmann::json to_json() const;
  static DownstreamConfig from_json(const nlohmann::json& j);
};

}  // namespace eegdec::task
