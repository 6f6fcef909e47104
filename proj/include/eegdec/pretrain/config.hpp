// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace eegdec::pretrain {

enum class Objective { contrastive, reconstruction };

std::string objective_name(Objective o);
Objective objective_from_name(const std::string& name);

/// Self-supervised model and training configuration. The defaults are the
/// full-scale values; configs/desk-pretrain.json carries the desk-scale run.
struct Eeg2vecConfig {
  // feature encoder: stacked (conv k3 s1 same -> layer norm -> GELU)
  int input_channels = 64;
  int encoder_layers = 4;
  int encoder_kernel = 3;
  int encoder_dim = 64;
  // context module
  int context_layers = 12;
  int context_dim = 256;
  int context_ffn_dim = 1024;
  int context_heads = 4;
  // masking
  double mask_ratio = 0.5;
  int mask_span = 10;
  // contrastive objective
  int n_negatives = 50;
  double temperature = 1.5;
  Objective objective = Objective::contrastive;
  bool reconstruction_masked_only = false;  // default averages all frames
  // training loop
  double lr = 5e-4;
  int updates = 2000;
  int batch_size = 8;
  double win_s = 3.0;
  double hop_s = 3.0;
  int max_frames = 512;  // positional table length
  std::uint64_t seed = 0;

  void validate() const;
  nlohmann::json to_json() const;
  static Eeg2vecConfig from_json(const nlohmann::json& j);
};

}  // namespace eegdec::pretrain
