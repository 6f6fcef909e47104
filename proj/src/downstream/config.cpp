// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/downstream/config.hpp"

#include <set>
#include <stdexcept>

namespace eegdec::task {

void DownstreamConfig::validate() const {
  if (speech_layers < 1 || speech_dim < 1 || backbone_layers < 1 || backbone_dim < 1 ||
      backbone_ffn_dim < 1 || backbone_heads < 1 || backbone_conv_dim < 1) {
    throw std::invalid_argument("downstream dimensions must be positive");
  }
  if (speech_kernel < 1 || speech_kernel % 2 == 0) {
    throw std::invalid_argument("speech conv kernel must be odd for same padding");
  }
  if (backbone_conv_kernel < 1 || backbone_conv_kernel % 2 == 0) {
    throw std::invalid_argument("backbone conv kernel must be odd");
  }
  if (backbone_dim % backbone_heads != 0) {
    throw std::invalid_argument("backbone_dim must be divisible by backbone_heads");
  }
  if (lr <= 0 || epochs < 1 || batch_size < 1) {
    throw std::invalid_argument("training hyperparameters must be positive");
  }
  if (win_s <= 0 || hop_s <= 0) throw std::invalid_argument("window/hop must be positive");
  if (!(alpha_min >= 0.0) || !(alpha_max < 1.0) || alpha_min > alpha_max) {
    throw std::invalid_argument("augmentation alpha range must lie within [0, 1)");
  }
  if (max_frames < 1) throw std::invalid_argument("max_frames must be positive");
  if (max_train_segments_per_epoch < 0) {
    throw std::invalid_argument("max_train_segments_per_epoch must be >= 0");
  }
}

nlohmann::json DownstreamConfig::to_json() const {
  return {
      {"speech_layers", speech_layers},
      {"speech_kernel", speech_kernel},
      {"speech_dim", speech_dim},
      {"backbone_layers", backbone_layers},
      {"backbone_dim", backbone_dim},
      {"backbone_ffn_dim", backbone_ffn_dim},
      {"backbone_heads", backbone_heads},
      {"backbone_conv_kernel", backbone_conv_kernel},
      {"backbone_conv_dim", backbone_conv_dim},
      {"shared_backbone", shared_backbone},
      {"lr", lr},
      {"weight_decay", weight_decay},
      {"epochs", epochs},
      {"batch_size", batch_size},
      {"win_s", win_s},
      {"hop_s", hop_s},
      {"augment", augment},
      {"alpha_min", alpha_min},
      {"alpha_max", alpha_max},
      {"max_frames", max_frames},
      {"max_train_segments_per_epoch", max_train_segments_per_epoch},
      {"seed", seed},
  };
}

DownstreamConfig DownstreamConfig::from_json(const nlohmann::json& j) {
  DownstreamConfig cfg;
  const std::set<std::string> known = {
      "speech_layers", "speech_kernel", "speech_dim", "backbone_layers", "backbone_dim",
      "backbone_ffn_dim", "backbone_heads", "backbone_conv_kernel", "backbone_conv_dim",
      "shared_backbone", "lr", "weight_decay", "epochs", "batch_size", "win_s", "hop_s",
      "augment", "alpha_min", "alpha_max", "max_frames", "max_train_segments_per_epoch", "seed"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw std::invalid_argument("unknown downstream config key: " + key);
  }
  cfg.speech_layers = j.value("speech_layers", cfg.speech_layers);
  cfg.speech_kernel = j.value("speech_kernel", cfg.speech_kernel);
  cfg.speech_dim = j.value("speech_dim", cfg.speech_dim);
  cfg.backbone_layers = j.value("backbone_layers", cfg.backbone_layers);
  cfg.backbone_dim = j.value("backbone_dim", cfg.backbone_dim);
  cfg.backbone_ffn_dim = j.value("backbone_ffn_dim", cfg.backbone_ffn_dim);
  cfg.backbone_heads = j.value("backbone_heads", cfg.backbone_heads);
  cfg.backbone_conv_kernel = j.value("backbone_conv_kernel", cfg.backbone_conv_kernel);
  cfg.backbone_conv_dim = j.value("backbone_conv_dim", cfg.backbone_conv_dim);
  cfg.shared_backbone = j.value("shared_backbone", cfg.shared_backbone);
  cfg.lr = j.value("lr", cfg.lr);
  cfg.weight_decay = j.value("weight_decay", cfg.weight_decay);
  cfg.epochs = j.value("epochs", cfg.epochs);
  cfg.batch_size = j.value("batch_size", cfg.batch_size);
  cfg.win_s = j.value("win_s", cfg.win_s);
  cfg.hop_s = j.value("hop_s", cfg.hop_s);
  cfg.augment = j.value("augment", cfg.augment);
  cfg.alpha_min = j.value("alpha_min", cfg.alpha_min);
  cfg.alpha_max = j.value("alpha_max", cfg.alpha_max);
  cfg.max_frames = j.value("max_frames", cfg.max_frames);
  cfg.max_train_segments_per_epoch =
      j.value("max_train_segments_per_epoch", cfg.max_train_segments_per_epoch);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.validate();
  return cfg;
}

}  // namespace eegdec::task
