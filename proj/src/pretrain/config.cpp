// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/pretrain/config.hpp"

#include <set>
#include <stdexcept>

namespace eegdec::pretrain {

std::string objective_name(Objective o) {
  return o == Objective::contrastive ? "contrastive" : "reconstruction";
}

Objective objective_from_name(const std::string& name) {
  if (name == "contrastive") return Objective::contrastive;
  if (name == "reconstruction") return Objective::reconstruction;
  throw std::invalid_argument("unknown objective: " + name);
}

void Eeg2vecConfig::validate() const {
  if (input_channels < 1 || encoder_layers < 1 || encoder_dim < 1 || context_layers < 1 ||
      context_dim < 1 || context_ffn_dim < 1 || context_heads < 1) {
    throw std::invalid_argument("model dimensions must be positive");
  }
  if (encoder_kernel < 1 || encoder_kernel % 2 == 0) {
    throw std::invalid_argument("encoder kernel must be odd for same padding");
  }
  if (context_dim % context_heads != 0) {
    throw std::invalid_argument("context_dim must be divisible by context_heads");
  }
  if (!(mask_ratio > 0.0) || !(mask_ratio < 1.0)) {
    throw std::invalid_argument("mask_ratio must lie in (0, 1)");
  }
  if (mask_span < 1) throw std::invalid_argument("mask_span must be >= 1");
  if (n_negatives < 1) throw std::invalid_argument("n_negatives must be >= 1");
  if (!(temperature > 0.0)) throw std::invalid_argument("temperature must be positive");
  if (lr <= 0 || updates < 1 || batch_size < 1) {
    throw std::invalid_argument("training hyperparameters must be positive");
  }
  if (win_s <= 0 || hop_s <= 0) throw std::invalid_argument("window/hop must be positive");
  if (max_frames < 1) throw std::invalid_argument("max_frames must be positive");
}

nlohmann::json Eeg2vecConfig::to_json() const {
  return {
      {"input_channels", input_channels},
      {"encoder_layers", encoder_layers},
      {"encoder_kernel", encoder_kernel},
      {"encoder_dim", encoder_dim},
      {"context_layers", context_layers},
      {"context_dim", context_dim},
      {"context_ffn_dim", context_ffn_dim},
      {"context_heads", context_heads},
      {"mask_ratio", mask_ratio},
      {"mask_span", mask_span},
      {"n_negatives", n_negatives},
      {"temperature", temperature},
      {"objective", objective_name(objective)},
      {"reconstruction_masked_only", reconstruction_masked_only},
      {"lr", lr},
      {"updates", updates},
      {"batch_size", batch_size},
      {"win_s", win_s},
      {"hop_s", hop_s},
      {"max_frames", max_frames},
      {"seed", seed},
  };
}

Eeg2vecConfig Eeg2vecConfig::from_json(const nlohmann::json& j) {
  Eeg2vecConfig cfg;
  const std::set<std::string> known = {
      "input_channels", "encoder_layers", "encoder_kernel", "encoder_dim",
      "context_layers", "context_dim", "context_ffn_dim", "context_heads",
      "mask_ratio", "mask_span", "n_negatives", "temperature", "objective",
      "reconstruction_masked_only", "lr", "updates", "batch_size", "win_s",
      "hop_s", "max_frames", "seed"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw std::invalid_argument("unknown pretrain config key: " + key);
  }
  cfg.input_channels = j.value("input_channels", cfg.input_channels);
  cfg.encoder_layers = j.value("encoder_layers", cfg.encoder_layers);
  cfg.encoder_kernel = j.value("encoder_kernel", cfg.encoder_kernel);
  cfg.encoder_dim = j.value("encoder_dim", cfg.encoder_dim);
  cfg.context_layers = j.value("context_layers", cfg.context_layers);
  cfg.context_dim = j.value("context_dim", cfg.context_dim);
  cfg.context_ffn_dim = j.value("context_ffn_dim", cfg.context_ffn_dim);
  cfg.context_heads = j.value("context_heads", cfg.context_heads);
  cfg.mask_ratio = j.value("mask_ratio", cfg.mask_ratio);
  cfg.mask_span = j.value("mask_span", cfg.mask_span);
  cfg.n_negatives = j.value("n_negatives", cfg.n_negatives);
  cfg.temperature = j.value("temperature", cfg.temperature);
  if (j.contains("objective")) cfg.objective = objective_from_name(j.at("objective"));
  cfg.reconstruction_masked_only = j.value("reconstruction_masked_only", cfg.reconstruction_masked_only);
  cfg.lr = j.value("lr", cfg.lr);
  cfg.updates = j.value("updates", cfg.updates);
  cfg.batch_size = j.value("batch_size", cfg.batch_size);
  cfg.win_s = j.value("win_s", cfg.win_s);
  cfg.hop_s = j.value("hop_s", cfg.hop_s);
  cfg.max_frames = j.value("max_frames", cfg.max_frames);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.validate();
  return cfg;
}

}  // namespace eegdec::pretrain
