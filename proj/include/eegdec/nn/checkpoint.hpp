// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "eegdec/nn/layers.hpp"

namespace eegdec::nn {

/// Checkpoint container: u32 little-endian header length, JSON header with
/// the architecture config, training provenance and the ordered parameter
/// table (name, shape), then the concatenated f64 little-endian payloads.
void save_checkpoint(const std::filesystem::path& path, const nlohmann::json& arch,
                     const nlohmann::json& provenance, const ParamStore& params);

struct LoadedCheckpoint {
  nlohmann::json arch;
  nlohmann::json provenance;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> shapes;
  std::vector<std::vector<double>> values;
};

LoadedCheckpoint load_checkpoint(const std::filesystem::path& path);

/// Copies loaded values into a freshly constructed model's parameters,
/// verifying name order and shapes against the store.
void load_into(const LoadedCheckpoint& ckpt, ParamStore& params);

}  // namespace eegdec::nn
