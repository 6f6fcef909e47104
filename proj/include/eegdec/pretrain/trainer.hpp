// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <vector>

#include "eegdec/io/manifest.hpp"
#include "eegdec/pretrain/config.hpp"

namespace eegdec::pretrain {

struct PretrainResult {
  std::vector<double> loss_curve;  // one entry per update
};

/// Runs Adam updates on the selected objective over the manifest's train
/// split. Deterministic given cfg.seed (single-threaded). Saves the final
/// checkpoint to out_checkpoint; writes "step,loss" CSV when loss_csv is
/// non-empty. Aborts with a diagnostic on non-finite loss.
PretrainResult pretrain(const io::DatasetManifest& manifest, const Eeg2vecConfig& cfg,
                        const std::filesystem::path& out_checkpoint,
                        const std::filesystem::path& loss_csv = {});

}  // namespace eegdec::pretrain
