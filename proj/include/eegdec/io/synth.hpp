// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "eegdec/io/manifest.hpp"
#include "eegdec/io/recording.hpp"

namespace eegdec::io {

/// Parameters for the synthetic benchmark generator. `snr` is the linear
/// per-channel power ratio between the mixed-in envelope component and the
/// additive noise; +infinity means noiseless mixing.
struct SynthSpec {
  int n_subjects = 8;
  int trials_per_subject = 3;
  double duration_s = 60.0;
  double fs_hz = 64.0;
  int channels = 8;
  double snr = 1.0;
  std::uint64_t seed = 0;
};

/// Per-subject ground-truth mixing: which channels carry the envelope and
/// with what weight.
struct SubjectMixing {
  std::string subject_id;
  std::vector<int> mixed_channels;
  std::vector<double> weights;
};

/// Generates recordings where a band-limited (0.5-8 Hz) random envelope is
/// linearly mixed into a subject-specific channel subset at the given SNR,
/// with the remaining channels carrying independent noise. Writes one
/// container file per trial plus manifest.json and groundtruth.json into
/// out_dir. Deterministic given spec.seed.
DatasetManifest synth_dataset(const SynthSpec& spec, const std::filesystem::path& out_dir);

/// The envelope generator used by synth_dataset, exposed for tests: a sum of
/// random sinusoids with frequencies in [0.5, 8] Hz, standardized to zero
/// mean and unit population variance.
std::vector<double> synth_envelope(std::size_t n, double fs_hz, std::uint64_t seed);

}  // namespace eegdec::io
