// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "eegdec/common/matrix.hpp"

namespace eegdec::io {

/// A multichannel EEG recording with the paired stimulus envelope.
/// Samples are stored as 32-bit floats, matching the on-disk container.
struct Recording {
  std::string subject_id;
  std::string trial_id;
  MatrixF eeg;                  // [C channels x N samples]
  std::vector<float> envelope;  // length N, or empty when absent
  double sample_rate_hz = 0.0;

  std::size_t channels() const { return eeg.rows(); }
  std::size_t samples() const { return eeg.cols(); }
  bool has_envelope() const { return !envelope.empty(); }

  /// Throws std::invalid_argument on any invariant violation
  /// (C >= 1, finite samples, envelope length, positive sample rate).
  void validate() const;
};

/// Container format: u32 little-endian header length, JSON header, then
/// channel-major f32 little-endian samples, then the envelope samples when
/// present. Round-trips bit-exactly.
void write_recording(const Recording& rec, const std::filesystem::path& path);
Recording read_recording(const std::filesystem::path& path);

}  // namespace eegdec::io
