// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "eegdec/common/matrix.hpp"
#include "eegdec/common/rng.hpp"
#include "eegdec/io/manifest.hpp"
#include "eegdec/io/recording.hpp"

namespace eegdec::io {

/// One aligned (EEG, envelope) window cut from a recording.
struct Window {
  MatrixF eeg;                  // [C x win]
  std::vector<float> envelope;  // [win], empty when the recording has none
  std::size_t start = 0;        // sample index in the source recording
  std::string subject_id;
};

/// The match-mismatch training unit: one EEG window plus the matched and
/// imposter stimulus windows. label == 1 iff stim_a is the matched segment.
struct SegmentTriple {
  MatrixF eeg;
  std::vector<float> stim_a;
  std::vector<float> stim_b;
  int label = 0;
  std::string subject_id;
};

struct RegressionSegment {
  MatrixF eeg;
  std::vector<float> envelope;
  std::string subject_id;
};

/// Consecutive aligned windows; count = floor((N - win) / hop) + 1.
/// win_s*fs and hop_s*fs must be positive integers and win <= N.
std::vector<Window> window_segments(const Recording& rec, double win_s, double hop_s);

/// Draws an imposter envelope window uniformly among windows that do not
/// overlap the matched one, then randomizes the (a, b) order with p = 0.5.
SegmentTriple sample_imposter(const std::vector<Window>& windows, std::size_t match_index,
                              Rng& rng);

/// All windows of one recording, kept together so imposters can be drawn
/// from the same trial.
struct RecordingWindows {
  std::string subject_id;
  std::string trial_id;
  std::vector<Window> windows;
};

std::vector<RecordingWindows> load_split_windows(const DatasetManifest& manifest, Split split,
                                                 double win_s, double hop_s);

}  // namespace eegdec::io
