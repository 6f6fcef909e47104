// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/io/windowing.hpp"

#include <cmath>
#include <stdexcept>

namespace eegdec::io {

namespace {

std::size_t to_sample_count(double seconds, double fs, const char* what) {
  const double x = seconds * fs;
  const double rounded = std::round(x);
  if (!(rounded >= 1.0) || std::abs(x - rounded) > 1e-9 * std::max(1.0, std::abs(x))) {
    throw std::invalid_argument(std::string(what) + " * fs must be a positive integer");
  }
  return static_cast<std::size_t>(rounded);
}

}  // namespace

std::vector<Window> window_segments(const Recording& rec, double win_s, double hop_s) {
  const std::size_t win = to_sample_count(win_s, rec.sample_rate_hz, "window length");
  const std::size_t hop = to_sample_count(hop_s, rec.sample_rate_hz, "hop length");
  const std::size_t n = rec.samples();
  if (win > n) {
    throw std::invalid_argument("window longer than recording: " + std::to_string(win) + " > " +
                                std::to_string(n));
  }
  const std::size_t count = (n - win) / hop + 1;
  std::vector<Window> out;
  out.reserve(count);
  for (std::size_t w = 0; w < count; ++w) {
    Window window;
    window.start = w * hop;
    window.subject_id = rec.subject_id;
    window.eeg = MatrixF(rec.channels(), win);
    for (std::size_t c = 0; c < rec.channels(); ++c) {
      const auto src = rec.eeg.row(c);
      auto dst = window.eeg.row(c);
      for (std::size_t i = 0; i < win; ++i) dst[i] = src[window.start + i];
    }
    if (rec.has_envelope()) {
      window.envelope.assign(rec.envelope.begin() + static_cast<long>(window.start),
                             rec.envelope.begin() + static_cast<long>(window.start + win));
    }
    out.push_back(std::move(window));
  }
  return out;
}

std::vector<RecordingWindows> load_split_windows(const DatasetManifest& manifest, Split split,
                                                 double win_s, double hop_s) {
  std::vector<RecordingWindows> out;
  for (const auto& entry : manifest.with_split(split)) {
    const Recording rec = read_recording(manifest.resolve(entry));
    RecordingWindows rw;
    rw.subject_id = rec.subject_id;
    rw.trial_id = rec.trial_id;
    rw.windows = window_segments(rec, win_s, hop_s);
    out.push_back(std::move(rw));
  }
  return out;
}

SegmentTriple sample_imposter(const std::vector<Window>& windows, std::size_t match_index,
                              Rng& rng) {
  if (windows.size() < 2) throw std::invalid_argument("need at least 2 windows");
  if (match_index >= windows.size()) throw std::invalid_argument("match index out of range");
  const Window& match = windows[match_index];
  if (match.envelope.empty()) {
    throw std::invalid_argument("matched window has no stimulus envelope");
  }
  const std::size_t win_len = match.envelope.size();

  std::vector<std::size_t> eligible;
  for (std::size_t j = 0; j < windows.size(); ++j) {
    const std::size_t a = windows[j].start, b = match.start;
    const std::size_t dist = a > b ? a - b : b - a;
    if (j != match_index && dist >= win_len && !windows[j].envelope.empty()) {
      eligible.push_back(j);
    }
  }
  if (eligible.empty()) throw std::runtime_error("no eligible imposter window");

  const Window& imposter = windows[eligible[rng.below(eligible.size())]];

  SegmentTriple triple;
  triple.eeg = match.eeg;
  triple.subject_id = match.subject_id;
  if (rng.coin()) {
    triple.stim_a = match.envelope;
    triple.stim_b = imposter.envelope;
    triple.label = 1;
  } else {
    triple.stim_a = imposter.envelope;
    triple.stim_b = match.envelope;
    triple.label = 0;
  }
  return triple;
}

}  // namespace eegdec::io
