// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eegdec/common/matrix.hpp"

namespace eegdec::dsp {

/// Rational-ratio resampler specification. from/to must reduce to p/q with
/// p, q <= 2^16. The anti-alias filter is a Kaiser-windowed sinc with
/// half_len_factor * max(p, q) taps per side in the upsampled domain.
struct ResamplerSpec {
  double from_hz = 0.0;
  double to_hz = 0.0;
  int half_len_factor = 10;
  double kaiser_beta = 5.0;
  double cutoff_hz = 0.0;  // 0 = auto: min(from, to) / 2
};

/// Polyphase rational resampler. DC is preserved exactly away from the
/// zero-padded edges because every polyphase branch is normalized to unit sum.
class Resampler {
 public:
  explicit Resampler(const ResamplerSpec& spec);

  std::vector<double> apply(std::span<const double> x) const;
  MatrixD apply(const MatrixD& x) const;  // row-wise

  std::int64_t up() const { return up_; }
  std::int64_t down() const { return down_; }
  std::size_t output_length(std::size_t n) const;
  /// Input samples consumed by the filter's half length (the transient zone).
  std::size_t edge_samples_in() const;
  /// Output samples affected by zero padding at each end.
  std::size_t edge_samples_out() const;

 private:
  ResamplerSpec spec_;
  std::int64_t up_ = 1;    // p
  std::int64_t down_ = 1;  // q
  std::int64_t half_len_ = 0;  // L, in upsampled samples
  std::vector<double> taps_;   // 2L+1 taps, phase-normalized
};

/// Reduces to_hz/from_hz to p/q with p, q <= 2^16; throws on irrational ratio.
void reduce_ratio(double from_hz, double to_hz, std::int64_t& p, std::int64_t& q);

std::vector<double> resample(std::span<const double> x, double from_hz, double to_hz);
MatrixD resample(const MatrixD& x, double from_hz, double to_hz);

}  // namespace eegdec::dsp
