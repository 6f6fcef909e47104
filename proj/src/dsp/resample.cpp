// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/dsp/resample.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eegdec::dsp {

namespace {

constexpr std::int64_t kMaxFactor = 1 << 16;

double bessel_i0(double x) {
  // Power series; converges quickly for the beta values used here.
  double sum = 1.0, term = 1.0;
  const double q = x * x / 4.0;
  for (int k = 1; k < 64; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

}  // namespace

void reduce_ratio(double from_hz, double to_hz, std::int64_t& p, std::int64_t& q) {
  if (from_hz <= 0 || to_hz <= 0 || !std::isfinite(from_hz) || !std::isfinite(to_hz)) {
    throw std::invalid_argument("sample rates must be positive and finite");
  }
  // Continued-fraction expansion of to/from, stopping at the first convergent
  // that reproduces the ratio to 1e-12 relative.
  const double target = to_hz / from_hz;
  double x = target;
  std::int64_t p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // convergents: prev, prev-prev
  for (int iter = 0; iter < 64; ++iter) {
    const double af = std::floor(x);
    if (af > static_cast<double>(kMaxFactor) * kMaxFactor) break;
    const std::int64_t a = static_cast<std::int64_t>(af);
    const std::int64_t p2 = a * p0 + p1;
    const std::int64_t q2 = a * q0 + q1;
    if (p2 > kMaxFactor || q2 > kMaxFactor) break;
    p1 = p0; q1 = q0; p0 = p2; q0 = q2;
    if (q0 > 0 && std::abs(static_cast<double>(p0) / q0 - target) <= 1e-12 * target) {
      p = p0;
      q = q0;
      return;
    }
    const double frac = x - af;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  throw std::invalid_argument("resampling ratio is not rational with factors <= 2^16");
}

Resampler::Resampler(const ResamplerSpec& spec) : spec_(spec) {
  reduce_ratio(spec.from_hz, spec.to_hz, up_, down_);
  if (spec.half_len_factor < 1) throw std::invalid_argument("half_len_factor must be >= 1");

  half_len_ = static_cast<std::int64_t>(spec.half_len_factor) * std::max(up_, down_);
  const double cutoff_hz = spec.cutoff_hz > 0 ? spec.cutoff_hz
                                              : 0.5 * std::min(spec.from_hz, spec.to_hz);
  if (cutoff_hz > 0.5 * std::min(spec.from_hz, spec.to_hz) + 1e-9) {
    throw std::invalid_argument("anti-alias cutoff above output Nyquist");
  }
  // Cycles per upsampled sample.
  const double fc = cutoff_hz / (spec.from_hz * static_cast<double>(up_));

  taps_.assign(static_cast<std::size_t>(2 * half_len_ + 1), 0.0);
  const double i0b = bessel_i0(spec.kaiser_beta);
  for (std::int64_t k = -half_len_; k <= half_len_; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(half_len_);
    const double w = bessel_i0(spec.kaiser_beta * std::sqrt(std::max(0.0, 1.0 - t * t))) / i0b;
    taps_[static_cast<std::size_t>(k + half_len_)] = 2.0 * fc * sinc(2.0 * fc * k) * w;
  }
  // Normalize each polyphase branch to unit sum so constants pass through
  // exactly (a branch is the set of taps one output sample actually touches).
  for (std::int64_t r = 0; r < up_; ++r) {
    double s = 0.0;
    for (std::int64_t k = r; k <= 2 * half_len_; k += up_) s += taps_[static_cast<std::size_t>(k)];
    if (s == 0.0) throw std::logic_error("degenerate polyphase branch");
    for (std::int64_t k = r; k <= 2 * half_len_; k += up_) taps_[static_cast<std::size_t>(k)] /= s;
  }
}

std::size_t Resampler::output_length(std::size_t n) const {
  return static_cast<std::size_t>(
      std::llround(static_cast<double>(n) * static_cast<double>(up_) / static_cast<double>(down_)));
}

std::size_t Resampler::edge_samples_in() const {
  return static_cast<std::size_t>((half_len_ + up_ - 1) / up_);
}

std::size_t Resampler::edge_samples_out() const {
  return static_cast<std::size_t>((half_len_ + down_ - 1) / down_);
}

std::vector<double> Resampler::apply(std::span<const double> x) const {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  const std::int64_t filter_len_in = (2 * half_len_) / up_ + 1;
  if (n < filter_len_in) {
    throw std::invalid_argument("input shorter than the anti-alias filter (" +
                                std::to_string(n) + " < " + std::to_string(filter_len_in) + ")");
  }
  const std::int64_t m_out = static_cast<std::int64_t>(output_length(x.size()));
  std::vector<double> y(static_cast<std::size_t>(m_out), 0.0);
  for (std::int64_t m = 0; m < m_out; ++m) {
    // Output sample m sits at upsampled offset s; gather x[i] where the tap
    // index s - i*up lands inside the filter support.
    const std::int64_t s = m * down_ + half_len_;
    std::int64_t i_lo = (s - 2 * half_len_ + up_ - 1) / up_;  // ceil
    std::int64_t i_hi = s / up_;                              // floor
    if (i_lo < 0) i_lo = 0;
    if (i_hi > n - 1) i_hi = n - 1;
    double acc = 0.0;
    for (std::int64_t i = i_lo; i <= i_hi; ++i) {
      acc += taps_[static_cast<std::size_t>(s - i * up_)] * x[static_cast<std::size_t>(i)];
    }
    y[static_cast<std::size_t>(m)] = acc;
  }
  return y;
}

MatrixD Resampler::apply(const MatrixD& x) const {
  if (x.rows() == 0) return {};
  MatrixD out(x.rows(), output_length(x.cols()));
  for (std::size_t c = 0; c < x.rows(); ++c) {
    const auto row = apply(x.row(c));
    auto dst = out.row(c);
    for (std::size_t i = 0; i < row.size(); ++i) dst[i] = row[i];
  }
  return out;
}

std::vector<double> resample(std::span<const double> x, double from_hz, double to_hz) {
  return Resampler({.from_hz = from_hz, .to_hz = to_hz}).apply(x);
}

MatrixD resample(const MatrixD& x, double from_hz, double to_hz) {
  return Resampler({.from_hz = from_hz, .to_hz = to_hz}).apply(x);
}

}  // namespace eegdec::dsp
