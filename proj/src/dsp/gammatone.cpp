// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/dsp/gammatone.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "eegdec/dsp/resample.hpp"

namespace eegdec::dsp {

double erb_rate(double f_hz) { return 21.4 * std::log10(1.0 + 0.00437 * f_hz); }

double erb_rate_inverse(double rate) {
  return (std::pow(10.0, rate / 21.4) - 1.0) / 0.00437;
}

double erb_bandwidth(double f_hz) { return 24.7 * (0.00437 * f_hz + 1.0); }

GammatoneFilterbank::GammatoneFilterbank(const GammatoneBank& cfg, double fs_hz) {
  if (cfg.n_bands < 1) throw std::invalid_argument("gammatone bank needs n_bands >= 1");
  if (!(cfg.f_low_hz > 0) || !(cfg.f_low_hz < cfg.f_high_hz)) {
    throw std::invalid_argument("gammatone band edges must satisfy 0 < f_low < f_high");
  }
  if (!(fs_hz > 2.0 * cfg.f_high_hz)) {
    throw std::invalid_argument("gammatone f_high must lie below the input Nyquist");
  }
  if (!(cfg.compression_exponent > 0)) {
    throw std::invalid_argument("compression exponent must be positive");
  }

  const double lo = erb_rate(cfg.f_low_hz);
  const double hi = erb_rate(cfg.f_high_hz);
  centers_.resize(static_cast<std::size_t>(cfg.n_bands));
  for (int b = 0; b < cfg.n_bands; ++b) {
    const double frac = cfg.n_bands == 1 ? 0.5
                                         : static_cast<double>(b) / (cfg.n_bands - 1);
    centers_[static_cast<std::size_t>(b)] = erb_rate_inverse(lo + frac * (hi - lo));
  }

  bands_.resize(centers_.size());
  for (std::size_t b = 0; b < centers_.size(); ++b) {
    const double cf = centers_[b];
    const double bw = cfg.bandwidth_factor * erb_bandwidth(cf);
    const double theta = 2.0 * std::numbers::pi * cf / fs_hz;
    const double r = std::exp(-2.0 * std::numbers::pi * bw / fs_hz);
    BandCoeffs& c = bands_[b];
    c.a1 = 2.0 * r * std::cos(theta);
    c.a2 = -r * r;
    // Unit gain at cf: evaluate one all-pole section on the unit circle and
    // take the 4th root of the cascade's correction for each section.
    const std::complex<double> z1 = std::polar(1.0, -theta);
    const std::complex<double> denom = 1.0 - c.a1 * z1 - c.a2 * z1 * z1;
    c.section_gain = std::abs(denom);
  }
}

std::vector<double> GammatoneFilterbank::filter_band(std::span<const double> x, int band) const {
  if (band < 0 || band >= n_bands()) throw std::invalid_argument("band index out of range");
  const BandCoeffs& c = bands_[static_cast<std::size_t>(band)];
  std::vector<double> y(x.begin(), x.end());
  for (int stage = 0; stage < 4; ++stage) {
    double y1 = 0.0, y2 = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double v = c.section_gain * y[i] + c.a1 * y1 + c.a2 * y2;
      y2 = y1;
      y1 = v;
      y[i] = v;
    }
  }
  return y;
}

std::vector<double> gammatone_envelope(std::span<const double> audio, double fs_hz,
                                       const GammatoneBank& bank, double out_hz) {
  if (audio.empty()) throw std::invalid_argument("gammatone envelope of empty input");
  GammatoneFilterbank fb(bank, fs_hz);

  std::vector<double> acc(audio.size(), 0.0);
  for (int b = 0; b < fb.n_bands(); ++b) {
    const auto y = fb.filter_band(audio, b);
    for (std::size_t i = 0; i < y.size(); ++i) {
      acc[i] += std::pow(std::abs(y[i]), bank.compression_exponent);
    }
  }
  const double inv_bands = 1.0 / static_cast<double>(fb.n_bands());
  for (double& v : acc) v *= inv_bands;

  auto env = resample(acc, fs_hz, out_hz);
  for (double& v : env) v = std::max(0.0, v);  // resampler ripple can undershoot
  return env;
}

}  // namespace eegdec::dsp
