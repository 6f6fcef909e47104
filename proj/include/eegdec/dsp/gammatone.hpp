// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

namespace eegdec::dsp {

/// Gammatone filterbank configuration: 4th-order all-pole filters with center
/// frequencies spaced uniformly on the ERB-rate scale.
struct GammatoneBank {
  int n_bands = 28;
  double f_low_hz = 50.0;
  double f_high_hz = 5000.0;
  double compression_exponent = 0.6;
  double bandwidth_factor = 1.019;  // ERB -> gammatone bandwidth correction
};

double erb_rate(double f_hz);
double erb_rate_inverse(double rate);
double erb_bandwidth(double f_hz);

/// Per-band 4th-order gammatone realized as 4 cascaded identical all-pole
/// biquads, gain-normalized to unit response at the center frequency.
class GammatoneFilterbank {
 public:
  GammatoneFilterbank(const GammatoneBank& cfg, double fs_hz);

  const std::vector<double>& center_frequencies() const { return centers_; }
  int n_bands() const { return static_cast<int>(centers_.size()); }

  /// Linear band output (zero initial state).
  std::vector<double> filter_band(std::span<const double> x, int band) const;

 private:
  struct BandCoeffs {
    double a1 = 0.0;  // 2 r cos(theta)
    double a2 = 0.0;  // -r^2
    double section_gain = 1.0;
  };
  std::vector<double> centers_;
  std::vector<BandCoeffs> bands_;
};

/// Full envelope chain: band filter -> |.|^exponent -> band mean -> resample
/// to out_hz -> clamp at zero. fs_hz must exceed 2 * f_high_hz.
std::vector<double> gammatone_envelope(std::span<const double> audio, double fs_hz,
                                       const GammatoneBank& bank, double out_hz);

}  // namespace eegdec::dsp
