// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/downstream/augment.hpp"

#include <stdexcept>

namespace eegdec::task {

MatrixF channel_mix_augment(const MatrixF& eeg, Rng& rng, double alpha_min, double alpha_max) {
  if (eeg.rows() < 2) throw std::invalid_argument("channel mixing needs at least 2 channels");
  if (!(alpha_min >= 0.0) || !(alpha_max < 1.0) || alpha_min > alpha_max) {
    throw std::invalid_argument("alpha range must lie within [0, 1)");
  }
  const std::size_t c_count = eeg.rows(), n = eeg.cols();
  MatrixF out(c_count, n);
  for (std::size_t c = 0; c < c_count; ++c) {
    // distinct source channel
    std::size_t src = rng.below(c_count - 1);
    if (src >= c) ++src;
    const double alpha = rng.real(alpha_min, alpha_max);
    const auto self_row = eeg.row(c);
    const auto src_row = eeg.row(src);
    auto dst = out.row(c);
    for (std::size_t i = 0; i < n; ++i) {
      dst[i] = static_cast<float>((1.0 - alpha) * self_row[i] + alpha * src_row[i]);
    }
  }
  return out;
}

}  // namespace eegdec::task
