// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/downstream/losses.hpp"

#include <cmath>
#include <stdexcept>

#include "eegdec/nn/ops.hpp"

namespace eegdec::task {

double pcc(std::span<const double> y, std::span<const double> y_hat) {
  if (y.size() != y_hat.size()) throw std::invalid_argument("pcc: length mismatch");
  const std::size_t n = y.size();
  if (n < 2) throw std::invalid_argument("pcc: need at least 2 samples");
  double my = 0.0, mh = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    my += y[i];
    mh += y_hat[i];
  }
  my /= static_cast<double>(n);
  mh /= static_cast<double>(n);
  double cov = 0.0, vy = 0.0, vh = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dy = y[i] - my;
    const double dh = y_hat[i] - mh;
    cov += dy * dh;
    vy += dy * dy;
    vh += dh * dh;
  }
  cov /= static_cast<double>(n);
  vy /= static_cast<double>(n);
  vh /= static_cast<double>(n);
  if (vy <= 0.0 || vh <= 0.0) {
    throw std::domain_error("pcc: zero variance input (degenerate)");
  }
  return cov / (std::sqrt(vy) * std::sqrt(vh));
}

nn::Tensor neg_pcc_loss(const nn::Tensor& y, const nn::Tensor& y_hat) {
  return nn::ops::scale(nn::ops::pearson(y, y_hat), -1.0);
}

nn::Tensor bce_loss(const nn::Tensor& logit, int label) {
  return nn::ops::bce_with_logit(logit, label);
}

}  // namespace eegdec::task
