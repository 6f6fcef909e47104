// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/dsp/car.hpp"

#include <stdexcept>

namespace eegdec::dsp {

MatrixD car_reference(const MatrixD& x) {
  if (x.rows() < 2) {
    throw std::invalid_argument("common-average reference needs at least 2 channels");
  }
  MatrixD out(x.rows(), x.cols());
  for (std::size_t t = 0; t < x.cols(); ++t) {
    double mean = 0.0;
    for (std::size_t c = 0; c < x.rows(); ++c) mean += x(c, t);
    mean /= static_cast<double>(x.rows());
    for (std::size_t c = 0; c < x.rows(); ++c) out(c, t) = x(c, t) - mean;
  }
  return out;
}

}  // namespace eegdec::dsp
