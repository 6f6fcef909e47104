// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "eegdec/common/matrix.hpp"

namespace eegdec::dsp {

/// Common-average re-reference: subtracts the per-sample channel mean.
/// Requires at least 2 channels. Idempotent.
MatrixD car_reference(const MatrixD& x);

}  // namespace eegdec::dsp
