// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "eegdec/common/matrix.hpp"
#include "eegdec/common/rng.hpp"

namespace eegdec::task {

/// Channel-mixing augmentation: each output channel is (1-alpha) of itself
/// plus alpha of a distinct source channel from the same window, with alpha
/// drawn uniformly from [alpha_min, alpha_max]. Training-time only.
MatrixF channel_mix_augment(const MatrixF& eeg, Rng& rng, double alpha_min, double alpha_max);

}  // namespace eegdec::task
