// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "eegdec/common/rng.hpp"

namespace eegdec::pretrain {

/// Union of fixed-length spans over the frame axis.
struct MaskPlan {
  std::vector<std::uint8_t> masked;  // [T_f]
  std::vector<std::size_t> span_starts;

  std::size_t coverage() const;
  std::vector<std::size_t> masked_indices() const;
};

/// Draws uniformly random span starts (spans may overlap) until the union
/// covers at least mask_ratio * t_frames frames.
MaskPlan sample_mask(std::size_t t_frames, double mask_ratio, std::size_t mask_span, Rng& rng);

}  // namespace eegdec::pretrain
