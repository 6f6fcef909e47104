// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/pretrain/mask.hpp"

#include <stdexcept>

namespace eegdec::pretrain {

std::size_t MaskPlan::coverage() const {
  std::size_t n = 0;
  for (const auto m : masked) n += m != 0;
  return n;
}

std::vector<std::size_t> MaskPlan::masked_indices() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < masked.size(); ++i) {
    if (masked[i]) idx.push_back(i);
  }
  return idx;
}

MaskPlan sample_mask(std::size_t t_frames, double mask_ratio, std::size_t mask_span, Rng& rng) {
  if (mask_span < 1) throw std::invalid_argument("mask span must be >= 1");
  if (t_frames < mask_span) {
    throw std::invalid_argument("sequence shorter than the mask span");
  }
  if (!(mask_ratio > 0.0) || !(mask_ratio < 1.0)) {
    throw std::invalid_argument("mask ratio must lie in (0, 1)");
  }
  MaskPlan plan;
  plan.masked.assign(t_frames, 0);
  const double target = mask_ratio * static_cast<double>(t_frames);
  std::size_t covered = 0;
  while (static_cast<double>(covered) < target) {
    const std::size_t start = rng.below(t_frames - mask_span + 1);
    plan.span_starts.push_back(start);
    for (std::size_t i = start; i < start + mask_span; ++i) {
      if (!plan.masked[i]) {
        plan.masked[i] = 1;
        ++covered;
      }
    }
  }
  return plan;
}

}  // namespace eegdec::pretrain
