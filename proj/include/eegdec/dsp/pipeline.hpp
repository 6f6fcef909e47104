// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "eegdec/common/matrix.hpp"
#include "eegdec/io/recording.hpp"

namespace eegdec::dsp {

using ArtifactHook = std::function<MatrixD(const MatrixD&)>;

/// Artifact-removal stage of the chain. The default is the identity; a real
/// multichannel filter can be plugged in via PreprocessChain::hook.
MatrixD artifact_removal_hook(const MatrixD& x);

/// resample(fs -> intermediate) -> artifact hook -> common average -> resample
/// (-> out). The first stage is skipped when the input rate is already at or
/// below intermediate_hz. The envelope (when present) is resampled alongside.
struct PreprocessChain {
  double intermediate_hz = 1024.0;
  double out_hz = 64.0;
  ArtifactHook hook;  // empty = identity
};

io::Recording preprocess_recording(const io::Recording& rec, const PreprocessChain& chain);

}  // namespace eegdec::dsp
