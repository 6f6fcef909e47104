// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/dsp/pipeline.hpp"

#include <stdexcept>

#include "eegdec/dsp/car.hpp"
#include "eegdec/dsp/resample.hpp"

namespace eegdec::dsp {

MatrixD artifact_removal_hook(const MatrixD& x) { return x; }

io::Recording preprocess_recording(const io::Recording& rec, const PreprocessChain& chain) {
  rec.validate();
  if (chain.out_hz <= 0) throw std::invalid_argument("preprocess out_hz must be positive");

  MatrixD eeg = rec.eeg.cast<double>();
  double fs = rec.sample_rate_hz;

  if (fs > chain.intermediate_hz) {
    eeg = resample(eeg, fs, chain.intermediate_hz);
    fs = chain.intermediate_hz;
  }

  eeg = chain.hook ? chain.hook(eeg) : artifact_removal_hook(eeg);
  eeg = car_reference(eeg);
  if (fs != chain.out_hz) {
    eeg = resample(eeg, fs, chain.out_hz);
  }

  io::Recording out;
  out.subject_id = rec.subject_id;
  out.trial_id = rec.trial_id;
  out.sample_rate_hz = chain.out_hz;
  out.eeg = eeg.cast<float>();

  if (rec.has_envelope()) {
    std::vector<double> env(rec.envelope.begin(), rec.envelope.end());
    if (rec.sample_rate_hz != chain.out_hz) {
      env = resample(env, rec.sample_rate_hz, chain.out_hz);
    }
    // EEG passes through two resampling stages when fs > intermediate_hz;
    // trim any one-sample length mismatch against the single-stage envelope.
    env.resize(out.eeg.cols(), 0.0);
    out.envelope.resize(env.size());
    for (std::size_t i = 0; i < env.size(); ++i) out.envelope[i] = static_cast<float>(env[i]);
  }
  out.validate();
  return out;
}

}  // namespace eegdec::dsp
