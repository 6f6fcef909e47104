// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/io/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "eegdec/common/rng.hpp"

namespace eegdec::io {

namespace {

constexpr int kEnvelopeComponents = 24;

void check_spec(const SynthSpec& spec) {
  if (spec.n_subjects < 1 || spec.trials_per_subject < 1 || spec.channels < 1) {
    throw std::invalid_argument("synth spec counts must be >= 1");
  }
  if (spec.duration_s <= 0 || spec.fs_hz <= 0) {
    throw std::invalid_argument("synth spec duration and sample rate must be positive");
  }
  if (!(spec.snr > 0)) {  // also rejects NaN
    throw std::invalid_argument("synth spec snr must be positive (or +inf)");
  }
}

std::string subject_name(int idx) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "sub-%02d", idx + 1);
  return buf;
}

}  // namespace

std::vector<double> synth_envelope(std::size_t n, double fs_hz, std::uint64_t seed) {
  Rng rng(seed);
  const double f_hi = std::min(8.0, 0.45 * fs_hz);
  std::vector<double> freq(kEnvelopeComponents), phase(kEnvelopeComponents),
      amp(kEnvelopeComponents);
  for (int k = 0; k < kEnvelopeComponents; ++k) {
    freq[k] = rng.real(0.5, f_hi);
    phase[k] = rng.real(0.0, 2.0 * std::numbers::pi);
    amp[k] = rng.real(0.5, 1.5);
  }
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / fs_hz;
    double s = 0.0;
    for (int k = 0; k < kEnvelopeComponents; ++k) {
      s += amp[k] * std::sin(2.0 * std::numbers::pi * freq[k] * t + phase[k]);
    }
    e[i] = s;
  }
  double mean = 0.0;
  for (const double v : e) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (const double v : e) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n);
  const double inv_sd = var > 0 ? 1.0 / std::sqrt(var) : 1.0;
  for (double& v : e) v = (v - mean) * inv_sd;
  return e;
}

DatasetManifest synth_dataset(const SynthSpec& spec, const std::filesystem::path& out_dir) {
  check_spec(spec);
  std::filesystem::create_directories(out_dir);

  const std::size_t n = static_cast<std::size_t>(std::llround(spec.duration_s * spec.fs_hz));
  if (n == 0) throw std::invalid_argument("synth spec yields zero samples");

  const int n_heldout = std::max(1, spec.n_subjects / 4);
  const int first_heldout =
      spec.n_subjects > n_heldout ? spec.n_subjects - n_heldout : spec.n_subjects;

  DatasetManifest manifest;
  manifest.base_dir = out_dir;
  std::vector<SubjectMixing> mixings;

  for (int s = 0; s < spec.n_subjects; ++s) {
    const std::string sid = subject_name(s);
    Rng subj_rng(derive_seed(spec.seed, 0xA11CE000ULL + static_cast<std::uint64_t>(s)));

    const int n_mixed = std::clamp(spec.channels / 2, 1, spec.channels);
    std::vector<int> order(spec.channels);
    for (int c = 0; c < spec.channels; ++c) order[c] = c;
    for (int c = 0; c < n_mixed; ++c) {
      const int j = c + static_cast<int>(subj_rng.below(order.size() - c));
      std::swap(order[c], order[j]);
    }
    SubjectMixing mix;
    mix.subject_id = sid;
    mix.mixed_channels.assign(order.begin(), order.begin() + n_mixed);
    std::sort(mix.mixed_channels.begin(), mix.mixed_channels.end());
    for (int c = 0; c < n_mixed; ++c) mix.weights.push_back(subj_rng.real(0.5, 1.5));
    mixings.push_back(mix);

    for (int t = 0; t < spec.trials_per_subject; ++t) {
      const std::uint64_t trial_stream =
          0x7121AL + static_cast<std::uint64_t>(s) * 0x10001ULL + static_cast<std::uint64_t>(t);
      const auto envelope = synth_envelope(n, spec.fs_hz, derive_seed(spec.seed, trial_stream));

      Rng noise_rng(derive_seed(spec.seed, trial_stream ^ 0xBADC0FFEULL));
      Recording rec;
      rec.subject_id = sid;
      char trial_buf[16];
      std::snprintf(trial_buf, sizeof(trial_buf), "trial-%02d", t);
      rec.trial_id = trial_buf;
      rec.sample_rate_hz = spec.fs_hz;
      rec.eeg = MatrixF(spec.channels, n);
      rec.envelope.resize(n);
      for (std::size_t i = 0; i < n; ++i) rec.envelope[i] = static_cast<float>(envelope[i]);

      const bool noiseless = std::isinf(spec.snr);
      for (int c = 0; c < spec.channels; ++c) {
        const auto it =
            std::find(mix.mixed_channels.begin(), mix.mixed_channels.end(), c);
        if (it != mix.mixed_channels.end()) {
          const double w = mix.weights[static_cast<std::size_t>(it - mix.mixed_channels.begin())];
          const double sigma = noiseless ? 0.0 : w / std::sqrt(spec.snr);
          for (std::size_t i = 0; i < n; ++i) {
            const double noise = sigma == 0.0 ? 0.0 : sigma * noise_rng.normal();
            rec.eeg(c, i) = static_cast<float>(w * envelope[i] + noise);
          }
        } else {
          for (std::size_t i = 0; i < n; ++i) {
            rec.eeg(c, i) = static_cast<float>(noise_rng.normal());
          }
        }
      }

      const std::string fname = sid + "_" + rec.trial_id + ".eegrec";
      write_recording(rec, out_dir / fname);

      // Held-in subjects: last trial is the held-out story, the one before is
      // dev (with 2 trials: second is dev; with 1: train only).
      const int tps = spec.trials_per_subject;
      const int dev_trial = tps >= 3 ? tps - 2 : (tps == 2 ? 1 : -1);
      Split split;
      if (s >= first_heldout) {
        split = Split::test2_heldout_subject;
      } else if (tps >= 3 && t == tps - 1) {
        split = Split::test1_heldout_story;
      } else if (t == dev_trial) {
        split = Split::dev;
      } else {
        split = Split::train;
      }
      manifest.entries.push_back({fname, sid, split});
    }
  }

  nlohmann::json gt;
  gt["spec"] = {{"n_subjects", spec.n_subjects},
                {"trials_per_subject", spec.trials_per_subject},
                {"duration_s", spec.duration_s},
                {"fs_hz", spec.fs_hz},
                {"channels", spec.channels},
                {"snr", std::isinf(spec.snr) ? nlohmann::json("inf") : nlohmann::json(spec.snr)},
                {"seed", spec.seed}};
  nlohmann::json subjects = nlohmann::json::object();
  for (const auto& mix : mixings) {
    subjects[mix.subject_id] = {{"mixed_channels", mix.mixed_channels},
                                {"weights", mix.weights}};
  }
  gt["subjects"] = subjects;
  std::ofstream gos(out_dir / "groundtruth.json", std::ios::trunc);
  gos << gt.dump(2) << "\n";

  manifest.save(out_dir / "manifest.json");
  return manifest;
}

}  // namespace eegdec::io
