// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/pretrain/trainer.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "eegdec/io/windowing.hpp"
#include "eegdec/nn/ops.hpp"
#include "eegdec/nn/optim.hpp"
#include "eegdec/pretrain/losses.hpp"
#include "eegdec/pretrain/model.hpp"

namespace eegdec::pretrain {

namespace {

constexpr std::uint64_t kInitStream = 0x1457;
constexpr std::uint64_t kShuffleStream = 0x5487;
constexpr std::uint64_t kMaskStream = 0x3a5c;
constexpr std::uint64_t kNegStream = 0x90b1;

}  // namespace

PretrainResult pretrain(const io::DatasetManifest& manifest, const Eeg2vecConfig& cfg,
                        const std::filesystem::path& out_checkpoint,
                        const std::filesystem::path& loss_csv) {
  cfg.validate();

  std::vector<MatrixF> windows;
  for (const auto& rw : io::load_split_windows(manifest, io::Split::train, cfg.win_s, cfg.hop_s)) {
    for (const auto& w : rw.windows) {
      if (w.eeg.rows() != static_cast<std::size_t>(cfg.input_channels)) {
        throw std::invalid_argument("recording channel count " + std::to_string(w.eeg.rows()) +
                                    " does not match the configured " +
                                    std::to_string(cfg.input_channels));
      }
      if (w.eeg.cols() > static_cast<std::size_t>(cfg.max_frames)) {
        throw std::invalid_argument("window longer than the positional table");
      }
      windows.push_back(w.eeg);
    }
  }
  if (windows.empty()) throw std::runtime_error("pretraining dataset yields no windows");

  Eeg2vecModel model(cfg, derive_seed(cfg.seed, kInitStream));
  nn::Adam optimizer(model.params().tensors(), {.lr = cfg.lr});
  Rng shuffle_rng(derive_seed(cfg.seed, kShuffleStream));
  Rng mask_rng(derive_seed(cfg.seed, kMaskStream));
  Rng neg_rng(derive_seed(cfg.seed, kNegStream));

  std::vector<std::size_t> order(windows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::size_t cursor = order.size();  // triggers a shuffle on first use
  const auto next_window = [&]() -> const MatrixF& {
    if (cursor >= order.size()) {
      for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[shuffle_rng.below(i)]);
      }
      cursor = 0;
    }
    return windows[order[cursor++]];
  };

  PretrainResult result;
  result.loss_curve.reserve(static_cast<std::size_t>(cfg.updates));
  bool warned_replacement = false;

  for (int step = 1; step <= cfg.updates; ++step) {
    std::vector<nn::Tensor> item_losses;
    item_losses.reserve(static_cast<std::size_t>(cfg.batch_size));
    for (int b = 0; b < cfg.batch_size; ++b) {
      const MatrixF& eeg = next_window();
      const nn::Tensor x = Eeg2vecModel::input_from_eeg(eeg);
      const nn::Tensor z = model.encode_features(x);
      const MaskPlan plan = sample_mask(z.rows(), cfg.mask_ratio,
                                        static_cast<std::size_t>(cfg.mask_span), mask_rng);
      const nn::Tensor c_pre = model.context_forward(z, &plan);
      if (cfg.objective == Objective::contrastive) {
        bool with_replacement = false;
        item_losses.push_back(contrastive_loss(c_pre, z, plan, cfg.n_negatives, cfg.temperature,
                                               neg_rng, &with_replacement));
        if (with_replacement && !warned_replacement) {
          std::cerr << "warning: fewer masked candidates than n_negatives; sampling negatives "
                       "with replacement\n";
          warned_replacement = true;
        }
      } else {
        item_losses.push_back(
            reconstruction_loss(c_pre, z, plan, cfg.reconstruction_masked_only));
      }
    }
    const nn::Tensor loss = nn::ops::mean_all(nn::ops::stack_scalars(item_losses));
    const double loss_value = loss.item();
    if (!std::isfinite(loss_value)) {
      throw std::runtime_error("pretraining diverged: non-finite loss at step " +
                               std::to_string(step));
    }
    optimizer.zero_grad();
    loss.backward();
    optimizer.step();
    result.loss_curve.push_back(loss_value);
  }

  nlohmann::json provenance = {
      {"created_by", "pretrain"},
      {"seed", cfg.seed},
      {"updates", cfg.updates},
      {"objective", objective_name(cfg.objective)},
      {"final_loss", result.loss_curve.back()},
  };
  save_checkpoint(out_checkpoint, cfg.to_json(), provenance, model.params());

  if (!loss_csv.empty()) {
    std::ofstream os(loss_csv, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open loss CSV for writing: " + loss_csv.string());
    os << "step,loss\n";
    char buf[64];
    for (std::size_t i = 0; i < result.loss_curve.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", result.loss_curve[i]);
      os << (i + 1) << "," << buf << "\n";
    }
  }
  return result;
}

}  // namespace eegdec::pretrain
