// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/nn/gradcheck.hpp"

#include <cmath>
#include <stdexcept>

namespace eegdec::nn {

GradCheckReport grad_check(const std::function<Tensor()>& f,
                           const std::vector<std::pair<std::string, Tensor>>& params,
                           double eps) {
  if (eps <= 0) throw std::invalid_argument("grad_check eps must be positive");

  for (const auto& [_, t] : params) {
    Tensor p = t;
    p.zero_grad();
  }
  const Tensor loss = f();
  loss.backward();

  std::vector<std::vector<double>> analytic;
  analytic.reserve(params.size());
  for (const auto& [_, t] : params) {
    analytic.push_back(t.grad().size() == t.numel() ? t.grad()
                                                    : std::vector<double>(t.numel(), 0.0));
  }

  GradCheckReport report;
  for (std::size_t pi = 0; pi < params.size(); ++pi) {
    Tensor p = params[pi].second;
    for (std::size_t i = 0; i < p.numel(); ++i) {
      const double orig = p.value()[i];
      p.value()[i] = orig + eps;
      const double up = f().item();
      p.value()[i] = orig - eps;
      const double down = f().item();
      p.value()[i] = orig;

      const double numeric = (up - down) / (2.0 * eps);
      const double a = analytic[pi][i];
      const double abs_err = std::abs(a - numeric);
      const double rel_err = abs_err / std::max({1e-6, std::abs(a), std::abs(numeric)});
      if (rel_err > report.max_rel_err) {
        report.max_rel_err = rel_err;
        report.worst_param = params[pi].first;
        report.worst_coord = i;
      }
      report.max_abs_err = std::max(report.max_abs_err, abs_err);
    }
  }
  return report;
}

GradCheckReport grad_check(const std::function<Tensor()>& f, const ParamStore& params,
                           double eps) {
  return grad_check(f, params.items(), eps);
}

}  // namespace eegdec::nn
