// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "eegdec/common/matrix.hpp"

namespace eegdec::nn {

class Tensor;

/// One node of the define-by-run graph. Ops allocate a node per result; the
/// backward closure reads this node's grad and accumulates into its parents.
struct TensorNode {
  std::vector<double> value;
  std::vector<double> grad;  // allocated on first backward touch
  std::vector<std::size_t> shape;
  bool requires_grad = false;
  std::vector<Tensor> parents;
  std::function<void(TensorNode&)> backward_fn;

  std::size_t numel() const { return value.size(); }
  void ensure_grad() {
    if (grad.size() != value.size()) grad.assign(value.size(), 0.0);
  }
};

/// Value-semantic handle to a shared graph node. Dense row-major storage;
/// rank <= 2 in practice ([T x D] activations, vectors, scalars).
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(std::vector<std::size_t> shape, bool requires_grad = false);
  static Tensor full(std::vector<std::size_t> shape, double fill, bool requires_grad = false);
  static Tensor from_flat(std::vector<double> data, std::vector<std::size_t> shape,
                          bool requires_grad = false);
  static Tensor scalar(double v, bool requires_grad = false);
  static Tensor from_matrix(const MatrixD& m, bool requires_grad = false);
  static Tensor from_vector(std::span<const double> v, bool requires_grad = false);

  bool defined() const { return node_ != nullptr; }
  TensorNode* node() const { return node_.get(); }

  const std::vector<std::size_t>& shape() const { return node_->shape; }
  std::size_t numel() const { return node_->value.size(); }
  std::size_t rows() const { return node_->shape.at(0); }
  std::size_t cols() const { return node_->shape.at(1); }

  std::vector<double>& value() { return node_->value; }
  const std::vector<double>& value() const { return node_->value; }
  std::vector<double>& grad() { return node_->grad; }
  const std::vector<double>& grad() const { return node_->grad; }
  double item() const;

  bool requires_grad() const { return node_->requires_grad; }
  void set_requires_grad(bool v) { node_->requires_grad = v; }
  void zero_grad() { node_->grad.assign(node_->value.size(), 0.0); }

  /// Reverse-mode sweep from a scalar. Parameter grads accumulate.
  void backward() const;

  bool all_finite() const;

 private:
  explicit Tensor(std::shared_ptr<TensorNode> node) : node_(std::move(node)) {}
  friend Tensor make_op(std::vector<std::size_t> shape, std::vector<Tensor> parents,
                        std::function<void(TensorNode&)> backward_fn);
  std::shared_ptr<TensorNode> node_;
};

/// Allocates a result node wired to its parents; requires_grad is inherited.
Tensor make_op(std::vector<std::size_t> shape, std::vector<Tensor> parents,
               std::function<void(TensorNode&)> backward_fn);

/// While alive, ops produce detached results (no backward closures); used for
/// frozen-extractor forwards and evaluation.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

bool grad_enabled();

}  // namespace eegdec::nn
