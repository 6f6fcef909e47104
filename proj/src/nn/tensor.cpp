// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/nn/tensor.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace eegdec::nn {

namespace {

std::size_t shape_numel(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (const std::size_t d : shape) {
    if (d == 0) throw std::invalid_argument("tensor dimensions must be positive");
    n *= d;
  }
  return n;
}

}  // namespace

Tensor Tensor::zeros(std::vector<std::size_t> shape, bool requires_grad) {
  return full(std::move(shape), 0.0, requires_grad);
}

Tensor Tensor::full(std::vector<std::size_t> shape, double fill, bool requires_grad) {
  auto node = std::make_shared<TensorNode>();
  node->value.assign(shape_numel(shape), fill);
  node->shape = std::move(shape);
  node->requires_grad = requires_grad;
  return Tensor(std::move(node));
}

Tensor Tensor::from_flat(std::vector<double> data, std::vector<std::size_t> shape,
                         bool requires_grad) {
  if (data.size() != shape_numel(shape)) {
    throw std::invalid_argument("tensor data length does not match shape");
  }
  auto node = std::make_shared<TensorNode>();
  node->value = std::move(data);
  node->shape = std::move(shape);
  node->requires_grad = requires_grad;
  return Tensor(std::move(node));
}

Tensor Tensor::scalar(double v, bool requires_grad) {
  return from_flat({v}, {1}, requires_grad);
}

Tensor Tensor::from_matrix(const MatrixD& m, bool requires_grad) {
  return from_flat(m.data(), {m.rows(), m.cols()}, requires_grad);
}

Tensor Tensor::from_vector(std::span<const double> v, bool requires_grad) {
  return from_flat({v.begin(), v.end()}, {v.size()}, requires_grad);
}

double Tensor::item() const {
  if (numel() != 1) throw std::logic_error("item() on a non-scalar tensor");
  return node_->value[0];
}

bool Tensor::all_finite() const {
  for (const double v : node_->value) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void Tensor::backward() const {
  if (!node_) throw std::logic_error("backward() on an empty tensor");
  if (numel() != 1) throw std::logic_error("backward() requires a scalar loss");
  if (!node_->requires_grad) return;

  // Iterative post-order over the requires_grad subgraph; children end up
  // before parents in `order`, so the reverse walk is a valid topo order.
  std::vector<TensorNode*> order;
  std::unordered_set<TensorNode*> visited;
  struct Frame {
    TensorNode* node;
    std::size_t next_parent = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({node_.get()});
  visited.insert(node_.get());
  while (!stack.empty()) {
    const std::size_t fi = stack.size() - 1;
    TensorNode* n = stack[fi].node;
    bool descended = false;
    while (stack[fi].next_parent < n->parents.size()) {
      TensorNode* p = n->parents[stack[fi].next_parent].node();
      ++stack[fi].next_parent;
      if (p->requires_grad && !visited.count(p)) {
        visited.insert(p);
        stack.push_back({p});
        descended = true;
        break;
      }
    }
    if (!descended) {
      order.push_back(n);
      stack.pop_back();
    }
  }

  for (TensorNode* n : order) n->ensure_grad();
  node_->grad[0] += 1.0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    TensorNode* n = *it;
    if (n->backward_fn) n->backward_fn(*n);
  }
}

namespace {
thread_local bool g_grad_enabled = true;
}

NoGradGuard::NoGradGuard() : previous_(g_grad_enabled) { g_grad_enabled = false; }
NoGradGuard::~NoGradGuard() { g_grad_enabled = previous_; }

bool grad_enabled() { return g_grad_enabled; }

Tensor make_op(std::vector<std::size_t> shape, std::vector<Tensor> parents,
               std::function<void(TensorNode&)> backward_fn) {
  auto node = std::make_shared<TensorNode>();
  node->value.assign(shape_numel(shape), 0.0);
  node->shape = std::move(shape);
  if (g_grad_enabled) {
    for (const auto& p : parents) {
      if (p.requires_grad()) node->requires_grad = true;
    }
  }
  if (node->requires_grad) {
    node->parents = std::move(parents);
    node->backward_fn = std::move(backward_fn);
  }
  return Tensor(std::move(node));
}

}  // namespace eegdec::nn
