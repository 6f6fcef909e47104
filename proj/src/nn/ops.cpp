// Copyright (c) 2026 The eegdec authors
// SPDX-License-Identifier: Apache-2.0
#include "eegdec/nn/ops.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eegdec::nn::ops {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

/// Grad buffer of a parent if it participates in backprop, else nullptr.
double* grad_ptr(TensorNode& self, std::size_t parent) {
  TensorNode* p = self.parents[parent].node();
  if (!p->requires_grad) return nullptr;
  p->ensure_grad();
  return p->grad.data();
}

const std::vector<double>& pval(const TensorNode& self, std::size_t parent) {
  return self.parents[parent].node()->value;
}

}  // namespace

Tensor add(const Tensor& a, const Tensor& b) {
  require(a.shape() == b.shape(), "add: shape mismatch");
  Tensor out = make_op(a.shape(), {a, b}, [](TensorNode& self) {
    for (int side = 0; side < 2; ++side) {
      if (double* g = grad_ptr(self, side)) {
        for (std::size_t i = 0; i < self.grad.size(); ++i) g[i] += self.grad[i];
      }
    }
  });
  auto& y = out.value();
  const auto& av = a.value();
  const auto& bv = b.value();
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = av[i] + bv[i];
  return out;
}

Tensor sub(const Tensor& a, const Tensor& b) {
  require(a.shape() == b.shape(), "sub: shape mismatch");
  Tensor out = make_op(a.shape(), {a, b}, [](TensorNode& self) {
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t i = 0; i < self.grad.size(); ++i) g[i] += self.grad[i];
    }
    if (double* g = grad_ptr(self, 1)) {
      for (std::size_t i = 0; i < self.grad.size(); ++i) g[i] -= self.grad[i];
    }
  });
  auto& y = out.value();
  const auto& av = a.value();
  const auto& bv = b.value();
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = av[i] - bv[i];
  return out;
}

Tensor mul(const Tensor& a, const Tensor& b) {
  require(a.shape() == b.shape(), "mul: shape mismatch");
  Tensor out = make_op(a.shape(), {a, b}, [](TensorNode& self) {
    const auto& av = pval(self, 0);
    const auto& bv = pval(self, 1);
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t i = 0; i < self.grad.size(); ++i) g[i] += self.grad[i] * bv[i];
    }
    if (double* g = grad_ptr(self, 1)) {
      for (std::size_t i = 0; i < self.grad.size(); ++i) g[i] += self.grad[i] * av[i];
    }
  });
  auto& y = out.value();
  const auto& av = a.value();
  const auto& bv = b.value();
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = av[i] * bv[i];
  return out;
}

Tensor scale(const Tensor& a, double k) {
  Tensor out = make_op(a.shape(), {a}, [k](TensorNode& self) {
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t i = 0; i < self.grad.size(); ++i) g[i] += k * self.grad[i];
    }
  });
  auto& y = out.value();
  const auto& av = a.value();
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = k * av[i];
  return out;
}

Tensor abs(const Tensor& a) {
  Tensor out = make_op(a.shape(), {a}, [](TensorNode& self) {
    const auto& av = pval(self, 0);
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t i = 0; i < self.grad.size(); ++i) {
        const double s = av[i] > 0 ? 1.0 : (av[i] < 0 ? -1.0 : 0.0);
        g[i] += s * self.grad[i];
      }
    }
  });
  auto& y = out.value();
  const auto& av = a.value();
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::abs(av[i]);
  return out;
}

Tensor reshape(const Tensor& x, std::vector<std::size_t> shape) {
  std::size_t n = 1;
  for (const std::size_t d : shape) n *= d;
  require(n == x.numel(), "reshape: element count mismatch");
  Tensor out = make_op(std::move(shape), {x}, [](TensorNode& self) {
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t i = 0; i < self.grad.size(); ++i) g[i] += self.grad[i];
    }
  });
  out.value() = x.value();
  return out;
}

Tensor add_row_broadcast(const Tensor& x, const Tensor& bias) {
  require(x.shape().size() == 2 && bias.shape().size() == 1, "add_row_broadcast: bad ranks");
  require(x.cols() == bias.shape()[0], "add_row_broadcast: width mismatch");
  const std::size_t rows = x.rows(), cols = x.cols();
  Tensor out = make_op(x.shape(), {x, bias}, [rows, cols](TensorNode& self) {
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t i = 0; i < self.grad.size(); ++i) g[i] += self.grad[i];
    }
    if (double* g = grad_ptr(self, 1)) {
      for (std::size_t r = 0; r < rows; ++r) {
        const double* gr = self.grad.data() + r * cols;
        for (std::size_t c = 0; c < cols; ++c) g[c] += gr[c];
      }
    }
  });
  auto& y = out.value();
  const auto& xv = x.value();
  const auto& bv = bias.value();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) y[r * cols + c] = xv[r * cols + c] + bv[c];
  }
  return out;
}

Tensor slice_cols(const Tensor& x, std::size_t c0, std::size_t c1) {
  require(x.shape().size() == 2, "slice_cols: rank-2 input required");
  require(c0 < c1 && c1 <= x.cols(), "slice_cols: bad range");
  const std::size_t rows = x.rows(), cols = x.cols(), w = c1 - c0;
  Tensor out = make_op({rows, w}, {x}, [rows, cols, c0, w](TensorNode& self) {
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < w; ++c) g[r * cols + c0 + c] += self.grad[r * w + c];
      }
    }
  });
  auto& y = out.value();
  const auto& xv = x.value();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < w; ++c) y[r * w + c] = xv[r * cols + c0 + c];
  }
  return out;
}

Tensor concat_cols(const std::vector<Tensor>& xs) {
  require(!xs.empty(), "concat_cols: empty list");
  const std::size_t rows = xs[0].rows();
  std::size_t total = 0;
  for (const auto& t : xs) {
    require(t.shape().size() == 2 && t.rows() == rows, "concat_cols: row mismatch");
    total += t.cols();
  }
  std::vector<std::size_t> widths;
  for (const auto& t : xs) widths.push_back(t.cols());
  Tensor out = make_op({rows, total}, xs, [rows, total, widths](TensorNode& self) {
    std::size_t base = 0;
    for (std::size_t p = 0; p < widths.size(); ++p) {
      if (double* g = grad_ptr(self, p)) {
        for (std::size_t r = 0; r < rows; ++r) {
          for (std::size_t c = 0; c < widths[p]; ++c) {
            g[r * widths[p] + c] += self.grad[r * total + base + c];
          }
        }
      }
      base += widths[p];
    }
  });
  auto& y = out.value();
  std::size_t base = 0;
  for (const auto& t : xs) {
    const auto& v = t.value();
    const std::size_t w = t.cols();
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < w; ++c) y[r * total + base + c] = v[r * w + c];
    }
    base += w;
  }
  return out;
}

Tensor slice_rows(const Tensor& x, std::size_t r0, std::size_t r1) {
  require(x.shape().size() == 2, "slice_rows: rank-2 input required");
  require(r0 < r1 && r1 <= x.rows(), "slice_rows: bad range");
  const std::size_t cols = x.cols(), h = r1 - r0;
  Tensor out = make_op({h, cols}, {x}, [r0, h, cols](TensorNode& self) {
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < cols; ++c) g[(r0 + r) * cols + c] += self.grad[r * cols + c];
      }
    }
  });
  auto& y = out.value();
  const auto& xv = x.value();
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < cols; ++c) y[r * cols + c] = xv[(r0 + r) * cols + c];
  }
  return out;
}

Tensor gather_rows(const Tensor& x, const std::vector<std::size_t>& idx) {
  require(x.shape().size() == 2, "gather_rows: rank-2 input required");
  require(!idx.empty(), "gather_rows: empty index list");
  const std::size_t cols = x.cols();
  for (const std::size_t i : idx) require(i < x.rows(), "gather_rows: index out of range");
  Tensor out = make_op({idx.size(), cols}, {x}, [idx, cols](TensorNode& self) {
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t r = 0; r < idx.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) g[idx[r] * cols + c] += self.grad[r * cols + c];
      }
    }
  });
  auto& y = out.value();
  const auto& xv = x.value();
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) y[r * cols + c] = xv[idx[r] * cols + c];
  }
  return out;
}

Tensor row(const Tensor& x, std::size_t r) {
  require(x.shape().size() == 2 && r < x.rows(), "row: bad index");
  const std::size_t cols = x.cols();
  Tensor out = make_op({cols}, {x}, [r, cols](TensorNode& self) {
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t c = 0; c < cols; ++c) g[r * cols + c] += self.grad[c];
    }
  });
  auto& y = out.value();
  const auto& xv = x.value();
  for (std::size_t c = 0; c < cols; ++c) y[c] = xv[r * cols + c];
  return out;
}

Tensor matmul(const Tensor& a, const Tensor& b) {
  require(a.shape().size() == 2 && b.shape().size() == 2, "matmul: rank-2 inputs required");
  require(a.cols() == b.rows(), "matmul: inner dimension mismatch");
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  Tensor out = make_op({m, n}, {a, b}, [m, k, n](TensorNode& self) {
    const auto& av = pval(self, 0);
    const auto& bv = pval(self, 1);
    if (double* ga = grad_ptr(self, 0)) {
      // dA[i,j] = dot(dY.row(i), B.row(j))
      for (std::size_t i = 0; i < m; ++i) {
        const double* gy = self.grad.data() + i * n;
        for (std::size_t j = 0; j < k; ++j) {
          const double* br = bv.data() + j * n;
          double acc = 0.0;
          for (std::size_t c = 0; c < n; ++c) acc += gy[c] * br[c];
          ga[i * k + j] += acc;
        }
      }
    }
    if (double* gb = grad_ptr(self, 1)) {
      // dB.row(j) += A[i,j] * dY.row(i)
      for (std::size_t i = 0; i < m; ++i) {
        const double* ar = av.data() + i * k;
        const double* gy = self.grad.data() + i * n;
        for (std::size_t j = 0; j < k; ++j) {
          const double aij = ar[j];
          if (aij == 0.0) continue;
          double* gbr = gb + j * n;
          for (std::size_t c = 0; c < n; ++c) gbr[c] += aij * gy[c];
        }
      }
    }
  });
  auto& y = out.value();
  const auto& av = a.value();
  const auto& bv = b.value();
  for (std::size_t i = 0; i < m; ++i) {
    double* yr = y.data() + i * n;
    const double* ar = av.data() + i * k;
    for (std::size_t j = 0; j < k; ++j) {
      const double aij = ar[j];
      if (aij == 0.0) continue;
      const double* br = bv.data() + j * n;
      for (std::size_t c = 0; c < n; ++c) yr[c] += aij * br[c];
    }
  }
  return out;
}

Tensor matmul_nt(const Tensor& a, const Tensor& b) {
  require(a.shape().size() == 2 && b.shape().size() == 2, "matmul_nt: rank-2 inputs required");
  require(a.cols() == b.cols(), "matmul_nt: inner dimension mismatch");
  const std::size_t m = a.rows(), k = a.cols(), n = b.rows();
  Tensor out = make_op({m, n}, {a, b}, [m, k, n](TensorNode& self) {
    const auto& av = pval(self, 0);
    const auto& bv = pval(self, 1);
    if (double* ga = grad_ptr(self, 0)) {
      // dA.row(i) += dY[i,j] * B.row(j)
      for (std::size_t i = 0; i < m; ++i) {
        const double* gy = self.grad.data() + i * n;
        double* gar = ga + i * k;
        for (std::size_t j = 0; j < n; ++j) {
          const double g = gy[j];
          if (g == 0.0) continue;
          const double* br = bv.data() + j * k;
          for (std::size_t c = 0; c < k; ++c) gar[c] += g * br[c];
        }
      }
    }
    if (double* gb = grad_ptr(self, 1)) {
      // dB.row(j) += dY[i,j] * A.row(i)
      for (std::size_t i = 0; i < m; ++i) {
        const double* gy = self.grad.data() + i * n;
        const double* ar = av.data() + i * k;
        for (std::size_t j = 0; j < n; ++j) {
          const double g = gy[j];
          if (g == 0.0) continue;
          double* gbr = gb + j * k;
          for (std::size_t c = 0; c < k; ++c) gbr[c] += g * ar[c];
        }
      }
    }
  });
  auto& y = out.value();
  const auto& av = a.value();
  const auto& bv = b.value();
  for (std::size_t i = 0; i < m; ++i) {
    const double* ar = av.data() + i * k;
    double* yr = y.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const double* br = bv.data() + j * k;
      double acc = 0.0;
      for (std::size_t c = 0; c < k; ++c) acc += ar[c] * br[c];
      yr[j] = acc;
    }
  }
  return out;
}

namespace {
double std_normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}
double std_normal_cdf(double x) { return 0.5 * (1.0 + std::erf(x / std::numbers::sqrt2)); }
}  // namespace

Tensor gelu(const Tensor& x) {
  Tensor out = make_op(x.shape(), {x}, [](TensorNode& self) {
    const auto& xv = pval(self, 0);
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t i = 0; i < self.grad.size(); ++i) {
        g[i] += self.grad[i] * (std_normal_cdf(xv[i]) + xv[i] * std_normal_pdf(xv[i]));
      }
    }
  });
  auto& y = out.value();
  const auto& xv = x.value();
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = xv[i] * std_normal_cdf(xv[i]);
  return out;
}

Tensor swish(const Tensor& x) {
  Tensor out = make_op(x.shape(), {x}, [](TensorNode& self) {
    const auto& xv = pval(self, 0);
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t i = 0; i < self.grad.size(); ++i) {
        const double s = 1.0 / (1.0 + std::exp(-xv[i]));
        g[i] += self.grad[i] * s * (1.0 + xv[i] * (1.0 - s));
      }
    }
  });
  auto& y = out.value();
  const auto& xv = x.value();
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = xv[i] / (1.0 + std::exp(-xv[i]));
  return out;
}

Tensor sigmoid(const Tensor& x) {
  Tensor out = make_op(x.shape(), {x}, [](TensorNode& self) {
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t i = 0; i < self.grad.size(); ++i) {
        const double s = self.value[i];
        g[i] += self.grad[i] * s * (1.0 - s);
      }
    }
  });
  auto& y = out.value();
  const auto& xv = x.value();
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = 1.0 / (1.0 + std::exp(-xv[i]));
  return out;
}

Tensor softmax_rows(const Tensor& x) {
  require(x.shape().size() == 2, "softmax_rows: rank-2 input required");
  const std::size_t rows = x.rows(), cols = x.cols();
  Tensor out = make_op(x.shape(), {x}, [rows, cols](TensorNode& self) {
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t r = 0; r < rows; ++r) {
        const double* y = self.value.data() + r * cols;
        const double* gy = self.grad.data() + r * cols;
        double dot = 0.0;
        for (std::size_t c = 0; c < cols; ++c) dot += gy[c] * y[c];
        double* gx = g + r * cols;
        for (std::size_t c = 0; c < cols; ++c) gx[c] += y[c] * (gy[c] - dot);
      }
    }
  });
  auto& y = out.value();
  const auto& xv = x.value();
  for (std::size_t r = 0; r < rows; ++r) {
    const double* xr = xv.data() + r * cols;
    double* yr = y.data() + r * cols;
    double mx = xr[0];
    for (std::size_t c = 1; c < cols; ++c) mx = std::max(mx, xr[c]);
    double sum = 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      yr[c] = std::exp(xr[c] - mx);
      sum += yr[c];
    }
    const double inv = 1.0 / sum;
    for (std::size_t c = 0; c < cols; ++c) yr[c] *= inv;
  }
  return out;
}

Tensor layer_norm(const Tensor& x, const Tensor& gain, const Tensor& bias, double eps) {
  require(x.shape().size() == 2, "layer_norm: rank-2 input required");
  const std::size_t rows = x.rows(), cols = x.cols();
  require(gain.shape().size() == 1 && gain.shape()[0] == cols, "layer_norm: gain width mismatch");
  require(bias.shape().size() == 1 && bias.shape()[0] == cols, "layer_norm: bias width mismatch");
  Tensor out = make_op(x.shape(), {x, gain, bias}, [rows, cols, eps](TensorNode& self) {
    const auto& xv = pval(self, 0);
    const auto& gv = pval(self, 1);
    double* gx = grad_ptr(self, 0);
    double* gg = grad_ptr(self, 1);
    double* gb = grad_ptr(self, 2);
    const double invd = 1.0 / static_cast<double>(cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const double* xr = xv.data() + r * cols;
      const double* gy = self.grad.data() + r * cols;
      double mu = 0.0;
      for (std::size_t c = 0; c < cols; ++c) mu += xr[c];
      mu *= invd;
      double var = 0.0;
      for (std::size_t c = 0; c < cols; ++c) var += (xr[c] - mu) * (xr[c] - mu);
      var *= invd;
      const double istd = 1.0 / std::sqrt(var + eps);
      if (gg || gb) {
        for (std::size_t c = 0; c < cols; ++c) {
          const double xhat = (xr[c] - mu) * istd;
          if (gg) gg[c] += gy[c] * xhat;
          if (gb) gb[c] += gy[c];
        }
      }
      if (gx) {
        // dL/dxhat = gy * gain; standard layer-norm backward.
        double sum_dxhat = 0.0, sum_dxhat_xhat = 0.0;
        for (std::size_t c = 0; c < cols; ++c) {
          const double xhat = (xr[c] - mu) * istd;
          const double dxhat = gy[c] * gv[c];
          sum_dxhat += dxhat;
          sum_dxhat_xhat += dxhat * xhat;
        }
        double* gxr = gx + r * cols;
        for (std::size_t c = 0; c < cols; ++c) {
          const double xhat = (xr[c] - mu) * istd;
          const double dxhat = gy[c] * gv[c];
          gxr[c] += istd * (dxhat - invd * sum_dxhat - xhat * invd * sum_dxhat_xhat);
        }
      }
    }
  });
  auto& y = out.value();
  const auto& xv = x.value();
  const auto& gv = gain.value();
  const auto& bv = bias.value();
  const double invd = 1.0 / static_cast<double>(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const double* xr = xv.data() + r * cols;
    double* yr = y.data() + r * cols;
    double mu = 0.0;
    for (std::size_t c = 0; c < cols; ++c) mu += xr[c];
    mu *= invd;
    double var = 0.0;
    for (std::size_t c = 0; c < cols; ++c) var += (xr[c] - mu) * (xr[c] - mu);
    var *= invd;
    const double istd = 1.0 / std::sqrt(var + eps);
    for (std::size_t c = 0; c < cols; ++c) yr[c] = gv[c] * (xr[c] - mu) * istd + bv[c];
  }
  return out;
}

Tensor conv1d(const Tensor& x, const Tensor& weight, const Tensor& bias, std::size_t kernel,
              std::size_t stride, std::size_t padding) {
  require(x.shape().size() == 2, "conv1d: rank-2 input required");
  require(stride >= 1, "conv1d: stride must be >= 1");
  const std::size_t t_in = x.rows(), d_in = x.cols();
  require(weight.shape().size() == 2 && weight.rows() == kernel * d_in,
          "conv1d: weight shape mismatch with kernel and input dim");
  const std::size_t d_out = weight.cols();
  require(bias.shape().size() == 1 && bias.shape()[0] == d_out, "conv1d: bias width mismatch");
  require(t_in + 2 * padding >= kernel, "conv1d: input shorter than kernel");
  const std::size_t t_out = (t_in + 2 * padding - kernel) / stride + 1;

  Tensor out = make_op({t_out, d_out}, {x, weight, bias},
                       [t_in, d_in, d_out, t_out, kernel, stride, padding](TensorNode& self) {
    const auto& xv = pval(self, 0);
    const auto& wv = pval(self, 1);
    double* gx = grad_ptr(self, 0);
    double* gw = grad_ptr(self, 1);
    double* gb = grad_ptr(self, 2);
    for (std::size_t t = 0; t < t_out; ++t) {
      const double* gy = self.grad.data() + t * d_out;
      if (gb) {
        for (std::size_t o = 0; o < d_out; ++o) gb[o] += gy[o];
      }
      for (std::size_t k = 0; k < kernel; ++k) {
        const std::int64_t src = static_cast<std::int64_t>(t * stride + k) -
                                 static_cast<std::int64_t>(padding);
        if (src < 0 || src >= static_cast<std::int64_t>(t_in)) continue;
        const double* xr = xv.data() + static_cast<std::size_t>(src) * d_in;
        for (std::size_t i = 0; i < d_in; ++i) {
          const double* wrow = wv.data() + (k * d_in + i) * d_out;
          if (gw) {
            double* gwr = gw + (k * d_in + i) * d_out;
            const double xi = xr[i];
            for (std::size_t o = 0; o < d_out; ++o) gwr[o] += xi * gy[o];
          }
          if (gx) {
            double acc = 0.0;
            for (std::size_t o = 0; o < d_out; ++o) acc += wrow[o] * gy[o];
            gx[static_cast<std::size_t>(src) * d_in + i] += acc;
          }
        }
      }
    }
  });
  auto& y = out.value();
  const auto& xv = x.value();
  const auto& wv = weight.value();
  const auto& bv = bias.value();
  for (std::size_t t = 0; t < t_out; ++t) {
    double* yr = y.data() + t * d_out;
    for (std::size_t o = 0; o < d_out; ++o) yr[o] = bv[o];
    for (std::size_t k = 0; k < kernel; ++k) {
      const std::int64_t src = static_cast<std::int64_t>(t * stride + k) -
                               static_cast<std::int64_t>(padding);
      if (src < 0 || src >= static_cast<std::int64_t>(t_in)) continue;
      const double* xr = xv.data() + static_cast<std::size_t>(src) * d_in;
      for (std::size_t i = 0; i < d_in; ++i) {
        const double xi = xr[i];
        if (xi == 0.0) continue;
        const double* wrow = wv.data() + (k * d_in + i) * d_out;
        for (std::size_t o = 0; o < d_out; ++o) yr[o] += xi * wrow[o];
      }
    }
  }
  return out;
}

Tensor depthwise_conv1d(const Tensor& x, const Tensor& weight, const Tensor& bias,
                        std::size_t kernel) {
  require(x.shape().size() == 2, "depthwise_conv1d: rank-2 input required");
  require(kernel % 2 == 1, "depthwise_conv1d: odd kernel required for same padding");
  const std::size_t t_len = x.rows(), d = x.cols();
  require(weight.shape().size() == 2 && weight.rows() == kernel && weight.cols() == d,
          "depthwise_conv1d: weight shape mismatch");
  require(bias.shape().size() == 1 && bias.shape()[0] == d, "depthwise_conv1d: bias mismatch");
  const std::size_t pad = kernel / 2;

  Tensor out = make_op(x.shape(), {x, weight, bias}, [t_len, d, kernel, pad](TensorNode& self) {
    const auto& xv = pval(self, 0);
    const auto& wv = pval(self, 1);
    double* gx = grad_ptr(self, 0);
    double* gw = grad_ptr(self, 1);
    double* gb = grad_ptr(self, 2);
    for (std::size_t t = 0; t < t_len; ++t) {
      const double* gy = self.grad.data() + t * d;
      if (gb) {
        for (std::size_t c = 0; c < d; ++c) gb[c] += gy[c];
      }
      for (std::size_t k = 0; k < kernel; ++k) {
        const std::int64_t src = static_cast<std::int64_t>(t + k) - static_cast<std::int64_t>(pad);
        if (src < 0 || src >= static_cast<std::int64_t>(t_len)) continue;
        const double* xr = xv.data() + static_cast<std::size_t>(src) * d;
        const double* wr = wv.data() + k * d;
        if (gw) {
          double* gwr = gw + k * d;
          for (std::size_t c = 0; c < d; ++c) gwr[c] += xr[c] * gy[c];
        }
        if (gx) {
          double* gxr = gx + static_cast<std::size_t>(src) * d;
          for (std::size_t c = 0; c < d; ++c) gxr[c] += wr[c] * gy[c];
        }
      }
    }
  });
  auto& y = out.value();
  const auto& xv = x.value();
  const auto& wv = weight.value();
  const auto& bv = bias.value();
  for (std::size_t t = 0; t < t_len; ++t) {
    double* yr = y.data() + t * d;
    for (std::size_t c = 0; c < d; ++c) yr[c] = bv[c];
    for (std::size_t k = 0; k < kernel; ++k) {
      const std::int64_t src = static_cast<std::int64_t>(t + k) - static_cast<std::int64_t>(pad);
      if (src < 0 || src >= static_cast<std::int64_t>(t_len)) continue;
      const double* xr = xv.data() + static_cast<std::size_t>(src) * d;
      const double* wr = wv.data() + k * d;
      for (std::size_t c = 0; c < d; ++c) yr[c] += xr[c] * wr[c];
    }
  }
  return out;
}

Tensor replace_masked_rows(const Tensor& x, const std::vector<std::uint8_t>& mask,
                           const Tensor& embedding) {
  require(x.shape().size() == 2, "replace_masked_rows: rank-2 input required");
  require(mask.size() == x.rows(), "replace_masked_rows: mask length mismatch");
  require(embedding.shape().size() == 1 && embedding.shape()[0] == x.cols(),
          "replace_masked_rows: embedding width mismatch");
  const std::size_t rows = x.rows(), cols = x.cols();
  Tensor out = make_op(x.shape(), {x, embedding}, [mask, rows, cols](TensorNode& self) {
    double* gx = grad_ptr(self, 0);
    double* ge = grad_ptr(self, 1);
    for (std::size_t r = 0; r < rows; ++r) {
      const double* gy = self.grad.data() + r * cols;
      if (mask[r]) {
        if (ge) {
          for (std::size_t c = 0; c < cols; ++c) ge[c] += gy[c];
        }
      } else if (gx) {
        double* gxr = gx + r * cols;
        for (std::size_t c = 0; c < cols; ++c) gxr[c] += gy[c];
      }
    }
  });
  auto& y = out.value();
  const auto& xv = x.value();
  const auto& ev = embedding.value();
  for (std::size_t r = 0; r < rows; ++r) {
    double* yr = y.data() + r * cols;
    if (mask[r]) {
      for (std::size_t c = 0; c < cols; ++c) yr[c] = ev[c];
    } else {
      const double* xr = xv.data() + r * cols;
      for (std::size_t c = 0; c < cols; ++c) yr[c] = xr[c];
    }
  }
  return out;
}

Tensor mean_all(const Tensor& x) {
  const std::size_t n = x.numel();
  Tensor out = make_op({1}, {x}, [n](TensorNode& self) {
    if (double* g = grad_ptr(self, 0)) {
      const double k = self.grad[0] / static_cast<double>(n);
      for (std::size_t i = 0; i < n; ++i) g[i] += k;
    }
  });
  double acc = 0.0;
  for (const double v : x.value()) acc += v;
  out.value()[0] = acc / static_cast<double>(n);
  return out;
}

Tensor sum_all(const Tensor& x) {
  const std::size_t n = x.numel();
  Tensor out = make_op({1}, {x}, [n](TensorNode& self) {
    if (double* g = grad_ptr(self, 0)) {
      for (std::size_t i = 0; i < n; ++i) g[i] += self.grad[0];
    }
  });
  double acc = 0.0;
  for (const double v : x.value()) acc += v;
  out.value()[0] = acc;
  return out;
}

namespace {

/// Shared cosine backward for one row pair.
/// c = <a,b>/(|a||b|); dc/da = b/(|a||b|) - c a/|a|^2.
void cosine_row_backward(const double* a, const double* b, double c, double na, double nb,
                         double gy, double* ga, double* gb, std::size_t d) {
  const double inv_ab = 1.0 / (na * nb);
  const double inv_aa = 1.0 / (na * na);
  const double inv_bb = 1.0 / (nb * nb);
  for (std::size_t i = 0; i < d; ++i) {
    if (ga) ga[i] += gy * (b[i] * inv_ab - c * a[i] * inv_aa);
    if (gb) gb[i] += gy * (a[i] * inv_ab - c * b[i] * inv_bb);
  }
}

constexpr double kCosineFloor = 1e-12;  // norm floor against division blow-up

}  // namespace

Tensor rowwise_cosine(const Tensor& a, const Tensor& b) {
  require(a.shape().size() == 2 && a.shape() == b.shape(), "rowwise_cosine: shape mismatch");
  const std::size_t rows = a.rows(), d = a.cols();
  Tensor out = make_op({rows}, {a, b}, [rows, d](TensorNode& self) {
    const auto& av = pval(self, 0);
    const auto& bv = pval(self, 1);
    double* ga = grad_ptr(self, 0);
    double* gb = grad_ptr(self, 1);
    for (std::size_t r = 0; r < rows; ++r) {
      const double* ar = av.data() + r * d;
      const double* br = bv.data() + r * d;
      double naa = 0.0, nbb = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        naa += ar[i] * ar[i];
        nbb += br[i] * br[i];
      }
      const double na = std::max(std::sqrt(naa), kCosineFloor);
      const double nb = std::max(std::sqrt(nbb), kCosineFloor);
      cosine_row_backward(ar, br, self.value[r], na, nb, self.grad[r],
                          ga ? ga + r * d : nullptr, gb ? gb + r * d : nullptr, d);
    }
  });
  auto& y = out.value();
  const auto& av = a.value();
  const auto& bv = b.value();
  for (std::size_t r = 0; r < rows; ++r) {
    const double* ar = av.data() + r * d;
    const double* br = bv.data() + r * d;
    double dot = 0.0, naa = 0.0, nbb = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      dot += ar[i] * br[i];
      naa += ar[i] * ar[i];
      nbb += br[i] * br[i];
    }
    const double na = std::max(std::sqrt(naa), kCosineFloor);
    const double nb = std::max(std::sqrt(nbb), kCosineFloor);
    y[r] = dot / (na * nb);
  }
  return out;
}

Tensor cosine(const Tensor& a, const Tensor& b) {
  require(a.shape().size() == 1 && a.shape() == b.shape(), "cosine: two equal-length vectors");
  const std::size_t d = a.shape()[0];
  Tensor out = make_op({1}, {a, b}, [d](TensorNode& self) {
    const auto& av = pval(self, 0);
    const auto& bv = pval(self, 1);
    double naa = 0.0, nbb = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      naa += av[i] * av[i];
      nbb += bv[i] * bv[i];
    }
    const double na = std::max(std::sqrt(naa), kCosineFloor);
    const double nb = std::max(std::sqrt(nbb), kCosineFloor);
    cosine_row_backward(av.data(), bv.data(), self.value[0], na, nb, self.grad[0],
                        grad_ptr(self, 0), grad_ptr(self, 1), d);
  });
  const auto& av = a.value();
  const auto& bv = b.value();
  double dot = 0.0, naa = 0.0, nbb = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    dot += av[i] * bv[i];
    naa += av[i] * av[i];
    nbb += bv[i] * bv[i];
  }
  const double na = std::max(std::sqrt(naa), kCosineFloor);
  const double nb = std::max(std::sqrt(nbb), kCosineFloor);
  out.value()[0] = dot / (na * nb);
  return out;
}

Tensor stack_scalars(const std::vector<Tensor>& xs) {
  require(!xs.empty(), "stack_scalars: empty list");
  for (const auto& t : xs) require(t.numel() == 1, "stack_scalars: inputs must be scalars");
  Tensor out = make_op({xs.size()}, xs, [](TensorNode& self) {
    for (std::size_t i = 0; i < self.parents.size(); ++i) {
      if (double* g = grad_ptr(self, i)) g[0] += self.grad[i];
    }
  });
  auto& y = out.value();
  for (std::size_t i = 0; i < xs.size(); ++i) y[i] = xs[i].value()[0];
  return out;
}

Tensor logsumexp(const Tensor& x) {
  require(x.shape().size() == 1, "logsumexp: vector input required");
  const std::size_t n = x.numel();
  Tensor out = make_op({1}, {x}, [n](TensorNode& self) {
    const auto& xv = pval(self, 0);
    if (double* g = grad_ptr(self, 0)) {
      const double lse = self.value[0];
      for (std::size_t i = 0; i < n; ++i) g[i] += self.grad[0] * std::exp(xv[i] - lse);
    }
  });
  const auto& xv = x.value();
  double mx = xv[0];
  for (const double v : xv) mx = std::max(mx, v);
  double acc = 0.0;
  for (const double v : xv) acc += std::exp(v - mx);
  out.value()[0] = mx + std::log(acc);
  return out;
}

Tensor pick(const Tensor& x, std::size_t i) {
  require(x.shape().size() == 1 && i < x.numel(), "pick: bad index");
  Tensor out = make_op({1}, {x}, [i](TensorNode& self) {
    if (double* g = grad_ptr(self, 0)) g[i] += self.grad[0];
  });
  out.value()[0] = x.value()[i];
  return out;
}

Tensor pearson(const Tensor& a, const Tensor& b) {
  require(a.shape().size() == 1 && a.shape() == b.shape(), "pearson: two equal-length vectors");
  const std::size_t n = a.numel();
  require(n >= 2, "pearson: need at least 2 samples");

  const auto stats = [n](const std::vector<double>& v) {
    double mean = 0.0;
    for (const double x : v) mean += x;
    mean /= static_cast<double>(n);
    return mean;
  };
  const double ma = stats(a.value());
  const double mb = stats(b.value());
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a.value()[i] - ma;
    const double db = b.value()[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa <= 0.0 || sbb <= 0.0) {
    throw std::domain_error("pearson: zero variance input (degenerate)");
  }

  Tensor out = make_op({1}, {a, b}, [n, ma, mb, sab, saa, sbb](TensorNode& self) {
    const auto& av = pval(self, 0);
    const auto& bv = pval(self, 1);
    double* ga = grad_ptr(self, 0);
    double* gb = grad_ptr(self, 1);
    const double denom = std::sqrt(saa * sbb);
    const double gy = self.grad[0];
    for (std::size_t i = 0; i < n; ++i) {
      const double da = av[i] - ma;
      const double db = bv[i] - mb;
      if (ga) ga[i] += gy * (db - (sab / saa) * da) / denom;
      if (gb) gb[i] += gy * (da - (sab / sbb) * db) / denom;
    }
  });
  out.value()[0] = sab / std::sqrt(saa * sbb);
  return out;
}

Tensor bce_with_logit(const Tensor& logit, int label) {
  require(logit.numel() == 1, "bce_with_logit: scalar logit required");
  require(label == 0 || label == 1, "bce_with_logit: label must be 0 or 1");
  Tensor out = make_op({1}, {logit}, [label](TensorNode& self) {
    const double z = pval(self, 0)[0];
    if (double* g = grad_ptr(self, 0)) {
      const double s = 1.0 / (1.0 + std::exp(-z));
      g[0] += self.grad[0] * (s - static_cast<double>(label));
    }
  });
  const double z = logit.value()[0];
  // max(z,0) - z*y + log(1 + exp(-|z|))
  out.value()[0] = std::max(z, 0.0) - z * static_cast<double>(label) +
                   std::log1p(std::exp(-std::abs(z)));
  return out;
}

}  // namespace eegdec::nn::ops
