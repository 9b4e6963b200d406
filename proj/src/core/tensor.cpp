#include "core/tensor.hpp"

#include <algorithm>

namespace zrnet::ad {

int64_t numel_of(const std::vector<int64_t>& shape) {
  int64_t n = 1;
  for (int64_t d : shape) {
    require(d > 0, ErrorKind::shape, "tensor dimensions must be positive");
    n *= d;
  }
  return n;
}

void TensorImpl::accumulate_grad(const double* g, int64_t n) {
  if (!has_grad) {
    grad.assign(data.size(), 0.0);
    has_grad = true;
  }
  for (int64_t i = 0; i < n; ++i) grad[i] += g[i];
}

void TensorImpl::seed_grad() {
  grad.assign(data.size(), 0.0);
  grad[0] = 1.0;
  has_grad = true;
}

Tensor Tensor::from_data(std::vector<int64_t> shape, std::vector<double> data) {
  require(numel_of(shape) == static_cast<int64_t>(data.size()), ErrorKind::shape,
          "data length does not match shape");
  auto impl = std::make_shared<TensorImpl>();
  impl->shape = std::move(shape);
  impl->data = std::move(data);
  return Tensor(std::move(impl));
}

Tensor Tensor::zeros(std::vector<int64_t> shape) {
  const int64_t n = numel_of(shape);
  return from_data(std::move(shape), std::vector<double>(n, 0.0));
}

Tensor Tensor::scalar(double v) { return from_data({1}, {v}); }

std::vector<double> Tensor::grad() const {
  if (!p_->has_grad) return std::vector<double>(p_->data.size(), 0.0);
  return p_->grad;
}

Tensor Tape::leaf(std::vector<int64_t> shape, std::vector<double> data,
                  bool requires_grad) {
  require(numel_of(shape) == static_cast<int64_t>(data.size()), ErrorKind::shape,
          "leaf data length does not match shape");
  auto impl = std::make_shared<TensorImpl>();
  impl->shape = std::move(shape);
  impl->data = std::move(data);
  impl->requires_grad = requires_grad;
  impl->needs_grad = requires_grad;
  impl->tape = this;
  return Tensor(std::move(impl));
}

void Tape::backward(const Tensor& loss) {
  require(loss.defined() && loss.numel() == 1, ErrorKind::contract,
          "backward requires a scalar loss");
  require(loss.impl()->tape == this, ErrorKind::contract,
          "loss does not belong to this tape");
  require(!consumed_, ErrorKind::state, "backward already ran on this tape");
  consumed_ = true;
  loss.impl()->seed_grad();
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) {
    bool any = false;
    for (const auto& out : it->outputs) {
      if (out->has_grad) { any = true; break; }
    }
    if (!any) continue;
    // Closures read every output grad; materialize zeros for the missing ones.
    for (const auto& out : it->outputs) {
      if (!out->has_grad) {
        out->grad.assign(out->data.size(), 0.0);
        out->has_grad = true;
      }
    }
    it->backward();
  }
}

}  // namespace zrnet::ad
