#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "core/common.hpp"

namespace zrnet::ad {

class Tape;

struct TensorImpl {
  std::vector<int64_t> shape;
  std::vector<double> data;
  std::vector<double> grad;  // sized on first accumulation
  bool requires_grad = false;
  bool has_grad = false;
  bool needs_grad = false;  // leaf with requires_grad, or produced from one
  Tape* tape = nullptr;

  int64_t numel() const { return static_cast<int64_t>(data.size()); }
  void accumulate_grad(const double* g, int64_t n);
  void seed_grad();
};

using TensorImplPtr = std::shared_ptr<TensorImpl>;

class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(TensorImplPtr p) : p_(std::move(p)) {}

  // Untracked constant value (no tape, never receives gradients).
  static Tensor from_data(std::vector<int64_t> shape, std::vector<double> data);
  static Tensor zeros(std::vector<int64_t> shape);
  static Tensor scalar(double v);

  bool defined() const { return p_ != nullptr; }
  const std::vector<int64_t>& shape() const { return p_->shape; }
  int64_t numel() const { return p_->numel(); }
  const std::vector<double>& data() const { return p_->data; }
  std::vector<double>& mutable_data() { return p_->data; }

  double value() const {
    require(p_ && p_->numel() == 1, ErrorKind::contract,
            "value() requires a scalar tensor");
    return p_->data[0];
  }
  double at(int64_t i) const { return p_->data[i]; }

  // Zeros when the tensor never received a gradient (disconnected leaf).
  std::vector<double> grad() const;
  bool has_grad() const { return p_->has_grad; }
  bool requires_grad() const { return p_->requires_grad; }

  TensorImpl* impl() const { return p_.get(); }
  TensorImplPtr ptr() const { return p_; }

 private:
  TensorImplPtr p_;
};

// One recorded primitive. Backward closures read output grads and
// accumulate into input grads; they are invoked in reverse record order.
struct Node {
  std::vector<TensorImplPtr> inputs;
  std::vector<TensorImplPtr> outputs;
  std::function<void()> backward;
};

class Tape {
 public:
  Tensor leaf(std::vector<int64_t> shape, std::vector<double> data,
              bool requires_grad = true);

  void record(Node node) { nodes_.push_back(std::move(node)); }

  // Reverse sweep from a scalar loss. A tape runs backward exactly once.
  void backward(const Tensor& loss);

  size_t size() const { return nodes_.size(); }
  bool consumed() const { return consumed_; }

 private:
  std::vector<Node> nodes_;
  bool consumed_ = false;
};

int64_t numel_of(const std::vector<int64_t>& shape);

}  // namespace zrnet::ad
