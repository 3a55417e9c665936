#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "m2mkd/error.hpp"

namespace m2mkd {

using Shape = std::vector<std::size_t>;

std::size_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

struct TensorImpl {
  Shape shape;
  std::vector<double> value;
  std::vector<double> grad;  // empty until backward touches it
  bool requires_grad = false;
  std::int64_t producer = -1;  // index of the tape node that produced this value
  std::uint64_t epoch = 0;     // tape epoch at production time
};

// Dense f64 tensor, row-major. Cheap to copy (shared storage); `clone`
// for an independent copy. When an operation consumes a tensor with
// requires_grad set, the active tape records a node for backward.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, double v, bool requires_grad = false);
  static Tensor scalar(double v, bool requires_grad = false);
  static Tensor from_vector(Shape shape, std::vector<double> data, bool requires_grad = false);

  bool defined() const { return impl_ != nullptr; }
  const Shape& shape() const { return impl_->shape; }
  std::size_t ndim() const { return impl_->shape.size(); }
  std::size_t numel() const { return impl_->value.size(); }

  const std::vector<double>& value() const { return impl_->value; }
  std::vector<double>& value() { return impl_->value; }
  double item() const;  // scalar only

  bool requires_grad() const { return impl_->requires_grad; }
  void set_requires_grad(bool b) { impl_->requires_grad = b; }

  bool has_grad() const { return !impl_->grad.empty(); }
  const std::vector<double>& grad() const { return impl_->grad; }
  void zero_grad() { impl_->grad.clear(); }

  // independent copy of the values; detached from any graph
  Tensor clone() const;
  // same values, requires_grad off, no graph link
  Tensor detach() const;

  const std::shared_ptr<TensorImpl>& impl() const { return impl_; }

 private:
  explicit Tensor(std::shared_ptr<TensorImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<TensorImpl> impl_;
  friend class Graph;
  friend Tensor make_op_output(const char* kind, Shape shape, std::vector<double> values,
                               const std::vector<Tensor>& inputs, std::function<void()> backward_stub);
};

// Reverse-mode tape. One per thread; independent graphs on different
// threads share no mutable state.
class Graph {
 public:
  static Graph& current();

  bool recording() const { return no_grad_depth_ == 0; }

  void record(const char* kind, std::vector<std::shared_ptr<TensorImpl>> inputs,
              std::shared_ptr<TensorImpl> output, std::function<void()> backward);

  // Seeds d(loss)/d(loss)=1 and propagates to every reachable tensor with
  // requires_grad. Leaf grads accumulate across calls; intermediate grads
  // are rebuilt per call. Throws NonScalarLoss / GraphConsumed.
  void backward(const Tensor& loss);

  // Drop all recorded nodes; stale handles raise GraphConsumed on backward.
  void clear();

  std::size_t node_count() const { return nodes_.size(); }
  std::uint64_t epoch() const { return epoch_; }

 private:
  struct OpNode {
    const char* kind;
    std::vector<std::shared_ptr<TensorImpl>> inputs;
    std::shared_ptr<TensorImpl> output;
    std::function<void()> backward;
  };
  std::vector<OpNode> nodes_;
  std::uint64_t epoch_ = 1;
  int no_grad_depth_ = 0;
  friend struct NoGradGuard;
};

struct NoGradGuard {
  NoGradGuard() { ++Graph::current().no_grad_depth_; }
  ~NoGradGuard() { --Graph::current().no_grad_depth_; }
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;
};

// ---- primitives -----------------------------------------------------------
// All reduce/normalize kinds act on the last axis. Shapes are validated and
// outputs are checked finite (NonFiniteValue) on every call.

// [..., m, k] x [k, n], or batched [batch..., m, k] x [batch..., k, n]
Tensor matmul(const Tensor& a, const Tensor& b);
// elementwise with numpy-style broadcasting (trailing-dim alignment)
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double c);
// exact erf form: 0.5 x (1 + erf(x / sqrt(2)))
Tensor gelu(const Tensor& x);
// last axis, learned scale/shift; gamma/beta are 1-D of that width
Tensor layernorm(const Tensor& x, const Tensor& gamma, const Tensor& beta);
Tensor softmax(const Tensor& x);
Tensor log_softmax(const Tensor& x);
Tensor mean_all(const Tensor& x);                    // -> scalar
Tensor mean_axis(const Tensor& x, std::size_t axis); // axis removed
Tensor sum_axis(const Tensor& x, std::size_t axis);
Tensor reshape(const Tensor& x, Shape shape);
Tensor permute(const Tensor& x, const std::vector<std::size_t>& axes);
// select one index of the last axis, keeping it as size 1
Tensor slice_last(const Tensor& x, std::size_t index);
// softmax over the k largest entries of the last axis; the rest are exactly
// zero and receive no gradient. Ties at the k-th score keep the lower index.
Tensor topk_softmax(const Tensor& x, std::size_t k);
// -mean_b log_probs[b, labels[b]] over rows of a [batch, C] tensor
Tensor nll_loss(const Tensor& log_probs, const std::vector<int>& labels);

// Dispatcher over the named primitive kinds (grad-check harness surface).
enum class PrimitiveKind { MatMul, Add, Mul, Gelu, LayerNorm, Softmax, LogSoftmax, Mean, Reshape };
Tensor eval_primitive(PrimitiveKind kind, const std::vector<Tensor>& inputs, const Shape& reshape_to = {});

}  // namespace m2mkd
