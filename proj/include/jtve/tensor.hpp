// Dense 64-bit tensors with tape-based reverse-mode differentiation.
//
// A Tensor is a shape plus shared immutable storage. Operations are free
// functions; when an operand is attached to a Graph the result is recorded so
// that Graph::backward can accumulate gradients for every registered leaf.
// Operations on detached tensors evaluate eagerly with no recording, which
// keeps the differentiated path and plain evaluation on the same code.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "jtve/errors.hpp"

namespace jtve {

using Shape = std::vector<std::size_t>;

std::size_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

class Graph;

class Tensor {
 public:
  Tensor() : data_(std::make_shared<std::vector<double>>()) {}
  Tensor(Shape shape, std::vector<double> values);

  static Tensor zeros(Shape shape);
  static Tensor full(Shape shape, double value);
  static Tensor scalar(double value);

  const Shape& shape() const { return shape_; }
  std::size_t size() const { return data_->size(); }
  std::size_t rank() const { return shape_.size(); }
  // 2-D accessors; rank-1 counts as a single row.
  std::size_t rows() const;
  std::size_t cols() const;

  const double* data() const { return data_->data(); }
  const std::vector<double>& vec() const { return *data_; }
  // Clones the storage first if it is shared.
  double* mutable_data();

  double operator()(std::size_t i) const { return (*data_)[i]; }
  double operator()(std::size_t r, std::size_t c) const {
    return (*data_)[r * cols() + c];
  }
  // Scalar extraction; requires numel == 1.
  double value() const;

  bool finite() const;

  Graph* graph() const { return graph_; }
  int node() const { return node_; }
  bool on_graph() const { return graph_ != nullptr; }
  // The same values with no graph attachment.
  Tensor detached() const;

 private:
  friend class Graph;
  Shape shape_;
  std::shared_ptr<std::vector<double>> data_;
  Graph* graph_ = nullptr;
  int node_ = -1;
};

// Gradient map produced by Graph::backward, keyed by leaf tensors.
class Gradients {
 public:
  const Tensor& wrt(const Tensor& leaf) const;

 private:
  friend class Graph;
  const Graph* owner_ = nullptr;
  std::unordered_map<int, Tensor> by_node_;
};

class Graph {
 public:
  Graph() = default;
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  // Registers a parameter: returns a tensor with the same values that
  // participates in differentiation.
  Tensor leaf(const Tensor& value);

  // Reverse accumulation from a scalar root. Consumes the graph: a second
  // call is a contract error. Leaves not reachable from the root get zeros.
  Gradients backward(const Tensor& root);

  std::size_t node_count() const { return nodes_.size(); }

 private:
  friend Tensor detail_emit(Graph* g, int op, int a, int b, Shape shape,
                            std::shared_ptr<std::vector<double>> value,
                            double p0, double p1, int axis);
  friend class Gradients;

  struct Node {
    int op;
    int a = -1;
    int b = -1;
    Shape shape;
    std::shared_ptr<std::vector<double>> value;
    double p0 = 0.0;
    double p1 = 0.0;
    int axis = -1;
  };

  int push(Node n);

  std::vector<Node> nodes_;
  std::vector<int> leaves_;
  bool consumed_ = false;
};

// ---- differentiable operations ----

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor div(const Tensor& a, const Tensor& b);

Tensor neg(const Tensor& a);
Tensor exp(const Tensor& a);
Tensor log(const Tensor& a);  // strictly positive input
Tensor square(const Tensor& a);
Tensor tanh(const Tensor& a);
Tensor leaky_relu(const Tensor& a);  // fixed slope 0.2
Tensor softplus(const Tensor& a);
Tensor clamp(const Tensor& a, double lo, double hi);

Tensor matmul(const Tensor& a, const Tensor& b);     // [m×k]·[k×n]
Tensor matmul_nt(const Tensor& a, const Tensor& b);  // [m×k]·[n×k]ᵀ
Tensor matmul_tn(const Tensor& a, const Tensor& b);  // [k×m]ᵀ·[k×n]

Tensor sum(const Tensor& a);             // full reduction to a scalar
Tensor mean(const Tensor& a);
Tensor sum(const Tensor& a, int axis);   // rank-2, axis 0 or 1
Tensor mean(const Tensor& a, int axis);

Tensor concat_cols(const Tensor& a, const Tensor& b);  // [m×p],[m×q] → [m×(p+q)]

inline constexpr double kLeakySlope = 0.2;

// ---- enum-dispatch front end over the same operations ----

enum class EwOp { add, sub, mul, div, neg, exp, log, square, tanh, leaky_relu, softplus };
enum class ReduceOp { sum, mean };

Tensor elementwise(EwOp op, const Tensor& a);
Tensor elementwise(EwOp op, const Tensor& a, const Tensor& b);
Tensor reduce(ReduceOp op, const Tensor& a);
Tensor reduce(ReduceOp op, const Tensor& a, int axis);

// ---- gradient checking ----

// Builds a scalar loss from the given parameter tensors. gradcheck passes
// graph leaves for the analytic pass and plain tensors for the perturbed
// finite-difference passes, so both run through identical code.
using LossFn = std::function<Tensor(const std::vector<Tensor>&)>;

// Max over parameter coordinates of
//   |analytic - central difference| / max(1e-8, |analytic| + |numeric|).
double gradcheck(const GraphFn& f, const std::vector<Tensor>& params, double step);

}  // namespace jtve
