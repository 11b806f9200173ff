// Copyright 2026 The latentmix Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reverse-mode automatic differentiation over dense row-major matrices of
// doubles. Every tensor in the library is two-dimensional: vectors are 1 x d
// rows, batches stack samples along the row axis.

#ifndef LATENTMIX_AUTODIFF_HPP_
#define LATENTMIX_AUTODIFF_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "latentmix/common.hpp"

namespace latentmix::ad {

using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

std::string ShapeString(const Matrix& m);

namespace internal {

struct Node {
  Matrix data;
  Matrix grad;
  bool has_grad = false;
  bool requires_grad = false;
  // Set on a root once backward has run through it.
  bool consumed = false;
  std::vector<std::shared_ptr<Node>> parents;
  // Pushes this node's grad into its parents.
  std::function<void(Node&)> backward;
  const char* op = "leaf";
  // Marks nodes already ordered by the running backward pass.
  std::uint64_t visit_epoch = 0;

  void Accumulate(const Matrix& g);
  void Accumulate(Matrix&& g);
  // Adds g into the block of grad starting at (row, col); grad is
  // zero-initialised to the shape of data on first use.
  void AccumulateBlock(Index row, Index col, const Matrix& g);
};

}  // namespace internal

// Handle to a node of the computation graph. Copies share the node.
class Value {
 public:
  Value() = default;

  static Value Constant(Matrix data);
  static Value Parameter(Matrix data);
  static Value Scalar(double v);

  bool defined() const { return node_ != nullptr; }
  const Matrix& data() const { return node_->data; }
  Matrix& mutable_data() { return node_->data; }
  Index rows() const { return node_->data.rows(); }
  Index cols() const { return node_->data.cols(); }
  // Value of a 1 x 1 tensor.
  double item() const;

  bool requires_grad() const { return node_->requires_grad; }
  void set_requires_grad(bool on) { node_->requires_grad = on; }

  bool has_grad() const { return node_->has_grad; }
  const Matrix& grad() const;
  void ZeroGrad();

  // Propagates d(this)/d(ancestor) into every ancestor that requires grad.
  // Only legal on a scalar, and only once per graph.
  void Backward();

  internal::Node* node() const { return node_.get(); }
  const std::shared_ptr<internal::Node>& shared_node() const { return node_; }

 private:
  explicit Value(std::shared_ptr<internal::Node> node) : node_(std::move(node)) {}
  friend Value MakeResult(Matrix, std::vector<Value>, const char*,
                          std::function<void(internal::Node&)>);

  std::shared_ptr<internal::Node> node_;
};

// Builds an op result. The backward closure runs only if some parent requires
// grad and grad recording is enabled.
Value MakeResult(Matrix data, std::vector<Value> parents, const char* op,
                 std::function<void(internal::Node&)> backward);

// While alive, ops record no provenance on this thread.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

bool GradEnabled();

// ---------------------------------------------------------------------------
// Primitives. Binary elementwise ops broadcast any axis of extent 1.

Value MatMul(const Value& a, const Value& b);
Value Add(const Value& a, const Value& b);
Value Sub(const Value& a, const Value& b);
Value Mul(const Value& a, const Value& b);
Value Scale(const Value& a, double k);
Value AddScalar(const Value& a, double k);
Value Neg(const Value& a);

Value Relu(const Value& a);
Value Elu(const Value& a);
Value Sigmoid(const Value& a);
Value Tanh(const Value& a);
Value Exp(const Value& a);
Value Log(const Value& a);
Value Abs(const Value& a);
Value Square(const Value& a);
// Gradient passes where lo <= x <= hi.
Value Clamp(const Value& a, double lo, double hi);

Value SoftmaxRows(const Value& a);
Value LogSoftmaxRows(const Value& a);

Value ConcatCols(std::span<const Value> parts);
Value ConcatRows(std::span<const Value> parts);
Value SliceCols(const Value& a, Index begin, Index count);
Value SliceRows(const Value& a, Index begin, Index count);
// Row-major reinterpretation.
Value Reshape(const Value& a, Index rows, Index cols);

// Reductions accumulate left to right, row by row.
Value Sum(const Value& a);
Value Mean(const Value& a);
Value SumPerRow(const Value& a);  // r x c -> r x 1
Value SumPerCol(const Value& a);  // r x c -> 1 x c
Value MeanPerRow(const Value& a);

// out[i] = a[i, index[i]]
Value SelectPerRow(const Value& a, std::span<const int> index);

// Rows whose keep flag is zero become exactly zero, whatever they held.
Value MaskRows(const Value& a, std::span<const std::uint8_t> keep);

// x holds `blocks.size()` stacked groups of n rows; group g is left-multiplied
// by the constant n x n matrix blocks[g].
Value BlockMatMul(std::shared_ptr<const std::vector<Matrix>> blocks,
                  const Value& x);

Value Detach(const Value& a);

inline Value operator+(const Value& a, const Value& b) { return Add(a, b); }
inline Value operator-(const Value& a, const Value& b) { return Sub(a, b); }
inline Value operator*(const Value& a, const Value& b) { return Mul(a, b); }

}  // namespace latentmix::ad

#endif  // LATENTMIX_AUTODIFF_HPP_
