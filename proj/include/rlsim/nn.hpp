// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rlsim/env.hpp"

namespace rlsim {

/// Width of each categorical head, in action-tuple order.
inline constexpr std::array<int, kActionDims> kHeadOffsets{0, 5, 10, 15, 20, 23, 25, 27};
inline constexpr int kLogitCount = 29;
inline constexpr double kProbFloor = 1e-10;

struct NetShape {
  int inputs = kObservationSize;
  int shared = 512;
  int stream = 256;
  bool operator==(const NetShape&) const = default;
};

template <class T>
struct Dense {
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> W;
  Eigen::Matrix<T, Eigen::Dynamic, 1> b;
};

/// Activations of one batched forward pass; samples are columns.
template <class T>
struct ForwardCache {
  using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
  Mat x;
  Mat h_shared;
  Mat h_policy;
  Mat h_value;
  Mat logits;     // kLogitCount x B
  Mat log_probs;  // per-head log-softmax of logits
  Eigen::Matrix<T, 1, Eigen::Dynamic> value;
};

/// Shared trunk, then a policy stream ending in 8 categorical heads and a value stream
/// ending in a scalar. Every hidden layer is ReLU.
template <class T>
class PolicyValueNet {
 public:
  using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

  PolicyValueNet() : PolicyValueNet(NetShape{}) {}
  explicit PolicyValueNet(const NetShape& shape);

  /// Variance-scaling init: uniform with variance gain^2 / fan_in, zero biases.
  void initialize(std::uint64_t seed);
  void set_zero();

  ForwardCache<T> forward(const Mat& obs) const;

  /// Writes dLoss/dparams into `grad` given dLoss/dlogits and dLoss/dvalue.
  void backward(const ForwardCache<T>& cache, const Mat& d_logits,
                const Eigen::Matrix<T, 1, Eigen::Dynamic>& d_value, PolicyValueNet& grad) const;

  struct Tensor {
    std::string name;
    T* data;
    int rows;
    int cols;
    std::size_t size() const { return static_cast<std::size_t>(rows) * cols; }
  };
  /// Parameter tensors in a fixed order (the checkpoint order).
  std::vector<Tensor> tensors();
  std::size_t parameter_count() const;

  const NetShape& shape() const { return shape_; }

  template <class U>
  PolicyValueNet<U> cast() const;

  Dense<T> shared;
  Dense<T> policy;
  Dense<T> value_hidden;
  Dense<T> heads;
  Dense<T> value_out;

 private:
  NetShape shape_;
};

template <class T>
template <class U>
PolicyValueNet<U> PolicyValueNet<T>::cast() const {
  PolicyValueNet<U> out(shape_);
  auto copy = [](const Dense<T>& a, Dense<U>& b) {
    b.W = a.W.template cast<U>();
    b.b = a.b.template cast<U>();
  };
  copy(shared, out.shared);
  copy(policy, out.policy);
  copy(value_hidden, out.value_hidden);
  copy(heads, out.heads);
  copy(value_out, out.value_out);
  return out;
}

/// Observations as a column batch.
template <class T>
Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> observation_batch(
    const std::vector<Observation>& obs);

/// Sum of per-head log-probabilities of `a` in column `col`, each floored at log(1e-10).
template <class T>
T joint_logprob(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& log_probs, int col,
                const ActionTuple& a);

/// Mean of the 8 head entropies in column `col`.
template <class T>
T entropy_bonus(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& log_probs, int col);

/// Argmax per head.
template <class T>
ActionTuple greedy_action(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& log_probs,
                          int col);

/// Inverse-CDF sample per head; `u` supplies one uniform [0,1) draw per head.
template <class T>
ActionTuple sample_action(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& log_probs,
                          int col, const std::function<double()>& u);

}  // namespace rlsim
