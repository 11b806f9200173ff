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

#ifndef LATENTMIX_OPTIMIZER_HPP_
#define LATENTMIX_OPTIMIZER_HPP_

#include <map>
#include <string>

#include "latentmix/parameters.hpp"

namespace latentmix::ad {

struct RmsPropConfig {
  double learning_rate = 5e-4;
  double alpha = 0.99;
  double epsilon = 1e-5;
  // Global L2 norm threshold; <= 0 disables clipping.
  double grad_clip = 10.0;
};

// RMSProp with global-norm gradient clipping:
//   acc   <- alpha * acc + (1 - alpha) * g^2
//   param <- param - lr * g / sqrt(acc + eps)
class RmsProp {
 public:
  explicit RmsProp(RmsPropConfig config = {}) : config_(config) {}

  // Applies one update to every trainable entry and clears their gradients.
  // Returns the global gradient norm measured before clipping. Throws if a
  // trainable parameter has no gradient.
  double Step(ParameterSet& params);

  const RmsPropConfig& config() const { return config_; }
  const std::map<std::string, Matrix>& accumulators() const { return acc_; }
  std::map<std::string, Matrix>& mutable_accumulators() { return acc_; }

 private:
  RmsPropConfig config_;
  std::map<std::string, Matrix> acc_;
};

// L2 norm over the gradients of all trainable entries.
double GlobalGradNorm(const ParameterSet& params);

}  // namespace latentmix::ad

#endif  // LATENTMIX_OPTIMIZER_HPP_
