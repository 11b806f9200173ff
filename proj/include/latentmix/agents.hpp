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

// Parameter-shared recurrent agent network (DRQN), epsilon-greedy action
// selection and target-network bookkeeping.

#ifndef LATENTMIX_AGENTS_HPP_
#define LATENTMIX_AGENTS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "latentmix/layers.hpp"
#include "latentmix/parameters.hpp"

namespace latentmix::agents {

using ad::Matrix;
using ad::Value;

struct AgentNetworkConfig {
  int obs_dim = 1;
  int n_actions = 1;
  int n_agents = 1;
  int hidden_dim = 64;
};

// Input row for agent a: [observation | one-hot last action | one-hot id].
// Forward: x = relu(embed(input)); h' = gru(x, h); q = head(h').
class AgentNetwork {
 public:
  AgentNetwork(const AgentNetworkConfig& config, Rng& init_rng);
  AgentNetwork(const AgentNetwork&) = delete;
  AgentNetwork& operator=(const AgentNetwork&) = delete;

  struct Output {
    Value q;  // rows x n_actions
    Value h;  // rows x hidden_dim
  };

  // Batched step over stacked agent rows.
  Output Forward(const Value& inputs, const Value& h_prev) const;
  // Runs `inputs.size()` consecutive steps from h0. Each inputs[t] holds the
  // same number of rows as h0. Returns q and h for every step stacked by
  // time: rows [t*R, (t+1)*R) belong to step t. Matches chaining Forward.
  Output Unroll(std::span<const Matrix> inputs, const Value& h0) const;
  // Single-agent step.
  Output Forward(std::span<const double> obs, std::span<const double> last_action,
                 std::span<const double> agent_id,
                 std::span<const double> h_prev) const;

  // Stacks the input rows of one timestep for `rows` agent slots; slot r is
  // agent r % n_agents. `last_actions[r] < 0` encodes "no previous action".
  Matrix BuildInputs(const Matrix& obs, std::span<const int> last_actions) const;

  int input_dim() const;
  const AgentNetworkConfig& config() const { return config_; }
  ad::ParameterSet& parameters() { return params_; }
  const ad::ParameterSet& parameters() const { return params_; }

 private:
  AgentNetworkConfig config_;
  ad::ParameterSet params_;
  ad::Linear embed_;
  ad::GruCell gru_;
  ad::Linear head_;
};

enum class HiddenSource { kOnline, kTarget };

// Hidden outputs h^t of all agents at one or more timesteps, stacked by row.
struct AgentHiddenSet {
  Matrix h;
  HiddenSource source = HiddenSource::kOnline;
};

// Linear anneal from `start` to `finish` over `anneal_steps` environment
// timesteps, constant afterwards.
class EpsilonSchedule {
 public:
  EpsilonSchedule(double start = 1.0, double finish = 0.05,
                  std::int64_t anneal_steps = 50000);
  double At(std::int64_t t) const;

 private:
  double start_;
  double finish_;
  std::int64_t anneal_steps_;
};

// Epsilon-greedy over available actions. Draws one uniform to decide between
// exploring and exploiting, then (when exploring) one more to pick among the
// available actions. Greedy ties go to the lowest index.
int SelectAction(std::span<const double> q, std::span<const std::uint8_t> avail,
                 double epsilon, Rng& rng);

// Greedy argmax restricted to available actions.
int GreedyAction(std::span<const double> q, std::span<const std::uint8_t> avail);

// Hard copy of every online parameter into the target set.
void SyncTarget(const ad::ParameterSet& online, ad::ParameterSet& target);

// Counts processed episodes and reports when a target sync is due: once every
// `interval` episodes since the previous sync.
class TargetSyncSchedule {
 public:
  explicit TargetSyncSchedule(std::int64_t interval = 200) : interval_(interval) {}
  // True (and records the sync) when `interval` episodes have passed since
  // the previous sync.
  bool Due(std::int64_t episodes_processed);
  std::int64_t syncs() const { return syncs_; }

 private:
  std::int64_t interval_;
  std::int64_t last_ = 0;
  std::int64_t syncs_ = 0;
};

}  // namespace latentmix::agents

#endif  // LATENTMIX_AGENTS_HPP_
