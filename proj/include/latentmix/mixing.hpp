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

// Joint action-value assembly from per-agent utilities.

#ifndef LATENTMIX_MIXING_HPP_
#define LATENTMIX_MIXING_HPP_

#include <cstdint>
#include <memory>
#include <string>

#include "latentmix/layers.hpp"
#include "latentmix/parameters.hpp"

namespace latentmix::mixing {

using ad::Matrix;
using ad::Value;

// What conditions the mixing hypernetworks.
enum class StateSource { kTrueState, kObsConcat, kHiddenConcat, kSideLatent, kNone };

const char* StateSourceName(StateSource s);
StateSource ParseStateSource(const std::string& name);

struct StateDims {
  int n_agents = 1;
  int obs_dim = 1;
  int state_dim = 1;
  int hidden_dim = 64;
  int latent_dim = 64;
};

// Width of the conditioning vector: state_dim, n*obs_dim, n*hidden_dim,
// n*latent_dim, or 0 for kNone.
int StateWidth(StateSource source, const StateDims& dims);

class Mixer {
 public:
  virtual ~Mixer() = default;
  // q: M x n chosen utilities; state: M x state_width. Returns M x 1.
  virtual Value Mix(const Value& q, const Value& state) const = 0;
  virtual int n_agents() const = 0;
  virtual int state_width() const = 0;
  virtual ad::ParameterSet& parameters() = 0;
  virtual const ad::ParameterSet& parameters() const = 0;
};

// Q_tot = sum_a Q_a. Ignores the state.
class VdnMixer : public Mixer {
 public:
  explicit VdnMixer(int n_agents) : n_agents_(n_agents) {}
  Value Mix(const Value& q, const Value& state) const override;
  int n_agents() const override { return n_agents_; }
  int state_width() const override { return 0; }
  ad::ParameterSet& parameters() override { return params_; }
  const ad::ParameterSet& parameters() const override { return params_; }

 private:
  int n_agents_;
  ad::ParameterSet params_;
};

// Monotonic mixing network with state-conditioned hypernetworks:
//   W1 = |hyper_w1(s)|  (n x embed), b1 = hyper_b1(s)
//   W2 = |hyper_w2(s)|  (embed x 1), b2 = hyper_b2_out(relu(hyper_b2(s)))
//   Q_tot = elu(q W1 + b1) W2 + b2
class QmixMixer : public Mixer {
 public:
  QmixMixer(int n_agents, int state_width, int embed_dim, Rng& init_rng);
  QmixMixer(const QmixMixer&) = delete;
  QmixMixer& operator=(const QmixMixer&) = delete;

  Value Mix(const Value& q, const Value& state) const override;
  int n_agents() const override { return n_agents_; }
  int state_width() const override { return state_width_; }
  int embed_dim() const { return embed_dim_; }
  ad::ParameterSet& parameters() override { return params_; }
  const ad::ParameterSet& parameters() const override { return params_; }

 private:
  int n_agents_;
  int state_width_;
  int embed_dim_;
  ad::ParameterSet params_;
  ad::Linear hyper_w1_;
  ad::Linear hyper_b1_;
  ad::Linear hyper_w2_;
  ad::Linear hyper_b2_hidden_;
  ad::Linear hyper_b2_out_;
};

std::unique_ptr<Mixer> MakeMixer(StateSource source, int n_agents, int state_width,
                                 int embed_dim, Rng& init_rng);

// Individual-Global-Max consistency on one instance: the joint action that
// maximises Q_tot (ties -> lexicographically lowest, agent 0 most
// significant) equals the tuple of per-agent argmaxes (ties -> lowest).
// `q_per_action` is n x n_actions, `state` is 1 x state_width. Throws if the
// joint action space exceeds `budget`.
bool IgmCheck(const Mixer& mixer, const Matrix& q_per_action, const Matrix& state,
              std::int64_t budget = 1 << 20);

}  // namespace latentmix::mixing

#endif  // LATENTMIX_MIXING_HPP_
