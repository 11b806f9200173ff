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

// Latent state inference: a graph variational auto-encoder over the agent
// graph plus a learned sequential prior over the latent.

#ifndef LATENTMIX_INFERENCE_HPP_
#define LATENTMIX_INFERENCE_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "latentmix/agents.hpp"
#include "latentmix/layers.hpp"
#include "latentmix/parameters.hpp"

namespace latentmix::inference {

using ad::Matrix;
using ad::Value;

// A_ij = 1 iff agent i and agent j are both alive.
Matrix BuildAdjacency(std::span<const std::uint8_t> alive);

// D^-1/2 (A + I) D^-1/2, D the degree matrix of A + I.
Matrix SmoothingOperator(const Matrix& adjacency);
// 2I - SmoothingOperator(A).
Matrix SharpeningOperator(const Matrix& adjacency);

enum class Activation { kIdentity, kRelu, kElu };
Value Activate(const Value& x, Activation act);

// act(P X W) for a single graph; P the smoothing or sharpening operator.
Value GcnSmooth(const Value& x, const Matrix& adjacency, const Value& w, Activation act);
Value GalaSharpen(const Value& x, const Matrix& adjacency, const Value& w, Activation act);

// Propagation operators for M graphs of n nodes each, stacked by row
// (row m * n + a is node a of graph m).
struct GraphBatch {
  int n_nodes = 0;
  int n_graphs = 0;
  std::shared_ptr<const std::vector<Matrix>> smooth;
  std::shared_ptr<const std::vector<Matrix>> sharpen;
  std::vector<std::uint8_t> alive;  // M * n
};

GraphBatch MakeGraphBatch(std::span<const std::uint8_t> alive, int n_nodes);

struct VgaeConfig {
  int input_dim = 64;   // agent hidden width
  int embed_dim = 128;
  int latent_dim = 64;  // N, per node
  double logvar_bound = 10.0;
};

struct LatentOutput {
  Value mu;          // (M n) x N
  Value logvar;      // (M n) x N, clamped
  Value state;       // M x (n N): node means, node-major
  Value logvar_flat; // M x (n N)
  Value z;           // decoder input: a sample in training, mu otherwise
  Value recon;       // (M n) x input_dim
};

// Encoder:  H = elu(S X W0);  mu = S H Wmu;  logvar = clamp(S H Wlv)
// Decoder:  R = elu(K Z D0) D1 propagated by K, K = sharpening operator.
// Dead-node rows of X are zeroed before propagation. No biases, so the
// parameter count does not depend on the number of nodes.
class GalaVgae {
 public:
  GalaVgae(const VgaeConfig& config, Rng& init_rng);
  GalaVgae(const GalaVgae&) = delete;
  GalaVgae& operator=(const GalaVgae&) = delete;

  // `noise` is used only when `training` is set. Rejects online hiddens.
  LatentOutput Infer(const agents::AgentHiddenSet& hidden, const GraphBatch& graphs,
                     bool training, Rng* noise) const;

  const VgaeConfig& config() const { return config_; }
  ad::ParameterSet& parameters() { return params_; }
  const ad::ParameterSet& parameters() const { return params_; }

 private:
  VgaeConfig config_;
  ad::ParameterSet params_;
  Value w_enc_, w_mu_, w_logvar_, w_dec0_, w_dec1_;
};

struct PriorConfig {
  int n_agents = 1;
  int n_actions = 2;
  int latent_dim = 64;  // per agent
  int embed_dim = 128;
  int action_embed_dim = 16;
  int head_hidden_dim = 64;
  double logvar_bound = 10.0;
};

struct PriorOutput {
  Value mu;                  // M x (n N)
  Value logvar;              // M x (n N), clamped
  Value z;
  Value state_recon;         // M x (n N)
  std::vector<Value> action_logits;  // n entries, each M x n_actions
};

// p(s^t | s^{t-1}, u^{t-1}) as a VAE:
//   e   = relu([s_prev, E u_prev] We + be),  E a shared action embedding
//   mu, logvar = linear heads of e
//   d   = relu(z Wd + bd);  state_recon = d Ws + bs
//   logits_a = head_a(d), one MLP per agent
class PriorModel {
 public:
  PriorModel(const PriorConfig& config, Rng& init_rng);
  PriorModel(const PriorModel&) = delete;
  PriorModel& operator=(const PriorModel&) = delete;

  // s_prev: M x (n N), treated as a constant. u_prev: M * n action indices,
  // row m * n + a.
  PriorOutput Forward(const Value& s_prev, std::span<const int> u_prev, bool training,
                      Rng* noise) const;

  const PriorConfig& config() const { return config_; }
  ad::ParameterSet& parameters() { return params_; }
  const ad::ParameterSet& parameters() const { return params_; }

 private:
  PriorConfig config_;
  ad::ParameterSet params_;
  Value action_table_;
  ad::Linear encoder_, mu_head_, logvar_head_, trunk_, state_head_;
  std::vector<ad::Linear> action_hidden_, action_out_;
};

// mu + exp(logvar / 2) * eps with eps ~ N(0, I) drawn from `rng`.
Value Reparameterize(const Value& mu, const Value& logvar, Rng& rng);

// Per-row KL(N(mu_q, var_q) || N(mu_p, var_p)) summed over columns, M x 1.
Value KlDiagGaussian(const Value& mu_q, const Value& logvar_q, const Value& mu_p,
                     const Value& logvar_p);
// Per-row KL(N(mu, var) || N(0, I)), M x 1.
Value KlStandardNormal(const Value& mu, const Value& logvar);
// Batch mean of KlDiagGaussian.
Value KlDiagGaussianMean(const Value& mu_q, const Value& logvar_q, const Value& mu_p,
                         const Value& logvar_p);

// Per-row mean squared error, M x 1. `target` is not differentiated.
Value MsePerRow(const Value& prediction, const Matrix& target);
// Per-row negative log-likelihood of `labels` under softmax(logits), M x 1.
Value CrossEntropyPerRow(const Value& logits, std::span<const int> labels);

}  // namespace latentmix::inference

#endif  // LATENTMIX_INFERENCE_HPP_
