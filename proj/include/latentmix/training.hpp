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

// Replay, joint loss assembly, optimisation and the outer training loop.

#ifndef LATENTMIX_TRAINING_HPP_
#define LATENTMIX_TRAINING_HPP_

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "latentmix/agents.hpp"
#include "latentmix/checkpoint.hpp"
#include "latentmix/config.hpp"
#include "latentmix/envs.hpp"
#include "latentmix/inference.hpp"
#include "latentmix/mixing.hpp"
#include "latentmix/optimizer.hpp"

namespace latentmix::training {

using ad::Matrix;
using ad::Value;

// Values written into padded (unfilled) batch slots.
struct PadValues {
  double obs = 0.0;
  double reward = 0.0;
  double state = 0.0;
  int action = envs::kNoOpAction;
  std::uint8_t terminated = 0;
  std::uint8_t alive = 1;
};

// B episodes padded to the longest length T. Per-state entries run over
// t = 0..T, per-transition entries over t = 0..T-1. Agent rows are b * n + a;
// flattened time-major rows are t * B + b.
struct EpisodeBatch {
  int batch = 0;
  int max_len = 0;
  envs::EnvSpec spec;
  std::vector<int> lengths;
  std::vector<Matrix> obs;                         // T+1 x [(B n) x obs_dim]
  std::vector<Matrix> states;                      // T+1 x [B x state_dim]
  std::vector<std::vector<std::uint8_t>> avail;    // T+1 x [(B n) * n_actions]
  std::vector<std::vector<std::uint8_t>> alive;    // T+1 x [B n]
  std::vector<std::vector<int>> actions;           // T x [B n]
  std::vector<double> rewards;                     // T B
  std::vector<std::uint8_t> terminated;            // T B
  std::vector<std::uint8_t> filled;                // T B

  static EpisodeBatch FromEpisodes(std::span<const envs::Episode* const> episodes,
                                   const envs::EnvSpec& spec, const PadValues& pad = {});
  int FilledCount() const;
};

// Whole-episode ring buffer with FIFO eviction.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(int capacity);

  void Insert(envs::Episode episode);
  int size() const { return static_cast<int>(episodes_.size()); }
  int capacity() const { return capacity_; }
  std::int64_t inserted() const { return inserted_; }
  // Oldest first.
  const envs::Episode& At(int index) const;
  // Global insertion index of At(index).
  std::int64_t InsertionIndex(int index) const { return inserted_ - size() + index; }
  // Uniform without replacement; throws if count exceeds size().
  std::vector<const envs::Episode*> Sample(int count, Rng& rng) const;

 private:
  int capacity_;
  std::int64_t inserted_ = 0;
  std::deque<envs::Episode> episodes_;
};

struct LossReport {
  double td = 0.0;
  double kl_prior = 0.0;
  double recon_prior = 0.0;
  double kl = 0.0;
  double recon = 0.0;
  double total = 0.0;
  double grad_norm = 0.0;
  // Realised surrogate of each ELBO term. The uniform action prior
  // contributes a constant and is reported as 0.
  double elbo_reward = 0.0;
  double elbo_recon = 0.0;
  double elbo_kl = 0.0;
  double elbo_action_prior = 0.0;

  bool Finite() const;
  std::string ToString() const;
};

// Intermediate arrays of one loss evaluation, for diagnostics and oracles.
struct LossIntermediates {
  Matrix q_tot;      // (T B) x 1
  Matrix y;          // (T B) x 1
  Matrix state;      // (T+1) B x state width, what the mixers were given
  // Latent inference (present when the learner runs SIDE).
  Matrix hidden;     // (T+1) B n x hidden, target agent outputs
  Matrix q_mu;       // (T B) x n N
  Matrix q_logvar;   // (T B) x n N
  Matrix h_recon;    // (T B n) x hidden
  std::vector<std::uint8_t> node_mask;  // T B n
  Matrix s_prev;     // (T B) x n N
  std::vector<int> u_prev;              // T B n
  Matrix p_mu;
  Matrix p_logvar;
  Matrix p_state_recon;
  std::vector<Matrix> p_action_logits;  // n x [(T B) x n_actions]
};

// The loss's stop-gradient inputs: the TD targets and the previous latent fed
// to the prior. Supplying them pins those values, which makes the total a
// plain function of the trainable parameters for finite-difference checks.
struct FrozenInputs {
  Matrix y;
  Matrix s_prev;
};

struct LossGraph {
  LossReport report;
  Value total;
  LossIntermediates intermediates;
};

class Learner {
 public:
  Learner(const TrainConfig& config, const envs::EnvSpec& spec);
  Learner(const Learner&) = delete;
  Learner& operator=(const Learner&) = delete;

  // Builds the joint loss. The total is differentiable unless a NoGradGuard
  // is active. Throws on an empty batch.
  LossGraph ComputeLosses(const EpisodeBatch& batch, std::uint64_t noise_seed,
                          bool training = true, const FrozenInputs* frozen = nullptr) const;
  // One optimizer step on the joint loss. Throws NumericError carrying the
  // report when any term is non-finite; parameters are left untouched then.
  LossReport TrainStep(const EpisodeBatch& batch, std::uint64_t noise_seed);
  void SyncTargets();

  // Latent state (node means) of every state of `episode`, (T+1) x n N.
  Matrix InferLatents(const envs::Episode& episode) const;

  void Save(const std::string& path, const ad::ArrayMap& extra = {}) const;
  // Restores parameters and optimizer state; returns the remaining arrays.
  ad::ArrayMap Load(const std::string& path);

  const TrainConfig& config() const { return config_; }
  const envs::EnvSpec& spec() const { return spec_; }
  mixing::StateSource state_source() const { return source_; }
  int state_width() const { return state_width_; }
  const agents::AgentNetwork& agent() const { return *agent_; }
  const agents::AgentNetwork& target_agent() const { return *target_agent_; }
  const mixing::Mixer& mixer() const { return *mixer_; }
  const mixing::Mixer& target_mixer() const { return *target_mixer_; }
  const inference::GalaVgae* vgae() const { return vgae_.get(); }
  const inference::PriorModel* prior() const { return prior_.get(); }
  // Everything the optimizer updates.
  ad::ParameterSet& trainable() { return trainable_; }
  const ad::ParameterSet& trainable() const { return trainable_; }
  ad::ParameterSet& target_parameters() { return target_; }
  const ad::RmsProp& optimizer() const { return optimizer_; }

 private:
  TrainConfig config_;
  envs::EnvSpec spec_;
  mixing::StateSource source_;
  int state_width_ = 0;
  std::unique_ptr<agents::AgentNetwork> agent_, target_agent_;
  std::unique_ptr<mixing::Mixer> mixer_, target_mixer_;
  std::unique_ptr<inference::GalaVgae> vgae_;
  std::unique_ptr<inference::PriorModel> prior_;
  ad::ParameterSet trainable_;
  ad::ParameterSet target_;
  ad::RmsProp optimizer_;
};

// Mean over rows whose mask is set of a column vector. Masked rows are zeroed
// before summation, so their content never reaches the result.
Value MaskedMean(const Value& column, std::span<const std::uint8_t> mask);

// Plays one episode. `epsilon_at(t)` gives the exploration rate at global
// timestep `t_start + t`; pass nullptr for greedy play.
envs::Episode RunEpisode(envs::Environment& env, const agents::AgentNetwork& agent,
                         std::uint64_t env_seed, const agents::EpsilonSchedule* schedule,
                         std::int64_t t_start, Rng& rng);

struct EvalStats {
  double mean = 0.0;
  double median = 0.0;
  double p25 = 0.0;
  double p75 = 0.0;
  std::vector<double> returns;
};

// Linear-interpolation quantile of unsorted values.
double Quantile(std::vector<double> values, double q);
EvalStats Summarize(std::vector<double> returns);

// Greedy returns over `episodes` environment seeds DeriveSeed(seed_base, k).
EvalStats Evaluate(envs::Environment& env, const agents::AgentNetwork& agent, int episodes,
                   std::uint64_t seed_base);

// Seed streams derived from the run seed.
namespace streams {
inline constexpr std::uint64_t kInit = 1;
inline constexpr std::uint64_t kExplore = 2;
inline constexpr std::uint64_t kSample = 3;
inline constexpr std::uint64_t kNoise = 4;
inline constexpr std::uint64_t kTrainEnv = 5;
inline constexpr std::uint64_t kEvalEnv = 6;
}  // namespace streams

std::unique_ptr<envs::Environment> MakeEnvironment(const TrainConfig& config);

struct EvalPoint {
  std::int64_t timestep = 0;
  std::int64_t episode = 0;
  EvalStats stats;
};

struct TrainSummary {
  std::int64_t timesteps = 0;
  std::int64_t episodes = 0;
  std::int64_t gradient_steps = 0;
  std::vector<EvalPoint> evals;  // last entry is the final evaluation
  std::string metrics_path;
  std::string checkpoint_path;
};

struct TrainOptions {
  bool write_artifacts = true;
  std::function<void(std::int64_t step, const LossReport&)> on_step;
};

// Runs the full loop and, when enabled, writes config.txt, manifest.txt,
// metrics.csv and checkpoints under config.out_dir.
TrainSummary Train(const TrainConfig& config, const TrainOptions& options = {});

extern const char* const kMetricsHeader;

}  // namespace latentmix::training

#endif  // LATENTMIX_TRAINING_HPP_
