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

// Dec-POMDP environments: a shared scalar reward, per-agent local
// observations, and a hidden global state that is exposed only through the
// `true_state` debug channel.

#ifndef LATENTMIX_ENVS_HPP_
#define LATENTMIX_ENVS_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "latentmix/common.hpp"

namespace latentmix::envs {

// Both built-in environments use action 0 as the do-nothing action.
inline constexpr int kNoOpAction = 0;

struct EnvSpec {
  int n_agents = 1;
  int n_actions = 1;
  int obs_dim = 1;
  int state_dim = 1;
  int episode_limit = 1;

  void Validate() const;
  bool operator==(const EnvSpec&) const = default;
};

struct StepResult {
  std::vector<std::vector<double>> observations;  // n_agents x obs_dim
  double reward = 0.0;
  // Natural end of the episode (no bootstrapping past it).
  bool terminated = false;
  // Cut off by episode_limit.
  bool truncated = false;
  std::vector<std::uint8_t> alive;                 // n_agents
  std::vector<std::vector<std::uint8_t>> avail_actions;  // n_agents x n_actions
  std::vector<double> true_state;                  // state_dim
  int timestep = 0;

  bool done() const { return terminated || truncated; }
};

// Thrown for a joint action that contains an unavailable action.
class UnavailableActionError : public Error {
 public:
  UnavailableActionError(int agent, int action);
  int agent() const { return agent_; }

 private:
  int agent_;
};

class Environment {
 public:
  virtual ~Environment() = default;

  virtual const EnvSpec& spec() const = 0;
  virtual std::string name() const = 0;
  // Deterministic function of the seed.
  virtual StepResult Reset(std::uint64_t seed) = 0;
  virtual StepResult Step(std::span<const int> joint_action) = 0;
  virtual std::unique_ptr<Environment> Clone() const = 0;
};

// ---------------------------------------------------------------------------
// Two-step cooperative matrix game. Agent 0's first action picks the second
// stage game (0 -> 2A, 1 -> 2B); the second stage pays the matrix entry for
// the joint action. Observations and state are the one-hot stage index.

struct TwoStepGameSpec {
  using Payoff = std::array<std::array<double, 2>, 2>;
  Payoff matrix_a = {{{7.0, 7.0}, {7.0, 7.0}}};
  Payoff matrix_b = {{{0.0, 1.0}, {1.0, 8.0}}};
};

class TwoStepGame : public Environment {
 public:
  explicit TwoStepGame(TwoStepGameSpec spec = {});

  const EnvSpec& spec() const override { return spec_; }
  std::string name() const override { return "two_step"; }
  StepResult Reset(std::uint64_t seed) override;
  StepResult Step(std::span<const int> joint_action) override;
  std::unique_ptr<Environment> Clone() const override;

  const TwoStepGameSpec& game() const { return game_; }

 private:
  StepResult Observe(double reward, bool terminated) const;

  TwoStepGameSpec game_;
  EnvSpec spec_;
  int stage_ = 0;  // 0 initial, 1 game 2A, 2 game 2B
  int t_ = 0;
};

// ---------------------------------------------------------------------------
// Hidden-treasure gridworld. Agents spawn together in the top-left corner
// block; treasures lie in the far band max(row, col) >= size - 3. Agents see
// a (2r+1)^2 window around themselves and their own normalised coordinates.
// A treasure is captured on the step in which at least two agents are on or
// orthogonally adjacent to its cell. Actions: 0 stay, 1 up, 2 down, 3 left,
// 4 right; moves into the wall are unavailable.

struct TreasureGridSpec {
  int size = 7;
  int n_agents = 3;
  int sight = 1;
  int n_treasures = 2;
  double step_reward = -0.01;
  double capture_reward = 1.0;
  int episode_limit = 50;

  void Validate() const;
  bool operator==(const TreasureGridSpec&) const = default;
};

struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

// Complete world configuration, used to construct test fixtures.
struct GridWorldState {
  std::vector<Cell> agents;
  std::vector<Cell> treasures;
  std::vector<std::uint8_t> captured;
  int timestep = 0;
};

class TreasureGrid : public Environment {
 public:
  static constexpr int kNumActions = 5;
  static constexpr int kObsChannels = 3;  // other agent, treasure, wall

  explicit TreasureGrid(TreasureGridSpec spec = {});

  const EnvSpec& spec() const override { return spec_; }
  std::string name() const override { return "treasure_grid"; }
  StepResult Reset(std::uint64_t seed) override;
  StepResult Step(std::span<const int> joint_action) override;
  std::unique_ptr<Environment> Clone() const override;

  const TreasureGridSpec& grid() const { return grid_; }
  const GridWorldState& world() const { return world_; }
  // Replaces the world configuration and returns the matching observation.
  StepResult Restore(const GridWorldState& world);

  // Seeded placement with Rng(seed). Agents first: cell rng() % (k * k) of the
  // k x k spawn block. Then treasures: cell rng() % (size * size). Draws that
  // hit an occupied cell, or a treasure draw outside the far band, are
  // rejected and redrawn.
  static GridWorldState Place(const TreasureGridSpec& spec, std::uint64_t seed);
  // Side k of the spawn block: the smallest k >= 2 with k * k >= n_agents.
  static int SpawnSide(const TreasureGridSpec& spec);
  static bool InTreasureRegion(const TreasureGridSpec& spec, const Cell& c);

 private:
  StepResult Observe(double reward, bool terminated, bool truncated) const;
  bool Available(int agent, int action) const;

  TreasureGridSpec grid_;
  EnvSpec spec_;
  GridWorldState world_;
};

// ---------------------------------------------------------------------------

// Maximum undiscounted return from the state reached by Reset(seed), found by
// exhaustive open-loop search over joint-action sequences. Throws if the
// search tree exceeds `leaf_budget` leaves.
double OracleOptimalReturn(const Environment& env, std::uint64_t seed,
                           std::uint64_t leaf_budget = 50'000'000);

// ---------------------------------------------------------------------------
// Episode data model.

struct Episode {
  // Entries 0..T for per-state quantities (T = length()).
  std::vector<std::vector<std::vector<double>>> observations;
  std::vector<std::vector<double>> states;
  std::vector<std::vector<std::vector<std::uint8_t>>> avail_actions;
  std::vector<std::vector<std::uint8_t>> alive;
  // Entries 0..T-1 for per-transition quantities.
  std::vector<std::vector<int>> actions;
  std::vector<double> rewards;
  std::vector<std::uint8_t> terminated;

  int length() const { return static_cast<int>(actions.size()); }
  double Return() const;
  void AppendState(const StepResult& r);
};

// Writes one row per (episode, t, agent) with the observation, the action
// taken, the shared reward and the alive flag. The final observation of each
// episode has an empty action and reward.
void WriteEpisodesCsv(const std::string& path, std::span<const Episode> episodes);

std::unique_ptr<Environment> MakeEnvironment(const std::string& name,
                                             const TreasureGridSpec& grid = {});

}  // namespace latentmix::envs

#endif  // LATENTMIX_ENVS_HPP_
