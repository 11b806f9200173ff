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

// Run configuration: plain key=value text, every key optional, defaults
// resolved at parse time.

#ifndef LATENTMIX_CONFIG_HPP_
#define LATENTMIX_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "latentmix/envs.hpp"
#include "latentmix/mixing.hpp"

namespace latentmix {

enum class Algorithm { kVdn, kQmix, kQmixPo, kQmixHo, kSide };

const char* AlgorithmName(Algorithm a);
Algorithm ParseAlgorithm(const std::string& name);
// The state source each algorithm runs with.
mixing::StateSource ForcedStateSource(Algorithm a);

struct TrainConfig {
  Algorithm algorithm = Algorithm::kSide;
  std::string env = "treasure_grid";
  std::uint64_t seed = 1;
  std::int64_t t_max = 2'050'000;
  std::int64_t eval_interval = 10'000;
  int eval_episodes = 32;

  double lr = 5e-4;
  double rmsprop_alpha = 0.99;
  double rmsprop_eps = 1e-5;
  double grad_norm_clip = 10.0;
  int batch_size = 32;
  int buffer_size = 5000;
  double gamma = 0.99;
  std::int64_t target_update_interval = 200;
  double epsilon_start = 1.0;
  double epsilon_finish = 0.05;
  std::int64_t epsilon_anneal_time = 50'000;

  int rnn_hidden_dim = 64;
  int mixing_embed_dim = 32;
  int latent_dim = 64;
  int side_embed_dim = 128;
  int action_embed_dim = 16;

  // "auto" or a state source name that must agree with the algorithm.
  std::string state_source = "auto";
  bool side_losses = true;

  envs::TreasureGridSpec grid;

  std::int64_t checkpoint_interval = 0;  // 0: final checkpoint only
  int rollout_workers = 1;
  std::string out_dir = "runs/default";

  mixing::StateSource ResolvedStateSource() const;
  bool UsesSide() const { return algorithm == Algorithm::kSide; }

  // Throws ConfigError naming every failing field.
  void Validate() const;

  // Applies one key=value assignment. Throws ConfigError on unknown keys or
  // unparsable values. `preset` is accepted as a write-only key.
  void Set(const std::string& key, const std::string& value);
  std::string Get(const std::string& key) const;

  // Full resolved text form, one key=value per line, fixed key order.
  std::string Serialize() const;

  bool operator==(const TrainConfig&) const = default;
};

// Keys accepted by TrainConfig::Set, in serialization order.
const std::vector<std::string>& ConfigKeys();

// Parses text of `key = value` lines; '#' starts a comment.
TrainConfig ParseConfigText(const std::string& text, TrainConfig base = {});
TrainConfig LoadConfigFile(const std::string& path, TrainConfig base = {});
// Splits "key=value" and applies it.
void ApplyOverride(TrainConfig& config, const std::string& assignment);

}  // namespace latentmix

#endif  // LATENTMIX_CONFIG_HPP_
