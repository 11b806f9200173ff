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

// Binary checkpoint container. Layout, all integers and doubles
// little-endian:
//
//   "LMXCKPT\0"            8-byte magic
//   u32 version            kCheckpointVersion
//   u64 entry count
//   per entry, in lexicographic name order:
//     u32 name length, name bytes (UTF-8, no terminator)
//     u32 rank (always 2), u64 rows, u64 cols
//     rows * cols f64 values, row-major
//
// Optimizer accumulators live in the same file under kOptimizerPrefix.

#ifndef LATENTMIX_CHECKPOINT_HPP_
#define LATENTMIX_CHECKPOINT_HPP_

#include <cstdint>
#include <map>
#include <string>

#include "latentmix/optimizer.hpp"
#include "latentmix/parameters.hpp"

namespace latentmix::ad {

inline constexpr std::uint32_t kCheckpointVersion = 1;
inline constexpr const char* kOptimizerPrefix = "__rmsprop__/";

using ArrayMap = std::map<std::string, Matrix>;

void WriteCheckpoint(const std::string& path, const ArrayMap& arrays);
ArrayMap ReadCheckpoint(const std::string& path);

void ExportParameters(const ParameterSet& params, const std::string& prefix,
                      ArrayMap& out);
void ExportOptimizer(const RmsProp& opt, ArrayMap& out);

// Every entry of `params` must be present under `prefix` with matching shape.
void ImportParameters(const ArrayMap& arrays, const std::string& prefix,
                      ParameterSet& params);
void ImportOptimizer(const ArrayMap& arrays, RmsProp& opt);

}  // namespace latentmix::ad

#endif  // LATENTMIX_CHECKPOINT_HPP_
