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

#ifndef LATENTMIX_COMMON_HPP_
#define LATENTMIX_COMMON_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace latentmix {

// Every stochastic component draws from its own Mersenne twister so that runs
// are reproducible from a single integer seed.
using Rng = std::mt19937_64;

// Derives an independent stream seed from (base, stream) with the splitmix64
// finalizer.
inline std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double UniformUnit(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline double StandardNormal(Rng& rng) {
  return std::normal_distribution<double>(0.0, 1.0)(rng);
}

// Root of the exception hierarchy. The C API maps the subclasses below onto
// status codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class CheckpointError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

// A file could not be created or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace latentmix

#endif  // LATENTMIX_COMMON_HPP_
