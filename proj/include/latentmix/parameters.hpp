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

#ifndef LATENTMIX_PARAMETERS_HPP_
#define LATENTMIX_PARAMETERS_HPP_

#include <cstddef>
#include <map>
#include <string>

#include "latentmix/autodiff.hpp"

namespace latentmix::ad {

// Named collection of leaf Values. Iteration is lexicographic by name, which
// fixes the order of optimizer updates and checkpoint entries.
class ParameterSet {
 public:
  struct Entry {
    Value value;
    bool trainable = true;
  };

  Value Add(const std::string& name, Matrix init, bool trainable = true);
  // Registers an existing Value; the set shares it with the caller.
  void Add(const std::string& name, Value value, bool trainable = true);
  // Shares every entry of `other` under `prefix`.
  void Include(const std::string& prefix, const ParameterSet& other);

  bool Contains(const std::string& name) const;
  const Value& Get(const std::string& name) const;
  void SetTrainable(const std::string& name, bool trainable);
  void SetAllTrainable(bool trainable);

  const std::map<std::string, Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  // Total number of scalars.
  std::size_t ScalarCount() const;

  void ZeroGrad();
  void Fill(double v);

 private:
  std::map<std::string, Entry> entries_;
};

// Hard copy of every array in `from` into the same-named entry of `to`.
// The two sets must hold identical names and shapes.
void CopyParameters(const ParameterSet& from, ParameterSet& to);

}  // namespace latentmix::ad

#endif  // LATENTMIX_PARAMETERS_HPP_
