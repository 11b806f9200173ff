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

#ifndef LATENTMIX_LAYERS_HPP_
#define LATENTMIX_LAYERS_HPP_

#include <string>

#include "latentmix/parameters.hpp"

namespace latentmix::ad {

// Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) initialisation.
Matrix UniformInit(Index rows, Index cols, Index fan_in, Rng& rng);

// y = x W + b, with W stored in x out layout.
struct Linear {
  Value weight;
  Value bias;  // may be undefined

  static Linear Create(ParameterSet& params, const std::string& name, Index in,
                       Index out, Rng& rng, bool with_bias = true);
  Value operator()(const Value& x) const;
  Index in_dim() const { return weight.rows(); }
  Index out_dim() const { return weight.cols(); }
};

// Gated recurrent unit, gates packed as [reset | update | candidate]:
//   r  = sigmoid(x W_ir + b_ir + h W_hr + b_hr)
//   z  = sigmoid(x W_iz + b_iz + h W_hz + b_hz)
//   n  = tanh(x W_in + b_in + r * (h W_hn + b_hn))
//   h' = (1 - z) * n + z * h
struct GruCell {
  Value w_ih;  // in x 3H
  Value w_hh;  // H x 3H
  Value b_ih;  // 1 x 3H
  Value b_hh;  // 1 x 3H

  static GruCell Create(ParameterSet& params, const std::string& name, Index in,
                        Index hidden, Rng& rng);
  Value operator()(const Value& x, const Value& h) const;
  // Same update given the precomputed input projection gi = x W_ih + b_ih.
  Value Step(const Value& gi, const Value& h) const;
  Index hidden_dim() const { return w_hh.rows(); }
};

}  // namespace latentmix::ad

#endif  // LATENTMIX_LAYERS_HPP_
