// Copyright 2026 The progsyn Authors. All Rights Reserved.
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

#ifndef PROGSYN_GENERATOR_HPP
#define PROGSYN_GENERATOR_HPP

#include <span>
#include <vector>

#include "progsyn/program.hpp"

namespace progsyn {

/// Bounds for generated program inputs.
struct InputBounds {
  std::size_t min_length = 1;
  std::size_t max_length = 20;
  Int min_value = -255;
  Int max_value = 255;
};

/// A random list input within `bounds`.
Value random_input(Rng& rng, const InputBounds& bounds = {});

std::vector<Value> random_inputs(std::size_t count, Rng& rng, const InputBounds& bounds = {});

/// Pairs each input with the output `program` produces on it.
Spec make_spec(const Program& program, std::span<const Value> inputs, const Registry& registry);

/// True when every example has the same output.
bool has_constant_outputs(const Spec& spec);

}  // namespace progsyn

#endif  // PROGSYN_GENERATOR_HPP
