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

#include "progsyn/generator.hpp"

namespace progsyn {

Value random_input(Rng& rng, const InputBounds& bounds) {
  std::uniform_int_distribution<std::size_t> length(bounds.min_length, bounds.max_length);
  std::uniform_int_distribution<Int> element(bounds.min_value, bounds.max_value);
  IntList xs(length(rng));
  for (auto& x : xs) x = element(rng);
  return Value(std::move(xs));
}

std::vector<Value> random_inputs(std::size_t count, Rng& rng, const InputBounds& bounds) {
  std::vector<Value> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_input(rng, bounds));
  return out;
}

Spec make_spec(const Program& program, std::span<const Value> inputs, const Registry& registry) {
  Spec spec;
  spec.examples.reserve(inputs.size());
  for (const auto& x : inputs) spec.examples.push_back({x, run(program, x, registry)});
  return spec;
}

bool has_constant_outputs(const Spec& spec) {
  for (const auto& ex : spec.examples) {
    if (ex.output != spec.examples.front().output) return false;
  }
  return true;
}

}  // namespace progsyn
