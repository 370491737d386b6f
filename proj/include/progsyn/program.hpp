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

#ifndef PROGSYN_PROGRAM_HPP
#define PROGSYN_PROGRAM_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "progsyn/registry.hpp"
#include "progsyn/rng.hpp"
#include "progsyn/value.hpp"

namespace progsyn {

/// A straight-line program; also the gene of the evolutionary search.
struct Program {
  std::vector<TokenId> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
  TokenId operator[](std::size_t i) const { return tokens[i]; }
  TokenId& operator[](std::size_t i) { return tokens[i]; }
  auto begin() const noexcept { return tokens.begin(); }
  auto end() const noexcept { return tokens.end(); }

  friend bool operator==(const Program&, const Program&) = default;
  friend auto operator<=>(const Program&, const Program&) = default;
};

struct Example {
  Value input;
  Value output;
  friend bool operator==(const Example&, const Example&) = default;
};

/// Input-output examples describing the target behaviour.
struct Spec {
  std::vector<Example> examples;
  std::size_t size() const noexcept { return examples.size(); }
  friend bool operator==(const Spec&, const Spec&) = default;
};

/// Throws std::invalid_argument unless the spec is non-empty with uniformly
/// typed inputs and uniformly typed outputs.
void validate_spec(const Spec& spec);

/// Per-statement outputs in execution order.
using Trace = std::vector<Value>;

struct Execution {
  Value output;
  Trace trace;
};

/// Runs `program` on `input`. Total: never fails for valid token ids.
/// Each argument slot binds the most recent earlier value of its type
/// (statements first, then the program input); a second slot of the same
/// type binds the next most recent one, or reuses the first binding; the
/// type's default value is used when nothing of that type exists.
Execution evaluate(const Program& program, const Value& input, const Registry& registry);

/// Like evaluate() without keeping the trace.
Value run(const Program& program, const Value& input, const Registry& registry);

/// Keeps only the statements the final statement transitively depends on.
Program eliminate_dead_code(const Program& program, const Registry& registry);

/// Number of statements left after dead-code elimination.
std::size_t effective_length(const Program& program, const Registry& registry);

/// True iff every example maps to its output under `program`.
bool satisfies(const Program& program, const Spec& spec, const Registry& registry);

/// pa ≡_S pb: both programs reproduce every output of the spec.
bool equivalent(const Program& pa, const Program& pb, const Spec& spec, const Registry& registry);

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxProgramLength = 16;
inline constexpr int kRandomProgramAttempts = 1000;

/// Uniform token draws, redrawn until the effective length equals `length`.
Program random_program(std::size_t length, Rng& rng, const Registry& registry,
                       int max_attempts = kRandomProgramAttempts);

/// Comma-separated token names, e.g. `FILTER(>0),MAP(*2),SORT,REVERSE`.
Program parse_program(std::string_view text, const Registry& registry);
std::string to_string(const Program& program, const Registry& registry);

/// Throws RegistryError if any id is outside the registry.
void validate_program(const Program& program, const Registry& registry);

}  // namespace progsyn

#endif  // PROGSYN_PROGRAM_HPP
