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

#ifndef PROGSYN_TRAINING_HPP
#define PROGSYN_TRAINING_HPP

#include <iosfwd>
#include <vector>

#include "progsyn/fitness_model.hpp"
#include "progsyn/generator.hpp"
#include "progsyn/io.hpp"

namespace progsyn {

/// One supervised example for the learned fitness model: a target, the
/// examples it produced, an unrelated candidate with its traces on the same
/// inputs, and the exact closeness labels between the two programs.
struct TrainingRecord {
  Program target;
  Program candidate;
  Spec examples;
  std::vector<Trace> traces;
  int cf = 0;
  int lcs_subsequence = 0;
  int lcs_substring = 0;
  std::vector<int> membership;

  friend bool operator==(const TrainingRecord&, const TrainingRecord&) = default;
};

struct TrainingConfig {
  std::size_t count = 1;
  std::size_t program_length = 4;
  std::size_t examples_per_program = 5;
  InputBounds bounds{};
};

/// Deterministic for a given rng state. Targets with constant outputs are
/// kept as they are.
std::vector<TrainingRecord> generate_training_data(const TrainingConfig& config, Rng& rng, const Registry& registry);

/// Keys: target, candidate, io, traces, labels{cf, lcs_subseq, lcs_substr, membership}.
json to_json(const TrainingRecord& record);
TrainingRecord training_record_from_json(const json& j, const Registry& registry);

void write_training_data(std::ostream& out, const std::vector<TrainingRecord>& records);

}  // namespace progsyn

#endif  // PROGSYN_TRAINING_HPP
