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

#include "progsyn/training.hpp"

#include <ostream>

namespace progsyn {

std::vector<TrainingRecord> generate_training_data(const TrainingConfig& config, Rng& rng, const Registry& registry) {
  if (config.count == 0) throw std::invalid_argument("training data count must be at least 1");
  if (config.examples_per_program == 0) throw std::invalid_argument("need at least one example per program");

  std::vector<TrainingRecord> records;
  records.reserve(config.count);
  for (std::size_t i = 0; i < config.count; ++i) {
    TrainingRecord r;
    r.target = random_program(config.program_length, rng, registry);
    const auto inputs = random_inputs(config.examples_per_program, rng, config.bounds);
    r.examples = make_spec(r.target, inputs, registry);
    r.candidate = random_program(config.program_length, rng, registry);
    r.traces = collect_traces(r.candidate, r.examples, registry);
    r.cf = common_functions(r.candidate, r.target);
    r.lcs_subsequence = longest_common(r.candidate, r.target, LcsMode::Subsequence);
    r.lcs_substring = longest_common(r.candidate, r.target, LcsMode::Substring);
    r.membership.assign(registry.size(), 0);
    for (TokenId id : r.target) r.membership[id] = 1;
    records.push_back(std::move(r));
  }
  return records;
}

json to_json(const TrainingRecord& record) {
  json traces = json::array();
  for (const auto& t : record.traces) traces.push_back(trace_to_json(t));
  return json{
      {"target", ids_to_json(record.target)},
      {"candidate", ids_to_json(record.candidate)},
      {"io", io_to_json(record.examples)},
      {"traces", std::move(traces)},
      {"labels",
       {{"cf", record.cf},
        {"lcs_subseq", record.lcs_subsequence},
        {"lcs_substr", record.lcs_substring},
        {"membership", record.membership}}},
  };
}

TrainingRecord training_record_from_json(const json& j, const Registry& registry) {
  TrainingRecord r;
  r.target = program_from_ids(j.at("target"), registry);
  r.candidate = program_from_ids(j.at("candidate"), registry);
  r.examples = spec_from_io_json(j.at("io"));
  for (const auto& t : j.at("traces")) r.traces.push_back(trace_from_json(t));
  const auto& labels = j.at("labels");
  r.cf = labels.at("cf").get<int>();
  r.lcs_subsequence = labels.at("lcs_subseq").get<int>();
  r.lcs_substring = labels.at("lcs_substr").get<int>();
  r.membership = labels.at("membership").get<std::vector<int>>();
  if (r.traces.size() != r.examples.size()) throw std::invalid_argument("record has one trace per example");
  if (r.membership.size() != registry.size()) throw std::invalid_argument("membership vector does not match registry");
  return r;
}

void write_training_data(std::ostream& out, const std::vector<TrainingRecord>& records) {
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

}  // namespace progsyn
