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


// Program synthesis as continuous optimisation: CMA-ES samples are decoded
// to programs and ranked by how far their outputs are from the examples.

#ifndef PROGSYN_GENESYS_HPP
#define PROGSYN_GENESYS_HPP

#include <limits>

#include "progsyn/cma.hpp"
#include "progsyn/mapping.hpp"
#include "progsyn/report.hpp"

namespace progsyn {

inline constexpr double kIntErrorCap = 64;
inline constexpr double kTypeMismatchPenalty = 128;

/// Distance between an actual and an expected output: edit distance for two
/// lists, |a - b| capped at 64 for two ints, 128 on a type mismatch.
double output_distance(const Value& actual, const Value& expected);

/// Sum of output distances over the examples; zero iff `p` satisfies `spec`.
double program_error(const Program& p, const Spec& spec, const Registry& registry);

struct CmaConfig {
  SchemeKind scheme = SchemeKind::Bin;
  BinMode bin_mode = BinMode::Equal;
  std::size_t program_length = 2;
  RestartPolicy restart = RestartPolicy::ipop();
  double time_budget_s = 120.0;
  std::size_t max_evaluations = std::numeric_limits<std::size_t>::max();
  double sigma0 = 1.0;
  std::uint64_t seed = 0;
};

/// Ask/decode/evaluate/tell until a sample's program satisfies the spec or
/// the time or evaluation budget runs out; restarts on stall. `pmap` is
/// needed only for proportional bins.
SynthesisReport synthesize_cma(const Spec& spec, const CmaConfig& config, const Registry& registry,
                               const ProbabilityMap* pmap = nullptr);

}  // namespace progsyn

#endif  // PROGSYN_GENESYS_HPP
