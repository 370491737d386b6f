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

#ifndef PROGSYN_FITNESS_HPP
#define PROGSYN_FITNESS_HPP

#include <span>
#include <string_view>
#include <vector>

#include "progsyn/program.hpp"

namespace progsyn {

/// Independent per-token membership probabilities, indexed by token id.
using ProbabilityMap = std::vector<double>;

enum class LcsMode : std::uint8_t { Subsequence, Substring };

/// Closeness metric between a candidate and the target program.
enum class Metric : std::uint8_t { CommonFunctions, LongestCommon, FunctionProbability };

enum class ScoreKind : std::uint8_t { CF, LCS, FP, Model };

struct FitnessScore {
  double value = 0.0;
  ScoreKind kind = ScoreKind::Model;
};

std::string_view to_string(ScoreKind kind) noexcept;

/// Number of distinct tokens the two programs share.
int common_functions(const Program& candidate, const Program& target);

/// Longest common subsequence (classical DP) or longest common contiguous
/// run over token ids.
int longest_common(const Program& candidate, const Program& target, LcsMode mode = LcsMode::Substring);

/// Sum of p_k over the distinct tokens of `candidate`.
double function_probability(const Program& candidate, std::span<const double> pmap);

/// Indicator of the target's tokens: p_k = 1 iff token k occurs in target.
ProbabilityMap membership(const Program& target, std::size_t registry_size);

/// Number of distinct tokens in `p`.
int distinct_tokens(const Program& p);

/// Exact metric against a known target. FP uses the target's membership
/// indicator as its probability map.
FitnessScore oracle_fitness(const Spec& spec, const Program& candidate, const Program& target, Metric metric,
                            std::size_t registry_size, LcsMode mode = LcsMode::Substring);

/// Fraction of random programs of `length` that contain each token. Used as
/// a probability map when no trained model supplies one.
ProbabilityMap empirical_pmap(const Registry& registry, std::size_t length, Rng& rng, std::size_t samples = 10000);

/// Throws std::invalid_argument unless `pmap` has one entry in [0,1] per token.
void validate_pmap(std::span<const double> pmap, std::size_t registry_size);

}  // namespace progsyn

#endif  // PROGSYN_FITNESS_HPP
