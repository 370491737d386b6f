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

#include "progsyn/fitness.hpp"

#include <algorithm>
#include <cmath>

namespace progsyn {

namespace {

std::vector<TokenId> distinct(const Program& p) {
  std::vector<TokenId> ids(p.begin(), p.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

int lcs_subsequence(const Program& a, const Program& b) {
  // One row of the classic table; `diag` carries the top-left entry.
  std::vector<int> row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    int diag = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const int up = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diag + 1 : std::max(up, row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

int lcs_substring(const Program& a, const Program& b) {
  std::vector<int> row(b.size() + 1, 0);
  int best = 0;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = b.size(); j >= 1; --j) {
      row[j] = a[i - 1] == b[j - 1] ? row[j - 1] + 1 : 0;
      best = std::max(best, row[j]);
    }
  }
  return best;
}

}  // namespace

std::string_view to_string(ScoreKind kind) noexcept {
  switch (kind) {
    case ScoreKind::CF: return "CF";
    case ScoreKind::LCS: return "LCS";
    case ScoreKind::FP: return "FP";
    case ScoreKind::Model: return "MODEL";
  }
  return "MODEL";
}

int distinct_tokens(const Program& p) { return static_cast<int>(distinct(p).size()); }

int common_functions(const Program& candidate, const Program& target) {
  const auto a = distinct(candidate);
  const auto b = distinct(target);
  std::vector<TokenId> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return static_cast<int>(both.size());
}

int longest_common(const Program& candidate, const Program& target, LcsMode mode) {
  return mode == LcsMode::Subsequence ? lcs_subsequence(candidate, target) : lcs_substring(candidate, target);
}

double function_probability(const Program& candidate, std::span<const double> pmap) {
  double sum = 0.0;
  for (TokenId id : distinct(candidate)) {
    if (id >= pmap.size()) throw std::invalid_argument("probability map shorter than the registry");
    sum += pmap[id];
  }
  return sum;
}

ProbabilityMap membership(const Program& target, std::size_t registry_size) {
  ProbabilityMap p(registry_size, 0.0);
  for (TokenId id : target) p.at(id) = 1.0;
  return p;
}

FitnessScore oracle_fitness(const Spec& /*spec*/, const Program& candidate, const Program& target, Metric metric,
                            std::size_t registry_size, LcsMode mode) {
  switch (metric) {
    case Metric::CommonFunctions:
      return {static_cast<double>(common_functions(candidate, target)), ScoreKind::CF};
    case Metric::LongestCommon:
      return {static_cast<double>(longest_common(candidate, target, mode)), ScoreKind::LCS};
    case Metric::FunctionProbability:
      return {function_probability(candidate, membership(target, registry_size)), ScoreKind::FP};
  }
  return {};
}

ProbabilityMap empirical_pmap(const Registry& registry, std::size_t length, Rng& rng, std::size_t samples) {
  ProbabilityMap p(registry.size(), 0.0);
  for (std::size_t s = 0; s < samples; ++s) {
    for (TokenId id : distinct(random_program(length, rng, registry))) p[id] += 1.0;
  }
  for (auto& v : p) v /= static_cast<double>(samples);
  return p;
}

void validate_pmap(std::span<const double> pmap, std::size_t registry_size) {
  if (pmap.size() != registry_size) {
    throw std::invalid_argument("probability map has " + std::to_string(pmap.size()) + " entries, registry has " +
                                std::to_string(registry_size));
  }
  for (double v : pmap) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("probability map entry outside [0,1]");
  }
}

}  // namespace progsyn
