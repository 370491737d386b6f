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

// Genetic search over fixed-length programs, ranked by a FitnessModel, with
// local neighborhood search around the best genes when fitness saturates.

#ifndef PROGSYN_GA_HPP
#define PROGSYN_GA_HPP

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "progsyn/fitness_model.hpp"
#include "progsyn/report.hpp"

namespace progsyn {

enum class NeighborhoodMode : std::uint8_t { Bfs, Dfs };

struct GaConfig {
  std::size_t population_size = 100;
  std::size_t program_length = 4;
  double elite_fraction = 0.20;
  /// Share of the non-elite slots filled by crossover; the rest mutate.
  double crossover_share = 0.7;
  std::size_t top_n = 3;
  std::size_t window = 5;
  std::size_t max_generations = std::numeric_limits<std::size_t>::max();
  double time_budget_s = 60.0;
  std::uint64_t seed = 0;
  bool neighborhood_search = true;
  NeighborhoodMode ns_mode = NeighborhoodMode::Bfs;
  /// Genes that replace the first slots of the random initial population.
  std::vector<Program> initial_genes;
};

/// Throws std::invalid_argument for out-of-range settings.
void validate(const GaConfig& config);

/// Genes with parallel scores, sorted best first.
struct ScoredPopulation {
  std::vector<Program> genes;
  std::vector<double> scores;
};

/// Mean score of each completed generation.
struct FitnessHistory {
  std::vector<double> means;
};

std::vector<Program> init_population(const GaConfig& config, Rng& rng, const Registry& registry);

/// Scores each gene and sorts descending; equal scores keep their order.
ScoredPopulation rank(std::vector<Program> genes, const Spec& spec, const FitnessModel& model,
                      const Registry& registry);
ScoredPopulation rank(std::vector<Program> genes, std::span<const CandidateTraces> traces, const Spec& spec,
                      const FitnessModel& model);

/// Roulette wheel: index i with probability (s_i - min + eps) / sum.
std::size_t select_parent(std::span<const double> scores, Rng& rng, double eps = 1e-6);

/// Single-point crossover `a[0, point) ++ b[point, L)`.
Program crossover_at(const Program& a, const Program& b, std::size_t point);
/// Crossover at a point drawn uniformly from [1, L-1]; returns `a` when L < 2.
Program crossover(const Program& a, const Program& b, Rng& rng);

inline constexpr int kOffspringAttempts = 100;

/// Model-guided single-point mutation. Samples min(2L, 16) (position,
/// replacement) pairs, replacements drawn by roulette over `pmap` (uniform
/// when absent), and returns the best-scoring one that keeps the effective
/// length at L. Falls back to a uniform valid mutant, then to `gene` itself.
Program mutate(const Program& gene, Rng& rng, const FitnessModel& model, const ProbabilityMap* pmap,
               const Spec& spec, const Registry& registry, std::size_t* evaluations = nullptr);

/// Saturation test: mean of the last `window` generation means is no greater
/// than the mean of all earlier ones. False without enough history.
bool ns_trigger(const FitnessHistory& history, std::size_t window);

struct NeighborhoodResult {
  std::optional<Program> found;
  std::size_t candidates = 0;
};

/// Single-token-replacement neighborhoods of the `top` genes. The genes
/// themselves are not tested. BFS tests every replacement of every position;
/// DFS walks the positions in order, moving to the best-scoring replacement
/// after each one.
NeighborhoodResult neighborhood_search(std::span<const Program> top, const Spec& spec, NeighborhoodMode mode,
                                       const FitnessModel& model, const Registry& registry);

/// Called after each generation is ranked (for instrumentation and tests).
using GenerationObserver = std::function<void(std::size_t generation, const ScoredPopulation&)>;

/// Runs the evolutionary loop until a gene satisfies the spec, the
/// generation cap, or the time budget. Model failures propagate.
SynthesisReport synthesize_ga(const Spec& spec, const GaConfig& config, const FitnessModel& model,
                              const Registry& registry, const GenerationObserver& observer = {});

}  // namespace progsyn

#endif  // PROGSYN_GA_HPP
