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

#include "progsyn/ga.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>
#include <stdexcept>

namespace progsyn {

void validate(const GaConfig& config) {
  if (config.population_size < 4) throw std::invalid_argument("population size must be at least 4");
  if (config.program_length < 1 || config.program_length > kMaxProgramLength)
    throw std::invalid_argument("program length must be in [1, " + std::to_string(kMaxProgramLength) + "]");
  if (!(config.elite_fraction > 0.0 && config.elite_fraction < 1.0))
    throw std::invalid_argument("elite fraction must be in (0, 1)");
  if (!(config.crossover_share >= 0.0 && config.crossover_share <= 1.0))
    throw std::invalid_argument("crossover share must be in [0, 1]");
  if (config.window < 1) throw std::invalid_argument("window must be at least 1");
  if (config.top_n < 1) throw std::invalid_argument("top-N must be at least 1");
  if (!(config.time_budget_s >= 0.0)) throw std::invalid_argument("time budget must be non-negative");
  for (const auto& g : config.initial_genes) {
    if (g.size() != config.program_length) throw std::invalid_argument("initial gene has the wrong length");
  }
}

std::vector<Program> init_population(const GaConfig& config, Rng& rng, const Registry& registry) {
  std::vector<Program> genes;
  genes.reserve(config.population_size);
  for (std::size_t i = 0; i < config.population_size; ++i)
    genes.push_back(random_program(config.program_length, rng, registry));
  const std::size_t planted = std::min(config.initial_genes.size(), genes.size());
  std::copy_n(config.initial_genes.begin(), planted, genes.begin());
  return genes;
}

namespace {

// Stable descending order of `scores`.
std::vector<std::size_t> rank_order(const std::vector<double>& scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

template <typename T>
std::vector<T> permute(std::vector<T>& items, const std::vector<std::size_t>& order) {
  std::vector<T> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(std::move(items[i]));
  return out;
}

}  // namespace

ScoredPopulation rank(std::vector<Program> genes, std::span<const CandidateTraces> traces, const Spec& spec,
                      const FitnessModel& model) {
  auto scores = model.score_batch(spec, genes, traces);
  const auto order = rank_order(scores);
  return {permute(genes, order), permute(scores, order)};
}

ScoredPopulation rank(std::vector<Program> genes, const Spec& spec, const FitnessModel& model,
                      const Registry& registry) {
  std::vector<CandidateTraces> traces;
  traces.reserve(genes.size());
  for (const auto& g : genes) traces.push_back(collect_traces(g, spec, registry));
  return rank(std::move(genes), traces, spec, model);
}

std::size_t select_parent(std::span<const double> scores, Rng& rng, double eps) {
  if (scores.empty()) throw std::invalid_argument("cannot select from an empty population");
  const double lo = *std::min_element(scores.begin(), scores.end());
  std::vector<double> weights(scores.size());
  std::transform(scores.begin(), scores.end(), weights.begin(), [&](double s) { return s - lo + eps; });
  std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
  return dist(rng);
}

Program crossover_at(const Program& a, const Program& b, std::size_t point) {
  if (a.size() != b.size()) throw std::invalid_argument("crossover parents differ in length");
  if (point > a.size()) throw std::invalid_argument("crossover point out of range");
  Program child = a;
  std::copy(b.tokens.begin() + static_cast<std::ptrdiff_t>(point), b.tokens.end(),
            child.tokens.begin() + static_cast<std::ptrdiff_t>(point));
  return child;
}

Program crossover(const Program& a, const Program& b, Rng& rng) {
  if (a.size() < 2) return a;
  return crossover_at(a, b, 1 + uniform_index(rng, a.size() - 1));
}

namespace {

constexpr double kRouletteEps = 1e-6;

TokenId draw_replacement(TokenId current, Rng& rng, const ProbabilityMap* pmap, std::size_t sigma) {
  if (pmap) {
    std::vector<double> w(sigma);
    for (std::size_t z = 0; z < sigma; ++z) w[z] = z == current ? 0.0 : (*pmap)[z] + kRouletteEps;
    std::discrete_distribution<std::size_t> dist(w.begin(), w.end());
    return static_cast<TokenId>(dist(rng));
  }
  // Uniform over the other sigma - 1 tokens.
  auto z = static_cast<TokenId>(uniform_index(rng, sigma - 1));
  return z >= current ? static_cast<TokenId>(z + 1) : z;
}

}  // namespace

Program mutate(const Program& gene, Rng& rng, const FitnessModel& model, const ProbabilityMap* pmap,
               const Spec& spec, const Registry& registry, std::size_t* evaluations) {
  const std::size_t sigma = registry.size();
  const std::size_t len = gene.size();
  if (sigma < 2 || len == 0) return gene;
  if (pmap && pmap->size() != sigma) throw std::invalid_argument("probability map size does not match registry");

  const std::size_t k = std::min<std::size_t>(2 * len, 16);
  std::vector<Program> candidates;
  std::vector<CandidateTraces> traces;
  for (std::size_t i = 0; i < k; ++i) {
    Program m = gene;
    const auto pos = uniform_index(rng, len);
    m[pos] = draw_replacement(gene[pos], rng, pmap, sigma);
    if (effective_length(m, registry) != len) continue;
    traces.push_back(collect_traces(m, spec, registry));
    candidates.push_back(std::move(m));
  }
  if (!candidates.empty()) {
    if (evaluations) *evaluations += candidates.size();
    const auto scores = model.score_batch(spec, candidates, traces);
    const auto best = std::max_element(scores.begin(), scores.end()) - scores.begin();
    return candidates[static_cast<std::size_t>(best)];
  }
  for (int attempt = 0; attempt < kOffspringAttempts; ++attempt) {
    Program m = gene;
    const auto pos = uniform_index(rng, len);
    m[pos] = draw_replacement(gene[pos], rng, nullptr, sigma);
    if (effective_length(m, registry) == len) return m;
  }
  return gene;
}

bool ns_trigger(const FitnessHistory& history, std::size_t window) {
  const auto& h = history.means;
  if (window == 0 || h.size() <= window) return false;
  const auto split = h.end() - static_cast<std::ptrdiff_t>(window);
  const double recent = std::accumulate(split, h.end(), 0.0) / static_cast<double>(window);
  const double earlier = std::accumulate(h.begin(), split, 0.0) / static_cast<double>(h.size() - window);
  return recent <= earlier;
}

NeighborhoodResult neighborhood_search(std::span<const Program> top, const Spec& spec, NeighborhoodMode mode,
                                       const FitnessModel& model, const Registry& registry) {
  NeighborhoodResult result;
  const std::size_t sigma = registry.size();
  for (const auto& gene : top) {
    Program work = gene;
    for (std::size_t pos = 0; pos < work.size(); ++pos) {
      std::vector<Program> variants;
      std::vector<CandidateTraces> traces;
      variants.reserve(sigma - 1);
      for (std::size_t z = 0; z < sigma; ++z) {
        if (z == work[pos]) continue;
        Program v = work;
        v[pos] = static_cast<TokenId>(z);
        auto t = collect_traces(v, spec, registry);
        ++result.candidates;
        if (traces_satisfy(t, spec)) {
          result.found = std::move(v);
          return result;
        }
        if (mode == NeighborhoodMode::Dfs) {
          variants.push_back(std::move(v));
          traces.push_back(std::move(t));
        }
      }
      if (mode == NeighborhoodMode::Dfs && !variants.empty()) {
        const auto scores = model.score_batch(spec, variants, traces);
        work = variants[static_cast<std::size_t>(std::max_element(scores.begin(), scores.end()) - scores.begin())];
      }
    }
  }
  return result;
}

namespace {

struct Evaluated {
  std::vector<Program> genes;
  std::vector<CandidateTraces> traces;
  std::optional<std::size_t> hit;
};

Evaluated evaluate_genes(std::vector<Program> genes, const Spec& spec, const Registry& registry) {
  Evaluated e;
  e.traces.reserve(genes.size());
  for (std::size_t i = 0; i < genes.size(); ++i) {
    e.traces.push_back(collect_traces(genes[i], spec, registry));
    if (!e.hit && traces_satisfy(e.traces.back(), spec)) e.hit = i;
  }
  e.genes = std::move(genes);
  return e;
}

double mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

SynthesisReport synthesize_ga(const Spec& spec, const GaConfig& config, const FitnessModel& model,
                              const Registry& registry, const GenerationObserver& observer) {
  validate(config);
  validate_spec(spec);
  const Deadline deadline(config.time_budget_s);
  SynthesisReport report;
  report.engine = "ga";
  report.seed = config.seed;
  auto finish = [&](std::string reason) {
    report.stop_reason = std::move(reason);
    report.wall_time_s = deadline.elapsed();
    return report;
  };
  auto succeed = [&](const Program& p) {
    report.found = eliminate_dead_code(p, registry);
    return finish("found");
  };
  if (deadline.expired()) return finish("budget");

  Rng rng(config.seed);
  const std::size_t t = config.population_size;
  const auto elites = static_cast<std::size_t>(std::ceil(config.elite_fraction * static_cast<double>(t)));
  const std::size_t offspring = t - std::min(elites, t);
  const auto crossovers =
      static_cast<std::size_t>(std::llround(config.crossover_share * static_cast<double>(offspring)));
  const auto pmap = model.pmap(spec);
  if (pmap) validate_pmap(*pmap, registry.size());

  auto fresh = evaluate_genes(init_population(config, rng, registry), spec, registry);
  report.evaluations += fresh.genes.size();
  if (fresh.hit) return succeed(fresh.genes[*fresh.hit]);

  // Elites keep their traces so they are neither re-run nor re-counted.
  std::vector<CandidateTraces> traces = std::move(fresh.traces);
  ScoredPopulation pop = rank(std::move(fresh.genes), traces, spec, model);
  FitnessHistory history;
  std::size_t generation = 0;
  for (;;) {
    if (observer) observer(generation, pop);
    history.means.push_back(mean(pop.scores));

    if (config.neighborhood_search && ns_trigger(history, config.window)) {
      ++report.ns_invocations;
      const std::size_t n = std::min(config.top_n, pop.genes.size());
      auto ns = neighborhood_search(std::span(pop.genes).first(n), spec, config.ns_mode, model, registry);
      report.evaluations += ns.candidates;
      history.means.clear();
      if (ns.found) return succeed(*ns.found);
    }
    if (generation >= config.max_generations) return finish("generations");
    if (deadline.expired()) return finish("budget");

    std::vector<Program> children;
    children.reserve(offspring);
    for (std::size_t i = 0; i < crossovers; ++i) {
      std::size_t pa = 0, pb = 0;
      std::optional<Program> child;
      for (int attempt = 0; attempt < kOffspringAttempts && !child; ++attempt) {
        pa = select_parent(pop.scores, rng);
        pb = select_parent(pop.scores, rng);
        auto c = crossover(pop.genes[pa], pop.genes[pb], rng);
        if (effective_length(c, registry) == config.program_length) child = std::move(c);
      }
      // Ranked best first, so the lower index is the higher-scored parent.
      children.push_back(child ? std::move(*child) : pop.genes[std::min(pa, pb)]);
    }
    for (std::size_t i = crossovers; i < offspring; ++i) {
      const auto& parent = pop.genes[select_parent(pop.scores, rng)];
      children.push_back(mutate(parent, rng, model, pmap ? &*pmap : nullptr, spec, registry, &report.evaluations));
    }
    ++generation;
    report.generations = generation;

    fresh = evaluate_genes(std::move(children), spec, registry);
    report.evaluations += fresh.genes.size();
    if (fresh.hit) return succeed(fresh.genes[*fresh.hit]);

    std::vector<Program> genes(pop.genes.begin(), pop.genes.begin() + static_cast<std::ptrdiff_t>(elites));
    std::vector<CandidateTraces> next(traces.begin(), traces.begin() + static_cast<std::ptrdiff_t>(elites));
    std::move(fresh.genes.begin(), fresh.genes.end(), std::back_inserter(genes));
    std::move(fresh.traces.begin(), fresh.traces.end(), std::back_inserter(next));
    auto scores = model.score_batch(spec, genes, next);
    const auto order = rank_order(scores);
    pop = {permute(genes, order), permute(scores, order)};
    traces = permute(next, order);
  }
}

}  // namespace progsyn
