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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "progsyn/ga.hpp"
#include "progsyn/generator.hpp"

using namespace progsyn;

namespace {

const Registry& reg() {
  static const Registry r = Registry::deepcoder();
  return r;
}

Spec spec_for(const Program& target, Rng& rng) { return make_spec(target, random_inputs(5, rng), reg()); }

// A random target with a spec that tells programs apart.
std::pair<Program, Spec> random_problem(std::size_t length, Rng& rng) {
  for (;;) {
    auto target = random_program(length, rng, reg());
    auto spec = spec_for(target, rng);
    if (!has_constant_outputs(spec)) return {target, spec};
  }
}

}  // namespace

TEST_CASE("config validation") {
  GaConfig c;
  CHECK_NOTHROW(validate(c));
  c.population_size = 3;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = {};
  c.elite_fraction = 1.0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = {};
  c.window = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("initial population") {
  GaConfig c;
  c.population_size = 4;
  c.program_length = 1;
  Rng rng(1);
  auto small = init_population(c, rng, reg());
  CHECK(small.size() == 4);
  for (const auto& g : small) CHECK(g.size() == 1);

  c.population_size = 100;
  c.program_length = 4;
  Rng r1(7), r2(7);
  auto a = init_population(c, r1, reg());
  CHECK(a == init_population(c, r2, reg()));
  for (const auto& g : a) CHECK(effective_length(g, reg()) == 4);
}

TEST_CASE("ranking is a stable descending sort") {
  const auto target = parse_program("FILTER(>0),MAP(*2),SORT,REVERSE", reg());
  Rng rng(3);
  const auto spec = spec_for(target, rng);
  OracleModel cf(target, Metric::CommonFunctions, reg().size());
  std::vector<Program> genes = {parse_program("HEAD,LAST", reg()), parse_program("SORT,REVERSE", reg()),
                                parse_program("TAKE,DROP", reg()), parse_program("REVERSE,SORT", reg())};
  auto pop = rank(genes, spec, cf, reg());
  CHECK(pop.scores == std::vector<double>{2, 2, 0, 0});
  CHECK(pop.genes[0] == genes[1]);
  CHECK(pop.genes[1] == genes[3]);
  CHECK(pop.genes[2] == genes[0]);
  CHECK(pop.genes[3] == genes[2]);

  auto self = rank({target}, spec, cf, reg());
  CHECK(self.scores[0] == distinct_tokens(target));
}

TEST_CASE("roulette selection") {
  SUBCASE("equal scores select uniformly") {
    Rng rng(11);
    const std::vector<double> scores(10, 2.5);
    std::vector<int> counts(10);
    constexpr int kDraws = 10000;
    for (int i = 0; i < kDraws; ++i) ++counts[select_parent(scores, rng)];
    double chi2 = 0;
    for (int c : counts) chi2 += (c - kDraws / 10.0) * (c - kDraws / 10.0) / (kDraws / 10.0);
    CHECK(chi2 < 21.67);  // chi-square 0.99 quantile, 9 degrees of freedom
  }
  SUBCASE("a single positive score dominates") {
    Rng rng(12);
    const std::vector<double> scores = {0, 0, 1, 0};
    int hits = 0;
    for (int i = 0; i < 1000; ++i) hits += select_parent(scores, rng, 1e-12) == 2;
    CHECK(hits == 1000);
  }
  SUBCASE("reproducible") {
    Rng a(5), b(5);
    const std::vector<double> scores = {3, 1, 4, 1, 5};
    for (int i = 0; i < 100; ++i) CHECK(select_parent(scores, a) == select_parent(scores, b));
  }
}

TEST_CASE("crossover") {
  const auto a = parse_program("HEAD,TAKE,SORT,REVERSE", reg());
  const auto b = parse_program("MAXIMUM,DROP,SUM,ACCESS", reg());
  Rng rng(2);
  for (int i = 0; i < 20; ++i) CHECK(crossover(a, a, rng) == a);
  const auto a2 = parse_program("SORT,REVERSE", reg());
  const auto b2 = parse_program("MAP(*2),FILTER(>0)", reg());
  CHECK(crossover_at(a2, b2, 1) == parse_program("SORT,FILTER(>0)", reg()));
  CHECK(crossover_at(a, b, 3) == parse_program("HEAD,TAKE,SORT,ACCESS", reg()));

  // Points stay in [1, L-1]: the child always starts with a and ends with b.
  for (int i = 0; i < 200; ++i) {
    auto c = crossover(a, b, rng);
    CHECK(c[0] == a[0]);
    CHECK(c[3] == b[3]);
  }

  // With the caller's retry, 1000 children keep full effective length.
  GaConfig cfg;
  cfg.program_length = 4;
  auto pop = init_population(cfg, rng, reg());
  int accepted = 0;
  for (int i = 0; i < 1000; ++i) {
    for (int attempt = 0; attempt < kOffspringAttempts; ++attempt) {
      auto c = crossover(pop[uniform_index(rng, pop.size())], pop[uniform_index(rng, pop.size())], rng);
      if (effective_length(c, reg()) == 4) {
        ++accepted;
        break;
      }
    }
  }
  CHECK(accepted == 1000);
}

TEST_CASE("mutation") {
  Rng rng(21);
  const auto target = parse_program("FILTER(>0),MAP(*2),SORT,REVERSE", reg());
  const auto spec = spec_for(target, rng);
  OracleModel cf(target, Metric::CommonFunctions, reg().size());

  SUBCASE("two-token registry flips the only token") {
    const auto two = Registry::from_names(std::vector<std::string>{"SORT", "REVERSE"});
    const Spec s{{{Value(IntList{3, 1, 2}), Value(IntList{1, 2, 3})}}};
    const Program g{{0}};
    for (int i = 0; i < 10; ++i) CHECK(mutate(g, rng, UniformModel{}, nullptr, s, two) == Program{{1}});
  }
  SUBCASE("single point, full effective length") {
    GaConfig cfg;
    auto pop = init_population(cfg, rng, reg());
    for (const auto& g : pop) {
      auto m = mutate(g, rng, cf, nullptr, spec, reg());
      std::size_t diff = 0;
      for (std::size_t i = 0; i < g.size(); ++i) diff += g[i] != m[i];
      CHECK(diff <= 1);
      CHECK(effective_length(m, reg()) == 4);
    }
  }
  SUBCASE("model guidance beats a random mutant") {
    GaConfig cfg;
    auto pop = init_population(cfg, rng, reg());
    double guided = 0, blind = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto& g = pop[static_cast<std::size_t>(i) % pop.size()];
      const auto m = mutate(g, rng, cf, nullptr, spec, reg());
      guided += common_functions(m, target);
      Program r = g;
      for (;;) {
        r = g;
        const auto pos = uniform_index(rng, 4);
        r[pos] = static_cast<TokenId>(uniform_index(rng, reg().size()));
        if (r[pos] != g[pos] && effective_length(r, reg()) == 4) break;
      }
      blind += common_functions(r, target);
    }
    CHECK(guided >= blind);
  }
  SUBCASE("probability map steers replacements") {
    auto pmap = membership(target, reg().size());
    const Program g = parse_program("REVERSE,SORT,MAP(-1),MAP(*3)", reg());
    std::size_t hits = 0, total = 0;
    for (int i = 0; i < 200; ++i) {
      auto m = mutate(g, rng, UniformModel{}, &pmap, spec, reg());
      for (std::size_t p = 0; p < 4; ++p) {
        if (m[p] == g[p]) continue;
        ++total;
        hits += pmap[m[p]] > 0;
      }
    }
    CHECK(total > 0);
    CHECK(hits * 10 >= total * 9);
  }
}

TEST_CASE("saturation trigger") {
  CHECK(ns_trigger({{1, 1, 1, 1, 1, 1}}, 3));
  CHECK(ns_trigger({{2, 2, 2, 0, 0, 0}}, 3));
  CHECK_FALSE(ns_trigger({{1, 2, 3, 4, 5, 6}}, 3));
  CHECK_FALSE(ns_trigger({{1, 1, 1}}, 3));
  CHECK_FALSE(ns_trigger({}, 1));
}

TEST_CASE("neighborhood search") {
  Rng rng(31);
  SUBCASE("Hamming-1 targets are always found") {
    int found = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto [target, spec] = random_problem(4, rng);
      Program gene = target;
      const auto pos = uniform_index(rng, 4);
      do gene[pos] = static_cast<TokenId>(uniform_index(rng, reg().size()));
      while (gene[pos] == target[pos]);
      const std::vector<Program> top = {random_program(4, rng, reg()), gene};
      auto r = neighborhood_search(top, spec, NeighborhoodMode::Bfs, UniformModel{}, reg());
      found += r.found && satisfies(*r.found, spec, reg());
    }
    CHECK(found == 100);
  }
  SUBCASE("exhaustive candidate count without a hit") {
    // One input, two different outputs: nothing satisfies this.
    const Spec impossible{{{Value(IntList{1, 2}), Value(IntList{7})}, {Value(IntList{1, 2}), Value(IntList{9})}}};
    const std::vector<Program> top = {random_program(4, rng, reg()), random_program(4, rng, reg())};
    for (auto mode : {NeighborhoodMode::Bfs, NeighborhoodMode::Dfs}) {
      auto r = neighborhood_search(top, impossible, mode, UniformModel{}, reg());
      CHECK_FALSE(r.found);
      CHECK(r.candidates == 2 * 4 * 37);
    }
  }
  SUBCASE("the unmodified gene is not tested") {
    const auto target = parse_program("SORT", reg());
    const auto spec = spec_for(target, rng);
    auto r = neighborhood_search(std::vector<Program>{target}, spec, NeighborhoodMode::Bfs, UniformModel{}, reg());
    // Some other single token may still satisfy the spec, but never SORT itself.
    if (r.found) CHECK(*r.found != target);
  }
  SUBCASE("DFS follows the model") {
    const auto target = parse_program("FILTER(>0),MAP(*2),SORT,REVERSE", reg());
    const auto spec = spec_for(target, rng);
    OracleModel cf(target, Metric::CommonFunctions, reg().size());
    const Program gene = parse_program("HEAD,MAP(*2),SORT,REVERSE", reg());
    auto r = neighborhood_search(std::vector<Program>{gene}, spec, NeighborhoodMode::Dfs, cf, reg());
    REQUIRE(r.found);
    CHECK(satisfies(*r.found, spec, reg()));
  }
}

TEST_CASE("synthesis loop invariants") {
  Rng rng(41);
  const auto [target, spec] = random_problem(4, rng);
  OracleModel cf(target, Metric::CommonFunctions, reg().size());
  GaConfig cfg;
  cfg.program_length = 4;
  cfg.max_generations = 25;
  cfg.seed = 9;
  cfg.neighborhood_search = false;

  std::vector<ScoredPopulation> seen;
  auto report = synthesize_ga(spec, cfg, cf, reg(), [&](std::size_t gen, const ScoredPopulation& pop) {
    CHECK(gen == seen.size());
    seen.push_back(pop);
  });
  REQUIRE(!seen.empty());
  const std::size_t elites = 20;
  for (std::size_t j = 0; j < seen.size(); ++j) {
    const auto& pop = seen[j];
    CHECK(pop.genes.size() == cfg.population_size);
    CHECK(std::is_sorted(pop.scores.rbegin(), pop.scores.rend()));
    for (const auto& g : pop.genes) CHECK(effective_length(g, reg()) == 4);
    if (j == 0) continue;
    CHECK(pop.scores[0] >= seen[j - 1].scores[0]);
    std::map<Program, int> next;
    for (const auto& g : pop.genes) ++next[g];
    for (std::size_t e = 0; e < elites; ++e) CHECK(next[seen[j - 1].genes[e]]-- > 0);
  }
  if (report.found) CHECK(satisfies(*report.found, spec, reg()));
  CHECK(report.engine == "ga");
}

TEST_CASE("synthesis outcomes") {
  Rng rng(51);
  SUBCASE("planted target is found in generation 0") {
    const auto [target, spec] = random_problem(4, rng);
    GaConfig cfg;
    cfg.initial_genes = {target};
    auto r = synthesize_ga(spec, cfg, UniformModel{}, reg());
    REQUIRE(r.found);
    CHECK(satisfies(*r.found, spec, reg()));
    CHECK(r.generations == 0);
    CHECK(r.evaluations <= cfg.population_size);
    CHECK(r.stop_reason == "found");
  }
  SUBCASE("zero budget") {
    const auto [target, spec] = random_problem(3, rng);
    GaConfig cfg;
    cfg.program_length = 3;
    cfg.time_budget_s = 0;
    auto r = synthesize_ga(spec, cfg, UniformModel{}, reg());
    CHECK_FALSE(r.found);
    CHECK(r.generations == 0);
    CHECK(r.evaluations == 0);
  }
  SUBCASE("length-1 targets are usually hit by the initial population") {
    int gen0 = 0;
    for (int i = 0; i < 50; ++i) {
      const auto [target, spec] = random_problem(1, rng);
      GaConfig cfg;
      cfg.program_length = 1;
      cfg.seed = static_cast<std::uint64_t>(i);
      cfg.max_generations = 0;
      auto r = synthesize_ga(spec, cfg, UniformModel{}, reg());
      gen0 += r.found && r.generations == 0;
    }
    CHECK(gen0 >= 40);
  }
  SUBCASE("same seed, same report") {
    const auto [target, spec] = random_problem(3, rng);
    OracleModel cf(target, Metric::CommonFunctions, reg().size());
    GaConfig cfg;
    cfg.program_length = 3;
    cfg.seed = 77;
    cfg.max_generations = 40;
    auto a = synthesize_ga(spec, cfg, cf, reg());
    auto b = synthesize_ga(spec, cfg, cf, reg());
    CHECK(to_json(a, reg()) == to_json(b, reg()));
  }
  SUBCASE("model failures propagate") {
    class Broken final : public FitnessModel {
     public:
      double score(const Spec&, const Program&, std::span<const Trace>) const override {
        throw ModelUnavailable("gone");
      }
    };
    const auto [target, spec] = random_problem(3, rng);
    GaConfig cfg;
    cfg.program_length = 3;
    CHECK_THROWS_AS(synthesize_ga(spec, cfg, Broken{}, reg()), ModelUnavailable);
  }
}
