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

#include <set>
#include <sstream>

#include "progsyn/bench.hpp"

using namespace progsyn;

namespace {

const Registry& reg() {
  static const Registry r = Registry::deepcoder();
  return r;
}

std::vector<EngineConfig> engines(const char* text) {
  std::istringstream in(text);
  return read_engine_configs(in);
}

std::vector<json> stripped(std::vector<BenchRow> rows) {
  std::vector<json> out;
  for (auto& r : rows) {
    r.wall_time_s = 0;
    out.push_back(to_json(r, reg()));
  }
  std::sort(out.begin(), out.end(), [](const json& a, const json& b) { return a.dump() < b.dump(); });
  return out;
}

}  // namespace

TEST_CASE("problem generation") {
  Rng a(1), b(1);
  CHECK(generate_problems(1, 3, 5, a, reg()) == generate_problems(1, 3, 5, b, reg()));

  Rng rng(2);
  const auto problems = generate_problems(100, 4, 5, rng, reg());
  std::set<std::string> ids;
  for (const auto& p : problems) {
    ids.insert(p.id);
    CHECK(effective_length(p.target, reg()) == 4);
    CHECK(p.spec.size() == 5);
    CHECK(program_error(p.target, p.spec, reg()) == 0);
    CHECK_FALSE(has_constant_outputs(p.spec));
  }
  CHECK(ids.size() == 100);
  CHECK_THROWS_AS(generate_problems(0, 4, 5, rng, reg()), std::invalid_argument);

  std::stringstream io;
  write_problems(io, problems, reg());
  CHECK(read_problems(io, reg()) == problems);
}

TEST_CASE("engine configs") {
  const auto e = engines(R"([{"id": "ga-cf", "engine": "ga", "fitness": "oracle-cf", "pop": 50, "ns": "dfs"},
                             {"engine": "cma", "scheme": "dyn-bin", "restart": "pb+cb"}])");
  REQUIRE(e.size() == 2);
  CHECK(e[0].id == "ga-cf");
  CHECK(e[1].id == "cma");
  const auto ga = ga_config_from_json(e[0].params);
  CHECK(ga.population_size == 50);
  CHECK(ga.ns_mode == NeighborhoodMode::Dfs);
  const auto cma = cma_config_from_json(e[1].params);
  CHECK(cma.scheme == SchemeKind::DynBin);
  CHECK(cma.restart == RestartPolicy{true, false, true});
  CHECK_THROWS_AS(engines(R"([{"engine": "sa"}])"), std::invalid_argument);
  CHECK_THROWS_AS(engines(R"({"engine": "ga"})"), std::invalid_argument);
  CHECK_THROWS_AS(make_fitness_model("oracle-cf", nullptr, "", reg()), std::invalid_argument);
  CHECK_THROWS_AS(make_fitness_model("model", nullptr, "", reg()), std::invalid_argument);
}

TEST_CASE("harness") {
  Rng rng(3);
  const auto problems = generate_problems(6, 2, 5, rng, reg());
  const auto planted = engines(R"([{"id": "planted", "engine": "planted"}])");

  SUBCASE("planted engine solves everything") {
    std::size_t streamed = 0;
    const auto rows = run_benchmark(problems, planted, {5, 2, 0}, reg(), [&](const BenchRow&) { ++streamed; });
    CHECK(streamed == rows.size());
    for (const auto& r : rows) CHECK(r.found);
    const auto summary = aggregate(rows, problems, reg());
    REQUIRE(summary.size() == 1);
    CHECK(summary[0].rate == 1.0);
  }
  SUBCASE("zero budget finds nothing") {
    const auto all = engines(R"([{"engine": "planted"}, {"engine": "ga"}, {"engine": "cma"}])");
    for (const auto& r : run_benchmark(problems, all, {0, 1, 0}, reg())) CHECK_FALSE(r.found);
  }
  SUBCASE("same global seed, same rows") {
    const auto e = engines(R"([{"id": "ga", "engine": "ga", "max_gens": 20},
                               {"id": "cma", "engine": "cma", "max_evals": 2000}])");
    const auto a = run_benchmark(problems, e, {30, 2, 11}, reg());
    const auto b = run_benchmark(problems, e, {30, 1, 11}, reg());
    CHECK(stripped(a) == stripped(b));
    CHECK(run_seed("p0", "ga", 11) != run_seed("p0", "cma", 11));
    CHECK(run_seed("p0", "ga", 11) != run_seed("p1", "ga", 11));
  }
  SUBCASE("run failures become rows") {
    const auto e = engines(R"([{"id": "bad", "engine": "ga", "fitness": "model", "model_cmd": "exit 3"}])");
    const auto rows = run_benchmark(problems, e, {5, 1, 0}, reg());
    for (const auto& r : rows) {
      CHECK_FALSE(r.found);
      CHECK_FALSE(r.error.empty());
    }
  }
  SUBCASE("aggregation re-verifies programs") {
    auto rows = run_benchmark(problems, planted, {5, 1, 0}, reg());
    // Swap in a program of the other output type, which cannot satisfy the spec.
    const bool list_out = problems[0].spec.examples[0].output.is_list();
    rows[0].program = parse_program(list_out ? "SUM" : "SORT", reg());
    REQUIRE_FALSE(satisfies(*rows[0].program, problems[0].spec, reg()));
    const auto summary = aggregate(rows, problems, reg());
    CHECK(summary[0].solved == rows.size() - 1);
  }
  SUBCASE("csv and row round trip") {
    const auto rows = run_benchmark(problems, planted, {5, 1, 0}, reg());
    for (const auto& r : rows) {
      const auto back = bench_row_from_json(to_json(r, reg()), reg());
      CHECK(to_json(back, reg()) == to_json(r, reg()));
    }
    std::ostringstream csv;
    write_summary_csv(csv, aggregate(rows, problems, reg()));
    CHECK(csv.str().rfind("engine,rate,median_s,mean_evals\nplanted,1.0000,", 0) == 0);
  }
}
