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


// Benchmark problems, engine construction from JSON parameters, and the
// experiment harness that runs problems x engines on a worker pool.

#ifndef PROGSYN_BENCH_HPP
#define PROGSYN_BENCH_HPP

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "progsyn/ga.hpp"
#include "progsyn/generator.hpp"
#include "progsyn/genesys.hpp"

namespace progsyn {

struct Problem {
  std::string id;
  Program target;  // hidden from engines except oracle fitness
  Spec spec;
  std::size_t length = 0;
  friend bool operator==(const Problem&, const Problem&) = default;
};

inline constexpr int kProblemAttempts = 1000;

/// `n` problems whose targets have effective length `length` and whose
/// `examples` outputs are not all identical.
std::vector<Problem> generate_problems(std::size_t n, std::size_t length, std::size_t examples, Rng& rng,
                                       const Registry& registry, const InputBounds& bounds = {});

json to_json(const Problem& problem, const Registry& registry);
Problem problem_from_json(const json& j, const Registry& registry);
std::vector<Problem> read_problems(std::istream& in, const Registry& registry);
void write_problems(std::ostream& out, const std::vector<Problem>& problems, const Registry& registry);

/// One engine configuration: {"id": ..., "engine": "ga" | "cma" | "planted", ...}.
/// GA keys: fitness, model_cmd, pop, elite, crossover, top_n, window, ns,
/// max_gens. CMA keys: scheme, bin_mode, restart, sigma0, max_evals, model_cmd.
struct EngineConfig {
  std::string id;
  std::string engine;
  json params;
};

EngineConfig engine_config_from_json(const json& j);
std::vector<EngineConfig> read_engine_configs(std::istream& in);

/// "oracle-cf", "oracle-lcs", "oracle-fp", "uniform" or "model". Oracles need
/// `target`; "model" needs `model_cmd`.
std::unique_ptr<FitnessModel> make_fitness_model(const std::string& kind, const Program* target,
                                                 const std::string& model_cmd, const Registry& registry);

/// GA settings from engine parameters, on top of `base`.
GaConfig ga_config_from_json(const json& params, GaConfig base = {});
/// CMA settings from engine parameters, on top of `base`.
CmaConfig cma_config_from_json(const json& params, CmaConfig base = {});

/// Probability map for proportional bins: the model's when it has one,
/// otherwise token frequencies over random programs of `length`.
ProbabilityMap bin_pmap(const FitnessModel* model, const Spec& spec, std::size_t length, std::uint64_t seed,
                        const Registry& registry);

/// Runs one engine on one problem.
SynthesisReport run_engine(const Problem& problem, const EngineConfig& engine, double budget_s, std::uint64_t seed,
                           const Registry& registry);

struct BenchRow {
  std::string problem;
  std::string engine;
  json params;
  bool found = false;
  std::optional<Program> program;
  std::size_t evaluations = 0;
  std::size_t generations = 0;
  std::size_t restarts = 0;
  double wall_time_s = 0;
  std::uint64_t seed = 0;
  std::string error;
};

json to_json(const BenchRow& row, const Registry& registry);
BenchRow bench_row_from_json(const json& j, const Registry& registry);

/// Per-run seed from the problem id, the engine id and the global seed.
std::uint64_t run_seed(const std::string& problem, const std::string& engine, std::uint64_t global_seed);

struct BenchOptions {
  double budget_s = 60;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
};

/// Cartesian product problems x engines on `jobs` workers. `on_row` is
/// called (serialised) as each run finishes; a failing run becomes a
/// found=false row carrying the error message. Found programs are
/// re-verified against the spec before they are reported.
std::vector<BenchRow> run_benchmark(const std::vector<Problem>& problems, const std::vector<EngineConfig>& engines,
                                    const BenchOptions& options, const Registry& registry,
                                    const std::function<void(const BenchRow&)>& on_row = {});

struct EngineSummary {
  std::string engine;
  std::size_t runs = 0;
  std::size_t solved = 0;
  double rate = 0;
  double median_s = 0;  // over all runs of the engine
  double mean_evals = 0;
};

/// Aggregates per engine (first-seen order). A found row counts as solved
/// only if its program satisfies its problem's spec.
std::vector<EngineSummary> aggregate(const std::vector<BenchRow>& rows, const std::vector<Problem>& problems,
                                     const Registry& registry);
/// CSV with header `engine,rate,median_s,mean_evals`.
void write_summary_csv(std::ostream& out, const std::vector<EngineSummary>& summary);

}  // namespace progsyn

#endif  // PROGSYN_BENCH_HPP
