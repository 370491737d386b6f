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


#include "progsyn/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace progsyn {

std::vector<Problem> generate_problems(std::size_t n, std::size_t length, std::size_t examples, Rng& rng,
                                       const Registry& registry, const InputBounds& bounds) {
  if (n == 0 || length == 0 || examples == 0) throw std::invalid_argument("n, length and examples must be >= 1");
  std::vector<Problem> out;
  out.reserve(n);
  const int width = static_cast<int>(std::to_string(n - 1).size());
  for (std::size_t i = 0; i < n; ++i) {
    Problem p;
    char id[32];
    std::snprintf(id, sizeof id, "p%0*zu", width, i);
    p.id = id;
    p.length = length;
    bool ok = false;
    for (int attempt = 0; attempt < kProblemAttempts && !ok; ++attempt) {
      p.target = random_program(length, rng, registry);
      p.spec = make_spec(p.target, random_inputs(examples, rng, bounds), registry);
      ok = !has_constant_outputs(p.spec);
    }
    if (!ok) throw GenerationError("no distinguishing spec after " + std::to_string(kProblemAttempts) + " attempts");
    out.push_back(std::move(p));
  }
  return out;
}

json to_json(const Problem& problem, const Registry& registry) {
  return {{"id", problem.id},
          {"length", problem.length},
          {"target", ids_to_json(problem.target)},
          {"target_text", to_string(problem.target, registry)},
          {"io", io_to_json(problem.spec)}};
}

Problem problem_from_json(const json& j, const Registry& registry) {
  Problem p;
  p.id = j.at("id").get<std::string>();
  p.target = program_from_ids(j.at("target"), registry);
  p.spec = spec_from_io_json(j.at("io"));
  p.length = j.value("length", p.target.size());
  validate_spec(p.spec);
  return p;
}

std::vector<Problem> read_problems(std::istream& in, const Registry& registry) {
  std::vector<Problem> out;
  for (const auto& j : read_json_lines(in)) out.push_back(problem_from_json(j, registry));
  return out;
}

void write_problems(std::ostream& out, const std::vector<Problem>& problems, const Registry& registry) {
  for (const auto& p : problems) out << to_json(p, registry).dump() << '\n';
}

EngineConfig engine_config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("engine config must be a JSON object");
  EngineConfig e;
  e.engine = j.at("engine").get<std::string>();
  if (e.engine != "ga" && e.engine != "cma" && e.engine != "planted")
    throw std::invalid_argument("unknown engine '" + e.engine + "'");
  e.id = j.value("id", e.engine);
  e.params = j;
  e.params.erase("id");
  e.params.erase("engine");
  return e;
}

std::vector<EngineConfig> read_engine_configs(std::istream& in) {
  const json j = json::parse(in);
  if (!j.is_array()) throw std::invalid_argument("engine config file must hold a JSON array");
  std::vector<EngineConfig> out;
  for (const auto& e : j) out.push_back(engine_config_from_json(e));
  return out;
}

std::unique_ptr<FitnessModel> make_fitness_model(const std::string& kind, const Program* target,
                                                 const std::string& model_cmd, const Registry& registry) {
  auto oracle = [&](Metric m) -> std::unique_ptr<FitnessModel> {
    if (!target) throw std::invalid_argument("fitness '" + kind + "' needs the target program");
    return std::make_unique<OracleModel>(*target, m, registry.size());
  };
  if (kind == "oracle-cf") return oracle(Metric::CommonFunctions);
  if (kind == "oracle-lcs") return oracle(Metric::LongestCommon);
  if (kind == "oracle-fp") return oracle(Metric::FunctionProbability);
  if (kind == "uniform") return std::make_unique<UniformModel>();
  if (kind == "model") {
    if (model_cmd.empty()) throw std::invalid_argument("fitness 'model' needs a model command");
    return std::make_unique<SidecarModel>(model_cmd, registry);
  }
  throw std::invalid_argument("unknown fitness '" + kind + "'");
}

GaConfig ga_config_from_json(const json& params, GaConfig base) {
  base.population_size = params.value("pop", base.population_size);
  base.elite_fraction = params.value("elite", base.elite_fraction);
  base.crossover_share = params.value("crossover", base.crossover_share);
  base.top_n = params.value("top_n", base.top_n);
  base.window = params.value("window", base.window);
  base.max_generations = params.value("max_gens", base.max_generations);
  const auto ns = params.value("ns", std::string(base.neighborhood_search
                                                     ? (base.ns_mode == NeighborhoodMode::Bfs ? "bfs" : "dfs")
                                                     : "off"));
  if (ns == "off") {
    base.neighborhood_search = false;
  } else if (ns == "bfs" || ns == "dfs") {
    base.neighborhood_search = true;
    base.ns_mode = ns == "bfs" ? NeighborhoodMode::Bfs : NeighborhoodMode::Dfs;
  } else {
    throw std::invalid_argument("ns must be bfs, dfs or off");
  }
  return base;
}

CmaConfig cma_config_from_json(const json& params, CmaConfig base) {
  if (params.contains("scheme")) base.scheme = parse_scheme_kind(params.at("scheme").get<std::string>());
  if (params.contains("bin_mode")) base.bin_mode = parse_bin_mode(params.at("bin_mode").get<std::string>());
  if (params.contains("restart")) base.restart = parse_restart_policy(params.at("restart").get<std::string>());
  base.sigma0 = params.value("sigma0", base.sigma0);
  base.max_evaluations = params.value("max_evals", base.max_evaluations);
  return base;
}

ProbabilityMap bin_pmap(const FitnessModel* model, const Spec& spec, std::size_t length, std::uint64_t seed,
                        const Registry& registry) {
  if (model) {
    if (auto p = model->pmap(spec)) return *p;
  }
  Rng rng(derive_seed("bin-pmap", seed));
  return empirical_pmap(registry, length, rng);
}

SynthesisReport run_engine(const Problem& problem, const EngineConfig& engine, double budget_s, std::uint64_t seed,
                           const Registry& registry) {
  const auto model_cmd = engine.params.value("model_cmd", std::string());
  if (engine.engine == "planted") {
    const Deadline deadline(budget_s);
    SynthesisReport r;
    r.engine = "planted";
    r.seed = seed;
    if (deadline.expired()) {
      r.stop_reason = "budget";
    } else {
      r.found = eliminate_dead_code(problem.target, registry);
      r.stop_reason = "found";
    }
    r.wall_time_s = deadline.elapsed();
    return r;
  }
  if (engine.engine == "ga") {
    auto model = make_fitness_model(engine.params.value("fitness", std::string("oracle-cf")), &problem.target,
                                    model_cmd, registry);
    auto cfg = ga_config_from_json(engine.params);
    cfg.program_length = problem.length;
    cfg.time_budget_s = budget_s;
    cfg.seed = seed;
    return synthesize_ga(problem.spec, cfg, *model, registry);
  }
  if (engine.engine == "cma") {
    auto cfg = cma_config_from_json(engine.params);
    cfg.program_length = problem.length;
    cfg.time_budget_s = budget_s;
    cfg.seed = seed;
    std::optional<ProbabilityMap> pmap;
    if (cfg.bin_mode == BinMode::Proportional) {
      std::unique_ptr<FitnessModel> model;
      if (!model_cmd.empty()) model = std::make_unique<SidecarModel>(model_cmd, registry);
      pmap = bin_pmap(model.get(), problem.spec, problem.length, seed, registry);
    }
    return synthesize_cma(problem.spec, cfg, registry, pmap ? &*pmap : nullptr);
  }
  throw std::invalid_argument("unknown engine '" + engine.engine + "'");
}

json to_json(const BenchRow& row, const Registry& registry) {
  return {{"problem", row.problem},
          {"engine", row.engine},
          {"params", row.params},
          {"found", row.found},
          {"program", row.program ? json(to_string(*row.program, registry)) : json(nullptr)},
          {"program_ids", row.program ? ids_to_json(*row.program) : json(nullptr)},
          {"evaluations", row.evaluations},
          {"generations", row.generations},
          {"restarts", row.restarts},
          {"wall_time_s", row.wall_time_s},
          {"seed", row.seed},
          {"error", row.error.empty() ? json(nullptr) : json(row.error)}};
}

BenchRow bench_row_from_json(const json& j, const Registry& registry) {
  BenchRow r;
  r.problem = j.at("problem").get<std::string>();
  r.engine = j.at("engine").get<std::string>();
  r.params = j.value("params", json::object());
  r.found = j.at("found").get<bool>();
  if (!j.at("program_ids").is_null()) r.program = program_from_ids(j.at("program_ids"), registry);
  r.evaluations = j.value("evaluations", std::size_t{0});
  r.generations = j.value("generations", std::size_t{0});
  r.restarts = j.value("restarts", std::size_t{0});
  r.wall_time_s = j.value("wall_time_s", 0.0);
  r.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("error") && !j.at("error").is_null()) r.error = j.at("error").get<std::string>();
  return r;
}

std::uint64_t run_seed(const std::string& problem, const std::string& engine, std::uint64_t global_seed) {
  return derive_seed(problem + '\x1f' + engine, global_seed);
}

std::vector<BenchRow> run_benchmark(const std::vector<Problem>& problems, const std::vector<EngineConfig>& engines,
                                    const BenchOptions& options, const Registry& registry,
                                    const std::function<void(const BenchRow&)>& on_row) {
  if (problems.empty() || engines.empty()) throw std::invalid_argument("no problems or no engines");
  const std::size_t total = problems.size() * engines.size();
  std::vector<BenchRow> rows(total);
  std::atomic<std::size_t> next{0};
  std::mutex out_mutex;

  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < total;) {
      const auto& problem = problems[k / engines.size()];
      const auto& engine = engines[k % engines.size()];
      BenchRow row;
      row.problem = problem.id;
      row.engine = engine.id;
      row.params = engine.params;
      row.seed = run_seed(problem.id, engine.id, options.seed);
      const Deadline clock(0);
      try {
        const auto r = run_engine(problem, engine, options.budget_s, row.seed, registry);
        row.evaluations = r.evaluations;
        row.generations = r.generations;
        row.restarts = r.restarts;
        row.wall_time_s = r.wall_time_s;
        if (r.found) {
          if (satisfies(*r.found, problem.spec, registry)) {
            row.found = true;
            row.program = r.found;
          } else {
            row.error = "reported program failed re-verification";
          }
        }
      } catch (const std::exception& e) {
        row.error = e.what();
        row.wall_time_s = clock.elapsed();
      }
      std::lock_guard lock(out_mutex);
      if (on_row) on_row(row);
      rows[k] = std::move(row);
    }
  };
  const std::size_t width = std::max<std::size_t>(1, std::min(options.jobs, total));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < width; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

std::vector<EngineSummary> aggregate(const std::vector<BenchRow>& rows, const std::vector<Problem>& problems,
                                     const Registry& registry) {
  std::map<std::string, const Problem*> by_id;
  for (const auto& p : problems) by_id[p.id] = &p;
  std::vector<EngineSummary> out;
  std::map<std::string, std::vector<double>> times;
  for (const auto& row : rows) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& s) { return s.engine == row.engine; });
    if (it == out.end()) {
      out.push_back({row.engine});
      it = out.end() - 1;
    }
    ++it->runs;
    it->mean_evals += static_cast<double>(row.evaluations);
    times[row.engine].push_back(row.wall_time_s);
    if (!row.found || !row.program) continue;
    const auto p = by_id.find(row.problem);
    if (p == by_id.end()) throw std::invalid_argument("row refers to unknown problem '" + row.problem + "'");
    if (satisfies(*row.program, p->second->spec, registry)) ++it->solved;
  }
  for (auto& s : out) {
    s.rate = static_cast<double>(s.solved) / static_cast<double>(s.runs);
    s.mean_evals /= static_cast<double>(s.runs);
    auto& t = times[s.engine];
    std::sort(t.begin(), t.end());
    const std::size_t m = t.size() / 2;
    s.median_s = t.size() % 2 ? t[m] : (t[m - 1] + t[m]) / 2;
  }
  return out;
}

void write_summary_csv(std::ostream& out, const std::vector<EngineSummary>& summary) {
  out << "engine,rate,median_s,mean_evals\n";
  for (const auto& s : summary) {
    char line[256];
    std::snprintf(line, sizeof line, ",%.4f,%.6f,%.1f\n", s.rate, s.median_s, s.mean_evals);
    out << s.engine << line;
  }
}

}  // namespace progsyn
