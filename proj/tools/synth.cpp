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


// synth: command-line front end for the synthesis engines, problem and
// training-data generation, and the benchmark harness.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "progsyn/bench.hpp"
#include "progsyn/training.hpp"

using namespace progsyn;

namespace {

struct Common {
  std::string registry_path;
  std::string report_path;
  bool timing = false;
  std::uint64_t seed = 0;
};

Registry load_registry(const std::string& path) { return path.empty() ? Registry::deepcoder() : Registry::load(path); }

// Opens `path` for writing, or returns stdout for "" and "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw std::runtime_error("cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return in;
}

void write_report(const SynthesisReport& report, const Registry& registry, const Common& common) {
  Output out(common.report_path);
  out.stream() << to_json(report, registry, common.timing).dump(2) << '\n';
}

void add_common(CLI::App* app, Common& c, bool report = true) {
  app->add_option("--registry", c.registry_path, "Token registry file (default: built-in roster)");
  app->add_option("--seed", c.seed, "Random seed");
  if (report) {
    app->add_option("--report", c.report_path, "Report file (default: stdout)");
    app->add_flag("--timing", c.timing, "Include wall time in the report");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Program synthesis from input-output examples"};
  app.require_subcommand(1);
  Common common;

  // ga
  auto* ga = app.add_subcommand("ga", "Genetic search with a pluggable fitness model");
  std::string ga_spec, ga_target, ga_fitness = "oracle-cf", ga_model_cmd, ga_ns = "bfs";
  GaConfig gcfg;
  std::optional<std::size_t> ga_max_gens;
  ga->add_option("--spec", ga_spec, "Spec file (JSON lines of {in, out})")->required();
  ga->add_option("--length", gcfg.program_length, "Program length")->required();
  ga->add_option("--pop", gcfg.population_size, "Population size")->capture_default_str();
  ga->add_option("--elite", gcfg.elite_fraction, "Elite fraction")->capture_default_str();
  ga->add_option("--crossover", gcfg.crossover_share, "Crossover share of non-elite slots")->capture_default_str();
  ga->add_option("--fitness", ga_fitness, "oracle-cf | oracle-lcs | oracle-fp | model | uniform")
      ->check(CLI::IsMember({"oracle-cf", "oracle-lcs", "oracle-fp", "model", "uniform"}))
      ->capture_default_str();
  ga->add_option("--model-cmd", ga_model_cmd, "Fitness model command (for --fitness model)");
  ga->add_option("--target", ga_target, "Target program literal (for oracle fitness)");
  ga->add_option("--budget-s", gcfg.time_budget_s, "Wall-clock budget in seconds")->capture_default_str();
  ga->add_option("--max-gens", ga_max_gens, "Generation cap");
  ga->add_option("--ns", ga_ns, "Neighborhood search: bfs | dfs | off")
      ->check(CLI::IsMember({"bfs", "dfs", "off"}))
      ->capture_default_str();
  add_common(ga, common);

  // cma
  auto* cma = app.add_subcommand("cma", "CMA-ES search over continuous encodings");
  std::string cma_spec, cma_scheme = "bin", cma_bin_mode = "equal", cma_restart = "ipop", cma_model_cmd;
  CmaConfig ccfg;
  std::optional<std::size_t> cma_max_evals;
  cma->add_option("--spec", cma_spec, "Spec file (JSON lines of {in, out})")->required();
  cma->add_option("--length", ccfg.program_length, "Program length")->required();
  cma->add_option("--scheme", cma_scheme, "single | multi | dyn-multi | bin | dyn-bin")
      ->check(CLI::IsMember({"single", "multi", "dyn-multi", "bin", "dyn-bin"}))
      ->capture_default_str();
  cma->add_option("--bin-mode", cma_bin_mode, "equal | prop")
      ->check(CLI::IsMember({"equal", "prop"}))
      ->capture_default_str();
  cma->add_option("--restart", cma_restart, "none | ipop | '+'-joined pb, mb, cb")->capture_default_str();
  cma->add_option("--model-cmd", cma_model_cmd, "Model supplying the probability map (for --bin-mode prop)");
  cma->add_option("--sigma0", ccfg.sigma0, "Initial step size")->capture_default_str();
  cma->add_option("--budget-s", ccfg.time_budget_s, "Wall-clock budget in seconds")->capture_default_str();
  cma->add_option("--max-evals", cma_max_evals, "Evaluation cap");
  add_common(cma, common);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate problems, training data or specs");
  gen->require_subcommand(1);
  std::size_t gen_n = 1, gen_length = 4, gen_examples = 5;
  std::string gen_out, gen_program;
  auto* gen_problems = gen->add_subcommand("problems", "Benchmark problems (JSON lines)");
  auto* gen_train = gen->add_subcommand("traindata", "Fitness-model training records (JSON lines)");
  auto* gen_spec = gen->add_subcommand("spec", "Spec for a given program (JSON lines of {in, out})");
  for (auto* sub : {gen_problems, gen_train}) {
    sub->add_option("--n", gen_n, "Number of records")->capture_default_str();
    sub->add_option("--length", gen_length, "Program length")->capture_default_str();
  }
  gen_spec->add_option("--program", gen_program, "Program literal")->required();
  for (auto* sub : {gen_problems, gen_train, gen_spec}) {
    sub->add_option("--examples", gen_examples, "Examples per program")->capture_default_str();
    sub->add_option("--out", gen_out, "Output file (default: stdout)");
    add_common(sub, common, false);
  }

  // bench
  auto* bench = app.add_subcommand("bench", "Run problems x engines and aggregate");
  std::string bench_problems, bench_engines, bench_out, bench_summary;
  BenchOptions bopts;
  bench->add_option("--problems", bench_problems, "Problem file")->required();
  bench->add_option("--engines", bench_engines, "Engine config file (JSON array)")->required();
  bench->add_option("--budget-s", bopts.budget_s, "Per-run budget in seconds")->capture_default_str();
  bench->add_option("--jobs", bopts.jobs, "Worker threads")->capture_default_str();
  bench->add_option("--out", bench_out, "Row output (JSON lines)")->required();
  bench->add_option("--summary", bench_summary, "Aggregate CSV (default: stdout)");
  add_common(bench, common, false);

  // registry
  auto* reg_cmd = app.add_subcommand("registry", "Print the token registry");
  reg_cmd->add_option("--registry", common.registry_path, "Token registry file (default: built-in roster)");

  // eval
  auto* eval = app.add_subcommand("eval", "Run a program on one input and print its trace");
  std::string eval_program, eval_input;
  eval->add_option("--program", eval_program, "Program literal")->required();
  eval->add_option("--input", eval_input, "Input value, e.g. [1,2,3] or 7")->required();
  eval->add_option("--registry", common.registry_path, "Token registry file (default: built-in roster)");

  CLI11_PARSE(app, argc, argv);

  try {
    const Registry registry = load_registry(common.registry_path);

    if (ga->parsed()) {
      auto in = open_input(ga_spec);
      const Spec spec = read_spec(in);
      std::optional<Program> target;
      if (!ga_target.empty()) target = parse_program(ga_target, registry);
      auto model = make_fitness_model(ga_fitness, target ? &*target : nullptr, ga_model_cmd, registry);
      gcfg = ga_config_from_json(json{{"ns", ga_ns}}, gcfg);
      if (ga_max_gens) gcfg.max_generations = *ga_max_gens;
      gcfg.seed = common.seed;
      write_report(synthesize_ga(spec, gcfg, *model, registry), registry, common);
    } else if (cma->parsed()) {
      auto in = open_input(cma_spec);
      const Spec spec = read_spec(in);
      ccfg.scheme = parse_scheme_kind(cma_scheme);
      ccfg.bin_mode = parse_bin_mode(cma_bin_mode);
      ccfg.restart = parse_restart_policy(cma_restart);
      if (cma_max_evals) ccfg.max_evaluations = *cma_max_evals;
      ccfg.seed = common.seed;
      std::optional<ProbabilityMap> pmap;
      if (ccfg.bin_mode == BinMode::Proportional) {
        std::unique_ptr<FitnessModel> model;
        if (!cma_model_cmd.empty()) model = std::make_unique<SidecarModel>(cma_model_cmd, registry);
        pmap = bin_pmap(model.get(), spec, ccfg.program_length, common.seed, registry);
      }
      write_report(synthesize_cma(spec, ccfg, registry, pmap ? &*pmap : nullptr), registry, common);
    } else if (gen->parsed()) {
      Rng rng(common.seed);
      Output out(gen_out);
      if (gen_problems->parsed()) {
        write_problems(out.stream(), generate_problems(gen_n, gen_length, gen_examples, rng, registry), registry);
      } else if (gen_train->parsed()) {
        TrainingConfig tc;
        tc.count = gen_n;
        tc.program_length = gen_length;
        tc.examples_per_program = gen_examples;
        write_training_data(out.stream(), generate_training_data(tc, rng, registry));
      } else {
        const Program p = parse_program(gen_program, registry);
        write_spec(out.stream(), make_spec(p, random_inputs(gen_examples, rng), registry));
      }
    } else if (bench->parsed()) {
      auto pin = open_input(bench_problems);
      const auto problems = read_problems(pin, registry);
      auto ein = open_input(bench_engines);
      const auto engines = read_engine_configs(ein);
      bopts.seed = common.seed;
      std::ofstream rows_out(bench_out);
      if (!rows_out) throw std::runtime_error("cannot write " + bench_out);
      const auto rows = run_benchmark(problems, engines, bopts, registry, [&](const BenchRow& row) {
        rows_out << to_json(row, registry).dump() << '\n' << std::flush;
      });
      Output summary(bench_summary);
      write_summary_csv(summary.stream(), aggregate(rows, problems, registry));
    } else if (reg_cmd->parsed()) {
      std::cout << registry.serialize();
    } else if (eval->parsed()) {
      const Program p = parse_program(eval_program, registry);
      const auto exec = evaluate(p, parse_value(eval_input, kListCap), registry);
      std::cout << "output: " << to_string(exec.output) << '\n';
      for (std::size_t i = 0; i < exec.trace.size(); ++i)
        std::cout << "  " << registry[p[i]].name << " -> " << to_string(exec.trace[i]) << '\n';
    }
  } catch (const ModelUnavailable& e) {
    std::cerr << "synth: model unavailable: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "synth: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
