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


// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset. Exit status is non-zero if any line fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <set>
#include <sstream>
#include <string>

#include <unistd.h>

#include "progsyn/bench.hpp"

using namespace progsyn;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const Registry& reg() {
  static const Registry r = Registry::deepcoder();
  return r;
}

// The default roster plus the literal-bound DROP(2) of the worked example.
const Registry& worked_reg() {
  static const Registry r = Registry::deepcoder().with_tokens(std::vector<std::string>{"DROP(2)"});
  return r;
}

const Value kExampleInput(IntList{-2, 10, 3, -4, 5, 2});

Outcome reference_program() {
  const auto out = run(parse_program("FILTER(>0),MAP(*2),SORT,REVERSE", reg()), kExampleInput, reg());
  return {out == Value(IntList{20, 10, 6, 4}), "output " + to_string(out)};
}

// Independent DP oracle for the longest common subsequence.
int lcs_subsequence_oracle(const Program& a, const Program& b) {
  std::vector<std::vector<int>> t(a.size() + 1, std::vector<int>(b.size() + 1));
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
  return t[a.size()][b.size()];
}

Outcome worked_fitness() {
  const auto target = parse_program("FILTER(>0),MAP(*2),SORT,REVERSE", worked_reg());
  const auto candidate = parse_program("FILTER(>0),MAP(*2),REVERSE,DROP(2)", worked_reg());
  const int cf = common_functions(candidate, target);
  const int substr = longest_common(candidate, target, LcsMode::Substring);
  const int subseq = longest_common(candidate, target, LcsMode::Subsequence);
  const int oracle = lcs_subsequence_oracle(candidate, target);
  return {cf == 3 && substr == 2 && subseq == 3 && oracle == 3,
          fmt("CF=%d LCS(substring)=%d LCS(subsequence)=%d (DP oracle %d)", cf, substr, subseq, oracle)};
}

Outcome worked_trace() {
  const auto p = parse_program("FILTER(>0),MAP(*2),REVERSE,DROP(2)", worked_reg());
  const auto trace = evaluate(p, kExampleInput, worked_reg()).trace;
  const Trace expected = {Value(IntList{10, 3, 5, 2}), Value(IntList{20, 6, 10, 4}), Value(IntList{4, 10, 6, 20}),
                          Value(IntList{6, 20})};
  std::string text;
  for (const auto& v : trace) text += (text.empty() ? "" : ",") + to_string(v);
  return {trace == expected, "trace [" + text + "]"};
}

Outcome dce_soundness() {
  const auto start = std::chrono::steady_clock::now();
  const Registry sub = Registry::from_names(std::vector<std::string>{
      "HEAD", "TAKE", "ACCESS", "MAXIMUM", "REVERSE", "SORT", "MAP(*2)", "FILTER(>0)", "ZIPWITH(-)", "SCANL1(+)"});
  Rng rng(4);
  const auto inputs = random_inputs(100, rng);
  std::size_t programs = 0, violations = 0;
  for (std::size_t len = 1; len <= 3; ++len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= sub.size();
    for (std::size_t code = 0; code < total; ++code) {
      Program p;
      for (std::size_t c = code, i = 0; i < len; ++i, c /= sub.size())
        p.tokens.push_back(static_cast<TokenId>(c % sub.size()));
      const Program d = eliminate_dead_code(p, sub);
      for (const auto& x : inputs) violations += run(d, x, sub) != run(p, x, sub);
      ++programs;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {violations == 0 && programs == 1110 && secs < 300,
          fmt("%zu programs x 100 inputs, %zu violations, %.2f s", programs, violations, secs)};
}

std::pair<Program, Spec> random_problem(std::size_t length, Rng& rng) {
  for (;;) {
    auto target = random_program(length, rng, reg());
    auto spec = make_spec(target, random_inputs(5, rng), reg());
    if (!has_constant_outputs(spec)) return {target, spec};
  }
}

Outcome ns_guarantee() {
  Rng rng(5);
  int found = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto [target, spec] = random_problem(4, rng);
    Program gene = target;
    const auto pos = uniform_index(rng, gene.size());
    do gene[pos] = static_cast<TokenId>(uniform_index(rng, reg().size()));
    while (gene[pos] == target[pos]);
    const std::vector<Program> top = {random_program(4, rng, reg()), gene, random_program(4, rng, reg())};
    const auto r = neighborhood_search(top, spec, NeighborhoodMode::Bfs, UniformModel{}, reg());
    found += r.found && satisfies(*r.found, spec, reg());
  }
  // One input mapped to two outputs: no program satisfies it, so every
  // neighbour is checked.
  const Spec impossible{{{Value(IntList{1, 2}), Value(IntList{7})}, {Value(IntList{1, 2}), Value(IntList{9})}}};
  bool counts_exact = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t len = 1; len <= 4; ++len) {
      std::vector<Program> top;
      for (std::size_t i = 0; i < n; ++i) top.push_back(random_program(len, rng, reg()));
      const auto r = neighborhood_search(top, impossible, NeighborhoodMode::Bfs, UniformModel{}, reg());
      counts_exact = counts_exact && !r.found && r.candidates == n * len * (reg().size() - 1);
    }
  }
  return {found == 100 && counts_exact,
          fmt("%d/100 Hamming-1 targets found; unsuccessful counts %s N*L*(|S|-1)", found,
              counts_exact ? "==" : "!=")};
}

Outcome ga_oracle_cf() {
  Rng rng(6);
  const auto problems = generate_problems(50, 3, 5, rng, reg());
  int solved = 0;
  double slowest = 0;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const auto& p = problems[i];
    OracleModel cf(p.target, Metric::CommonFunctions, reg().size());
    GaConfig cfg;
    cfg.program_length = 3;
    cfg.population_size = 100;
    cfg.time_budget_s = 60;
    cfg.seed = i;
    const auto r = synthesize_ga(p.spec, cfg, cf, reg());
    solved += r.found && satisfies(*r.found, p.spec, reg()) && r.wall_time_s <= 60 * 1.1;
    slowest = std::max(slowest, r.wall_time_s);
  }
  return {solved >= 45, fmt("%d/50 length-3 problems solved (need 45), slowest run %.1f s", solved, slowest)};
}

Outcome cma_core() {
  int sphere_ok = 0;
  long worst = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    auto s = cma_init<double>(10, rng);
    long evals = 0;
    bool ok = false;
    while (!ok && evals + s.lambda <= 5000) {
      const auto x = cma_ask(s, rng);
      std::vector<double> f(static_cast<std::size_t>(x.cols()));
      for (Eigen::Index j = 0; j < x.cols(); ++j) f[static_cast<std::size_t>(j)] = x.col(j).squaredNorm();
      evals += x.cols();
      cma_tell(s, x, f);
      ok = s.mean.squaredNorm() < 1e-8;
    }
    sphere_ok += ok;
    worst = std::max(worst, evals);
  }

  constexpr int kSamples = 100000;
  Rng rng(7);
  std::normal_distribution<double> nd;
  const std::size_t sigma = reg().size();
  double worst_equal = 0, worst_prop = 0;
  {
    const MappingScheme bin(SchemeKind::Bin, 1, sigma);
    std::vector<int> counts(sigma);
    for (int i = 0; i < kSamples; ++i) {
      const double x = nd(rng);
      ++counts[bin.decode(std::span(&x, 1))[0]];
    }
    for (int c : counts) worst_equal = std::max(worst_equal, std::abs(c / double(kSamples) - 1.0 / double(sigma)));
  }
  {
    Rng prng(8);
    const auto pmap = empirical_pmap(reg(), 3, prng);
    double total = 0;
    for (double v : pmap) total += v;
    const MappingScheme bin(SchemeKind::Bin, 1, sigma, BinMode::Proportional, &pmap);
    std::vector<int> counts(sigma);
    for (int i = 0; i < kSamples; ++i) {
      const double x = nd(rng);
      ++counts[bin.decode(std::span(&x, 1))[0]];
    }
    for (std::size_t k = 0; k < sigma; ++k)
      worst_prop = std::max(worst_prop, std::abs(counts[k] / double(kSamples) - pmap[k] / total));
  }
  return {sphere_ok == 10 && worst_equal < 0.02 && worst_prop < 0.02,
          fmt("sphere %d/10 (max %ld evals); bin histogram max deviation equal %.4f, pmap %.4f", sphere_ok, worst,
              worst_equal, worst_prop)};
}

Outcome genesys_bin_ipop() {
  Rng rng(9);
  const auto problems = generate_problems(50, 2, 5, rng, reg());
  int solved = 0, unverified = 0;
  double slowest = 0;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const auto& p = problems[i];
    CmaConfig cfg;
    cfg.scheme = SchemeKind::Bin;
    cfg.restart = RestartPolicy::ipop();
    cfg.program_length = 2;
    cfg.time_budget_s = 120;
    cfg.seed = i;
    const auto r = synthesize_cma(p.spec, cfg, reg());
    slowest = std::max(slowest, r.wall_time_s);
    if (!r.found) continue;
    // A solution must reproduce every example output.
    if (equivalent(*r.found, p.target, p.spec, reg()))
      ++solved;
    else
      ++unverified;
  }
  return {solved >= 40 && unverified == 0,
          fmt("%d/50 length-2 problems solved (need 40), %d failed re-verification, slowest run %.1f s", solved,
              unverified, slowest)};
}

Outcome restart_semantics() {
  Rng rng(10);
  auto base = cma_init<double>(4, rng);
  for (int g = 0; g < 5; ++g) {
    const auto x = cma_ask(base, rng);
    std::vector<double> f(static_cast<std::size_t>(x.cols()));
    for (Eigen::Index j = 0; j < x.cols(); ++j) f[static_cast<std::size_t>(j)] = x.col(j).squaredNorm() + 3 * x(1, j);
    cma_tell(base, x, f);
  }
  const auto identity = Eigen::MatrixXd::Identity(4, 4);
  auto pb = base;
  apply_restart(pb, RestartPolicy{true, false, false}, rng);
  const bool pb_ok = pb.lambda == 2 * base.lambda && pb.mean == base.mean && pb.cov == base.cov;
  auto cb = base;
  apply_restart(cb, RestartPolicy{false, false, true}, rng);
  const bool cb_ok = base.cov != identity && cb.cov == identity && cb.lambda == base.lambda;
  int mb_changed = 0;
  for (int i = 0; i < 1000; ++i) {
    auto mb = base;
    apply_restart(mb, RestartPolicy{false, true, false}, rng);
    mb_changed += mb.mean != base.mean && mb.cov == base.cov && mb.lambda == base.lambda;
  }
  auto ipop = base;
  apply_restart(ipop, RestartPolicy::ipop(), rng);
  const bool ipop_ok = ipop.lambda == 2 * base.lambda && ipop.mean != base.mean && ipop.cov == identity;
  return {pb_ok && cb_ok && mb_changed == 1000 && ipop_ok,
          fmt("PB doubles lambda: %s; CB gives C == I: %s; MB new mean %d/1000; IPOP all three: %s",
              pb_ok ? "yes" : "no", cb_ok ? "yes" : "no", mb_changed, ipop_ok ? "yes" : "no")};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome cli_reproducibility() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / fmt("progsyn-acceptance-%d", static_cast<int>(::getpid()));
  fs::create_directories(dir);
  const std::string synth = PROGSYN_SYNTH;
  auto sh = [&](const std::string& args) {
    return std::system((synth + " " + args + " 2>/dev/null").c_str()) == 0;
  };
  const std::string d = dir.string() + "/";
  bool ok = sh("gen spec --program 'FILTER(>0),MAP(*2),SORT' --seed 3 --out " + d + "spec.jsonl");
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"ga", "ga --spec " + d + "spec.jsonl --length 3 --target 'FILTER(>0),MAP(*2),SORT' --seed 11 --budget-s 60"},
      {"ga-capped", "ga --spec " + d + "spec.jsonl --length 3 --fitness uniform --seed 12 --max-gens 30"},
      {"cma", "cma --spec " + d + "spec.jsonl --length 3 --scheme bin --restart ipop --seed 13 --budget-s 60"},
      {"cma-capped", "cma --spec " + d + "spec.jsonl --length 3 --scheme dyn-multi --seed 14 --max-evals 3000"},
      {"problems", "gen problems --n 5 --length 3 --seed 15"},
      {"traindata", "gen traindata --n 5 --length 3 --seed 16"},
  };
  int identical = 0;
  for (const auto& [name, args] : runs) {
    const bool report = name.rfind("ga", 0) == 0 || name.rfind("cma", 0) == 0;
    const std::string a = d + name + ".a", b = d + name + ".b";
    const std::string flag = report ? " --report " : " --out ";
    ok = sh(args + flag + a) && ok;
    ok = sh(args + flag + b) && ok;
    const auto sa = slurp(a);
    identical += !sa.empty() && sa == slurp(b);
  }
  fs::remove_all(dir);
  return {ok && identical == static_cast<int>(runs.size()),
          fmt("%d/%zu commands byte-identical across repeated same-seed runs", identical, runs.size())};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"reference program output", reference_program},
      {"worked fitness example", worked_fitness},
      {"worked execution trace", worked_trace},
      {"dead-code elimination soundness", dce_soundness},
      {"neighborhood search guarantee", ns_guarantee},
      {"GA with oracle CF fitness", ga_oracle_cf},
      {"CMA-ES core and decode histograms", cma_core},
      {"CMA synthesis with BIN mapping and IPOP", genesys_bin_ipop},
      {"restart semantics", restart_semantics},
      {"CLI reproducibility", cli_reproducibility},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(number)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", number, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
