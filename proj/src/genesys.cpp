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


#include "progsyn/genesys.hpp"

#include <cmath>

#include "progsyn/numeric.hpp"

namespace progsyn {

double output_distance(const Value& actual, const Value& expected) {
  if (actual.type() != expected.type()) return kTypeMismatchPenalty;
  if (actual.is_int()) {
    const double d = std::abs(static_cast<double>(actual.as_int()) - static_cast<double>(expected.as_int()));
    return std::min(d, kIntErrorCap);
  }
  return static_cast<double>(edit_distance(actual.as_list(), expected.as_list()));
}

double program_error(const Program& p, const Spec& spec, const Registry& registry) {
  double total = 0;
  for (const auto& ex : spec.examples) total += output_distance(run(p, ex.input, registry), ex.output);
  return total;
}

SynthesisReport synthesize_cma(const Spec& spec, const CmaConfig& config, const Registry& registry,
                               const ProbabilityMap* pmap) {
  validate_spec(spec);
  if (!(config.sigma0 > 0)) throw std::invalid_argument("initial step size must be positive");
  const MappingScheme scheme(config.scheme, config.program_length, registry.size(), config.bin_mode, pmap);
  const Deadline deadline(config.time_budget_s);

  SynthesisReport report;
  report.engine = "cma";
  report.seed = config.seed;
  auto finish = [&](std::string reason) {
    report.stop_reason = std::move(reason);
    report.wall_time_s = deadline.elapsed();
    return report;
  };

  Rng rng(config.seed);
  auto state = cma_init<double>(static_cast<Eigen::Index>(scheme.dimension()), rng, config.sigma0);
  std::vector<double> errors;
  for (;;) {
    if (deadline.expired()) return finish("budget");
    const auto samples = cma_ask(state, rng);
    errors.assign(static_cast<std::size_t>(samples.cols()), 0.0);
    for (Eigen::Index j = 0; j < samples.cols(); ++j) {
      if (report.evaluations >= config.max_evaluations) return finish("evaluations");
      const auto p = scheme.decode(std::span<const double>(samples.col(j).data(), scheme.dimension()));
      ++report.evaluations;
      errors[static_cast<std::size_t>(j)] = program_error(p, spec, registry);
      if (errors[static_cast<std::size_t>(j)] == 0) {
        report.found = eliminate_dead_code(p, registry);
        return finish("found");
      }
    }
    cma_tell(state, samples, errors);
    ++report.generations;
    if (detect_stall(state)) {
      apply_restart(state, config.restart, rng);
      ++report.restarts;
    }
  }
}

}  // namespace progsyn
