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

#ifndef PROGSYN_FITNESS_MODEL_HPP
#define PROGSYN_FITNESS_MODEL_HPP

#include <cstdio>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "progsyn/fitness.hpp"

namespace progsyn {

/// The traces of one candidate, one per spec example.
using CandidateTraces = std::vector<Trace>;

CandidateTraces collect_traces(const Program& candidate, const Spec& spec, const Registry& registry);

/// True when the final statement of every trace matches its example output.
bool traces_satisfy(const CandidateTraces& traces, const Spec& spec);

/// Ranks candidates given the spec and their execution traces. Higher is
/// fitter. Implementations are deterministic for a fixed model state.
class FitnessModel {
 public:
  virtual ~FitnessModel() = default;

  virtual double score(const Spec& spec, const Program& candidate, std::span<const Trace> traces) const = 0;

  /// Scores many candidates at once; `traces[i]` belongs to `candidates[i]`.
  virtual std::vector<double> score_batch(const Spec& spec, std::span<const Program> candidates,
                                          std::span<const CandidateTraces> traces) const;

  /// Per-token membership probabilities for the spec's target, if the model
  /// provides them.
  virtual std::optional<ProbabilityMap> pmap(const Spec& /*spec*/) const { return std::nullopt; }

  virtual ScoreKind kind() const { return ScoreKind::Model; }
};

/// Exact metric against a known target (benchmark and training use only).
class OracleModel final : public FitnessModel {
 public:
  OracleModel(Program target, Metric metric, std::size_t registry_size, LcsMode mode = LcsMode::Substring);

  double score(const Spec& spec, const Program& candidate, std::span<const Trace> traces) const override;
  /// The target's membership indicator, for the FP metric only.
  std::optional<ProbabilityMap> pmap(const Spec& spec) const override;
  ScoreKind kind() const override;

 private:
  Program target_;
  Metric metric_;
  std::size_t registry_size_;
  LcsMode mode_;
};

/// Scores every candidate 0, which turns roulette selection uniform.
class UniformModel final : public FitnessModel {
 public:
  double score(const Spec&, const Program&, std::span<const Trace>) const override { return 0.0; }
};

/// Raised when an external model cannot answer. Synthesis runs abort on it.
class ModelUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Client for an external fitness model process speaking one JSON object per
/// line over its standard streams. Requests are serialised over the single
/// child process, so concurrent callers are safe but not parallel.
class SidecarModel final : public FitnessModel {
 public:
  static constexpr std::size_t kMaxBatch = 256;

  /// Launches `command` through /bin/sh.
  SidecarModel(const std::string& command, const Registry& registry);
  ~SidecarModel() override;
  SidecarModel(const SidecarModel&) = delete;
  SidecarModel& operator=(const SidecarModel&) = delete;

  double score(const Spec& spec, const Program& candidate, std::span<const Trace> traces) const override;
  std::vector<double> score_batch(const Spec& spec, std::span<const Program> candidates,
                                  std::span<const CandidateTraces> traces) const override;
  /// Returns nullopt when the model answers a pmap request with an error
  /// (e.g. it has no probability head); transport failures still throw.
  std::optional<ProbabilityMap> pmap(const Spec& spec) const override;

 private:
  std::string exchange(const std::string& request_line) const;

  std::size_t registry_size_;
  std::string registry_hash_;
  int pid_ = -1;
  std::FILE* to_child_ = nullptr;
  std::FILE* from_child_ = nullptr;
  mutable std::mutex mutex_;
  mutable std::int64_t next_id_ = 0;
};

}  // namespace progsyn

#endif  // PROGSYN_FITNESS_MODEL_HPP
