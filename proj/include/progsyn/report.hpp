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

#ifndef PROGSYN_REPORT_HPP
#define PROGSYN_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "progsyn/io.hpp"

namespace progsyn {

/// Outcome of one synthesis run, shared by both engines.
struct SynthesisReport {
  std::string engine;
  std::optional<Program> found;  // after dead-code elimination
  std::size_t generations = 0;
  std::size_t evaluations = 0;
  std::size_t ns_invocations = 0;
  std::size_t restarts = 0;
  double wall_time_s = 0.0;
  std::uint64_t seed = 0;
  /// "found", "budget", "generations" or "evaluations".
  std::string stop_reason;
};

/// Wall time is machine-dependent, so it is only written when `timing` is
/// set; every other field is reproducible from the seed.
json to_json(const SynthesisReport& report, const Registry& registry, bool timing = false);

/// Cooperative wall-clock budget.
class Deadline {
 public:
  explicit Deadline(double seconds)
      : start_(std::chrono::steady_clock::now()), seconds_(seconds) {}

  bool expired() const { return elapsed() >= seconds_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
  double seconds_;
};

}  // namespace progsyn

#endif  // PROGSYN_REPORT_HPP
