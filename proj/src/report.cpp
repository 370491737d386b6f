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

#include "progsyn/report.hpp"

namespace progsyn {

json to_json(const SynthesisReport& report, const Registry& registry, bool timing) {
  json j{
      {"engine", report.engine},
      {"found", report.found.has_value()},
      {"program", report.found ? json(to_string(*report.found, registry)) : json(nullptr)},
      {"program_ids", report.found ? ids_to_json(*report.found) : json(nullptr)},
      {"generations", report.generations},
      {"evaluations", report.evaluations},
      {"ns_invocations", report.ns_invocations},
      {"restarts", report.restarts},
      {"seed", report.seed},
      {"stop_reason", report.stop_reason},
  };
  if (timing) j["wall_time_s"] = report.wall_time_s;
  return j;
}

}  // namespace progsyn
