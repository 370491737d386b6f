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


#include "progsyn/cma.hpp"

#include <string>

namespace progsyn {

std::string_view to_string(StallReason r) noexcept {
  switch (r) {
    case StallReason::NoEffectAxis: return "no_effect_axis";
    case StallReason::Condition: return "condition";
    case StallReason::TolX: return "tol_x";
    case StallReason::TolFun: return "tol_fun";
  }
  return "?";
}

RestartPolicy parse_restart_policy(std::string_view text) {
  if (text == "none") return RestartPolicy::none();
  if (text == "ipop") return RestartPolicy::ipop();
  RestartPolicy p;
  while (!text.empty()) {
    const auto plus = text.find('+');
    const auto part = text.substr(0, plus);
    bool* flag = part == "pb" ? &p.pb : part == "mb" ? &p.mb : part == "cb" ? &p.cb : nullptr;
    if (!flag || *flag) throw std::invalid_argument("bad restart policy component: '" + std::string(part) + "'");
    *flag = true;
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
    if (text.empty()) throw std::invalid_argument("restart policy ends with '+'");
  }
  if (p == RestartPolicy::none()) throw std::invalid_argument("empty restart policy");
  return p;
}

std::string to_string(const RestartPolicy& policy) {
  if (policy == RestartPolicy::none()) return "none";
  if (policy == RestartPolicy::ipop()) return "ipop";
  std::string out;
  for (auto [on, name] : {std::pair{policy.pb, "pb"}, {policy.mb, "mb"}, {policy.cb, "cb"}}) {
    if (!on) continue;
    if (!out.empty()) out += '+';
    out += name;
  }
  return out;
}

}  // namespace progsyn
