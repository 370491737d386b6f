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

// JSON encodings shared by the CLI, the training-data writer and the model
// sidecar protocol. Integers encode as JSON numbers, lists as JSON arrays,
// so every value is self-typed.

#ifndef PROGSYN_IO_HPP
#define PROGSYN_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "progsyn/program.hpp"

namespace progsyn {

using json = nlohmann::json;

json to_json(const Value& v);
Value value_from_json(const json& j);

json to_json(const Example& ex);
Example example_from_json(const json& j);

json io_to_json(const Spec& spec);
Spec spec_from_io_json(const json& j);

json trace_to_json(const Trace& trace);
Trace trace_from_json(const json& j);

json ids_to_json(const Program& p);
Program program_from_ids(const json& j, const Registry& registry);

/// One `{in, out}` object per line.
Spec read_spec(std::istream& in);
Spec read_spec_file(const std::filesystem::path& path);
void write_spec(std::ostream& out, const Spec& spec);

/// Reads every non-blank line of a JSON-lines stream.
std::vector<json> read_json_lines(std::istream& in);

}  // namespace progsyn

#endif  // PROGSYN_IO_HPP
