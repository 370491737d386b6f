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

#include "progsyn/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace progsyn {

namespace {

Int int_from_json(const json& j) {
  if (!j.is_number_integer()) throw std::invalid_argument("expected an integer, got " + j.dump());
  const auto v = j.get<std::int64_t>();
  if (v < kIntMin || v > kIntMax) throw std::invalid_argument("integer out of range: " + j.dump());
  return static_cast<Int>(v);
}

}  // namespace

json to_json(const Value& v) {
  if (v.is_int()) return v.as_int();
  return json(v.as_list());
}

Value value_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() > kListCap) throw std::invalid_argument("list exceeds length cap");
    IntList xs;
    xs.reserve(j.size());
    for (const auto& e : j) xs.push_back(int_from_json(e));
    return Value(std::move(xs));
  }
  return Value(int_from_json(j));
}

json to_json(const Example& ex) { return json{{"in", to_json(ex.input)}, {"out", to_json(ex.output)}}; }

Example example_from_json(const json& j) {
  if (!j.is_object() || !j.contains("in") || !j.contains("out")) {
    throw std::invalid_argument("expected {\"in\":..., \"out\":...}, got " + j.dump());
  }
  return {value_from_json(j.at("in")), value_from_json(j.at("out"))};
}

json io_to_json(const Spec& spec) {
  json arr = json::array();
  for (const auto& ex : spec.examples) arr.push_back(to_json(ex));
  return arr;
}

Spec spec_from_io_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("io must be an array");
  Spec spec;
  for (const auto& e : j) spec.examples.push_back(example_from_json(e));
  return spec;
}

json trace_to_json(const Trace& trace) {
  json arr = json::array();
  for (const auto& v : trace) arr.push_back(to_json(v));
  return arr;
}

Trace trace_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("trace must be an array");
  Trace t;
  for (const auto& v : j) t.push_back(value_from_json(v));
  return t;
}

json ids_to_json(const Program& p) { return json(p.tokens); }

Program program_from_ids(const json& j, const Registry& registry) {
  if (!j.is_array()) throw std::invalid_argument("program must be an array of token ids");
  Program p;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) throw std::invalid_argument("token id must be a non-negative integer");
    p.tokens.push_back(static_cast<TokenId>(e.get<std::uint64_t>()));
    if (e.get<std::uint64_t>() >= registry.size()) throw RegistryError("token id " + e.dump() + " out of range");
  }
  return p;
}

std::vector<json> read_json_lines(std::istream& in) {
  std::vector<json> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(json::parse(line));
    } catch (const json::parse_error& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

Spec read_spec(std::istream& in) {
  Spec spec;
  for (const auto& j : read_json_lines(in)) spec.examples.push_back(example_from_json(j));
  validate_spec(spec);
  return spec;
}

Spec read_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file " + path.string());
  return read_spec(in);
}

void write_spec(std::ostream& out, const Spec& spec) {
  for (const auto& ex : spec.examples) out << to_json(ex).dump() << '\n';
}

}  // namespace progsyn
