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

#include "progsyn/value.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace progsyn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view text) {
  text = trim(text);
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
  }
  if (v < kIntMin || v > kIntMax) {
    throw std::invalid_argument("integer literal out of range: " + std::string(text));
  }
  return static_cast<Int>(v);
}

}  // namespace

std::string_view to_string(Type t) noexcept { return t == Type::Int ? "INT" : "LIST"; }

std::string to_string(const Value& v) {
  if (v.is_int()) return std::to_string(v.as_int());
  std::string out = "[";
  const auto& xs = v.as_list();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  out += ']';
  return out;
}

Value parse_value(std::string_view text, std::size_t cap) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty value literal");
  if (text.front() != '[') return Value(parse_int(text));
  if (text.back() != ']') throw std::invalid_argument("unterminated list literal '" + std::string(text) + "'");
  std::string_view body = trim(text.substr(1, text.size() - 2));
  IntList xs;
  while (!body.empty()) {
    auto comma = body.find(',');
    xs.push_back(parse_int(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (trim(body).empty()) throw std::invalid_argument("trailing comma in list literal");
  }
  if (xs.size() > cap) throw std::invalid_argument("list literal exceeds length cap");
  return Value(std::move(xs));
}

}  // namespace progsyn
