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

#include "progsyn/program.hpp"

#include <cctype>

namespace progsyn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::uint64_t derive_seed(std::string_view label, std::uint64_t parent) noexcept {
  std::uint64_t h = fnv1a64(label);
  for (int i = 0; i < 8; ++i) {
    h ^= (parent >> (8 * i)) & 0xffU;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void validate_spec(const Spec& spec) {
  if (spec.examples.empty()) throw std::invalid_argument("spec has no examples");
  const Type in = spec.examples.front().input.type();
  const Type out = spec.examples.front().output.type();
  for (const auto& ex : spec.examples) {
    if (ex.input.type() != in) throw std::invalid_argument("spec inputs do not share one type");
    if (ex.output.type() != out) throw std::invalid_argument("spec outputs do not share one type");
  }
}

void validate_program(const Program& program, const Registry& registry) {
  for (TokenId id : program) {
    if (id >= registry.size()) {
      throw RegistryError("token id " + std::to_string(id) + " is not in the registry");
    }
  }
}

bool satisfies(const Program& program, const Spec& spec, const Registry& registry) {
  for (const auto& ex : spec.examples) {
    if (run(program, ex.input, registry) != ex.output) return false;
  }
  return true;
}

bool equivalent(const Program& pa, const Program& pb, const Spec& spec, const Registry& registry) {
  return satisfies(pa, spec, registry) && satisfies(pb, spec, registry);
}

Program random_program(std::size_t length, Rng& rng, const Registry& registry, int max_attempts) {
  if (length == 0) throw std::invalid_argument("program length must be at least 1");
  if (registry.size() == 0) throw GenerationError("cannot draw programs from an empty registry");
  Program p;
  p.tokens.resize(length);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (auto& t : p.tokens) t = static_cast<TokenId>(uniform_index(rng, registry.size()));
    if (effective_length(p, registry) == length) return p;
  }
  throw GenerationError("no program of effective length " + std::to_string(length) + " after " +
                        std::to_string(max_attempts) + " attempts");
}

Program parse_program(std::string_view text, const Registry& registry) {
  Program p;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    auto name = trim(text.substr(start, end - start));
    if (name.empty()) throw std::invalid_argument("empty token in program literal");
    p.tokens.push_back(registry.id_of(name));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return p;
}

std::string to_string(const Program& program, const Registry& registry) {
  std::string out;
  for (std::size_t i = 0; i < program.size(); ++i) {
    if (i) out += ',';
    out += registry.at(program[i]).name;
  }
  return out;
}

}  // namespace progsyn
