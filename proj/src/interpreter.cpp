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

#include <algorithm>
#include <array>
#include <cstdint>

#include "progsyn/program.hpp"

namespace progsyn {

namespace {

constexpr int kDefaultSource = -2;
constexpr int kInputSource = -1;

using Sources = std::array<int, 2>;

/// Producers of each type seen so far, oldest first; kInputSource marks the
/// program input.
struct Producers {
  std::vector<int> ints;
  std::vector<int> lists;

  explicit Producers(Type input_type, std::size_t reserve) {
    ints.reserve(reserve + 1);
    lists.reserve(reserve + 1);
    (input_type == Type::Int ? ints : lists).push_back(kInputSource);
  }

  Sources bind(const TokenSpec& tok) const {
    Sources src{kDefaultSource, kDefaultSource};
    std::size_t seen_int = 0;
    std::size_t seen_list = 0;
    for (std::size_t i = 0; i < tok.arity; ++i) {
      const bool is_int = tok.arg_types[i] == Type::Int;
      const auto& pool = is_int ? ints : lists;
      const std::size_t rank = is_int ? seen_int++ : seen_list++;
      if (pool.empty()) continue;
      src[i] = rank < pool.size() ? pool[pool.size() - 1 - rank] : pool.back();
    }
    return src;
  }

  void add(Type t, int statement) { (t == Type::Int ? ints : lists).push_back(statement); }
};

bool holds(Lambda pred, Int x) {
  switch (pred) {
    case Lambda::Positive: return x > 0;
    case Lambda::Negative: return x < 0;
    case Lambda::Even: return x % 2 == 0;
    case Lambda::Odd: return x % 2 != 0;
    default: return false;
  }
}

Int map_one(Lambda f, Int x) {
  const std::int64_t v = x;
  switch (f) {
    case Lambda::Inc: return saturate(v + 1);
    case Lambda::Dec: return saturate(v - 1);
    case Lambda::Mul2: return saturate(v * 2);
    case Lambda::Mul3: return saturate(v * 3);
    case Lambda::Mul4: return saturate(v * 4);
    case Lambda::Div2: return static_cast<Int>(v / 2);
    case Lambda::Div3: return static_cast<Int>(v / 3);
    case Lambda::Div4: return static_cast<Int>(v / 4);
    case Lambda::Negate: return saturate(-v);
    case Lambda::Square: return saturate(v * v);
    default: return x;
  }
}

Int combine(Lambda op, Int a, Int b) {
  const std::int64_t x = a;
  const std::int64_t y = b;
  switch (op) {
    case Lambda::Add: return saturate(x + y);
    case Lambda::Sub: return saturate(x - y);
    case Lambda::Mul: return saturate(x * y);
    case Lambda::Min: return std::min(a, b);
    case Lambda::Max: return std::max(a, b);
    default: return a;
  }
}

std::size_t clamp_count(Int n, std::size_t len) {
  if (n <= 0) return 0;
  return std::min(static_cast<std::size_t>(n), len);
}

Value apply(const TokenSpec& tok, const Value& a, const Value& b) {
  // Integer-taking functions receive (n, xs) from dataflow or (xs) plus a
  // literal n.
  auto int_arg = [&] { return tok.literal ? *tok.literal : a.as_int(); };
  auto list_arg = [&]() -> const IntList& { return tok.literal || tok.arity == 1 ? a.as_list() : b.as_list(); };

  switch (tok.function) {
    case BaseFunction::Head: {
      const auto& xs = a.as_list();
      return xs.empty() ? Int{0} : xs.front();
    }
    case BaseFunction::Last: {
      const auto& xs = a.as_list();
      return xs.empty() ? Int{0} : xs.back();
    }
    case BaseFunction::Take: {
      const auto& xs = list_arg();
      return IntList(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(clamp_count(int_arg(), xs.size())));
    }
    case BaseFunction::Drop: {
      const auto& xs = list_arg();
      return IntList(xs.begin() + static_cast<std::ptrdiff_t>(clamp_count(int_arg(), xs.size())), xs.end());
    }
    case BaseFunction::Access: {
      const auto& xs = list_arg();
      const Int n = int_arg();
      return n >= 0 && static_cast<std::size_t>(n) < xs.size() ? xs[static_cast<std::size_t>(n)] : Int{0};
    }
    case BaseFunction::Minimum: {
      const auto& xs = a.as_list();
      return xs.empty() ? Int{0} : *std::min_element(xs.begin(), xs.end());
    }
    case BaseFunction::Maximum: {
      const auto& xs = a.as_list();
      return xs.empty() ? Int{0} : *std::max_element(xs.begin(), xs.end());
    }
    case BaseFunction::Reverse: {
      const auto& xs = a.as_list();
      return IntList(xs.rbegin(), xs.rend());
    }
    case BaseFunction::Sort: {
      IntList xs = a.as_list();
      std::sort(xs.begin(), xs.end());
      return xs;
    }
    case BaseFunction::Sum: {
      std::int64_t s = 0;
      for (Int x : a.as_list()) s += x;
      return saturate(s);
    }
    case BaseFunction::Map: {
      IntList xs = a.as_list();
      for (auto& x : xs) x = map_one(tok.lambda, x);
      return xs;
    }
    case BaseFunction::Filter: {
      IntList xs;
      for (Int x : a.as_list()) {
        if (holds(tok.lambda, x)) xs.push_back(x);
      }
      return xs;
    }
    case BaseFunction::Count: {
      const auto& xs = a.as_list();
      return static_cast<Int>(std::count_if(xs.begin(), xs.end(), [&](Int x) { return holds(tok.lambda, x); }));
    }
    case BaseFunction::ZipWith: {
      const auto& xs = a.as_list();
      const auto& ys = b.as_list();
      IntList out(std::min(xs.size(), ys.size()));
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = combine(tok.lambda, xs[i], ys[i]);
      return out;
    }
    case BaseFunction::ScanL1: {
      IntList xs = a.as_list();
      for (std::size_t i = 1; i < xs.size(); ++i) xs[i] = combine(tok.lambda, xs[i - 1], xs[i]);
      return xs;
    }
  }
  return Value::default_for(tok.ret_type);
}

}  // namespace

Execution evaluate(const Program& program, const Value& input, const Registry& registry) {
  validate_program(program, registry);
  Execution exec;
  exec.trace.reserve(program.size());
  Producers producers(input.type(), program.size());
  const Value defaults[2] = {Value::default_for(Type::Int), Value::default_for(Type::List)};

  auto fetch = [&](int source, Type t) -> const Value& {
    if (source == kInputSource) return input;
    if (source == kDefaultSource) return defaults[t == Type::Int ? 0 : 1];
    return exec.trace[static_cast<std::size_t>(source)];
  };

  for (std::size_t k = 0; k < program.size(); ++k) {
    const TokenSpec& tok = registry[program[k]];
    const Sources src = producers.bind(tok);
    const Value& a = fetch(src[0], tok.arg_types[0]);
    const Value& b = tok.arity > 1 ? fetch(src[1], tok.arg_types[1]) : a;
    exec.trace.push_back(apply(tok, a, b));
    producers.add(tok.ret_type, static_cast<int>(k));
  }
  exec.output = exec.trace.empty() ? input : exec.trace.back();
  return exec;
}

Value run(const Program& program, const Value& input, const Registry& registry) {
  return std::move(evaluate(program, input, registry).output);
}

Program eliminate_dead_code(const Program& program, const Registry& registry) {
  validate_program(program, registry);
  if (program.empty()) return program;
  // The set of statements a token reads does not depend on the input type.
  Producers producers(Type::List, program.size());
  std::vector<Sources> sources;
  sources.reserve(program.size());
  for (std::size_t k = 0; k < program.size(); ++k) {
    const TokenSpec& tok = registry[program[k]];
    sources.push_back(producers.bind(tok));
    producers.add(tok.ret_type, static_cast<int>(k));
  }

  std::vector<bool> live(program.size(), false);
  live.back() = true;
  for (std::size_t k = program.size(); k-- > 0;) {
    if (!live[k]) continue;
    for (std::size_t i = 0; i < registry[program[k]].arity; ++i) {
      if (sources[k][i] >= 0) live[static_cast<std::size_t>(sources[k][i])] = true;
    }
  }

  Program out;
  for (std::size_t k = 0; k < program.size(); ++k) {
    if (live[k]) out.tokens.push_back(program[k]);
  }
  return out;
}

std::size_t effective_length(const Program& program, const Registry& registry) {
  return eliminate_dead_code(program, registry).size();
}

}  // namespace progsyn
