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

#ifndef PROGSYN_REGISTRY_HPP
#define PROGSYN_REGISTRY_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "progsyn/value.hpp"

namespace progsyn {

using TokenId = std::uint16_t;

enum class BaseFunction : std::uint8_t {
  Head, Last, Take, Drop, Access, Minimum, Maximum, Reverse, Sort, Sum,
  Map, Filter, Count, ZipWith, ScanL1,
};

/// The lambda bound into a higher-order token. `None` for first-order ones.
enum class Lambda : std::uint8_t {
  None,
  // INT -> INT
  Inc, Dec, Mul2, Mul3, Mul4, Div2, Div3, Div4, Negate, Square,
  // INT -> BOOL
  Positive, Negative, Even, Odd,
  // INT -> INT -> INT
  Add, Sub, Mul, Min, Max,
};

/// One DSL function together with its bound lambda (or literal argument).
struct TokenSpec {
  TokenId id = 0;
  std::string name;
  std::array<Type, 2> arg_types{Type::List, Type::List};
  std::uint8_t arity = 1;
  Type ret_type = Type::List;
  BaseFunction function = BaseFunction::Head;
  Lambda lambda = Lambda::None;
  /// Set for literal-parameterised tokens such as `DROP(2)`; the integer
  /// argument is then bound at registry load time instead of by dataflow.
  std::optional<Int> literal;

  std::span<const Type> args() const noexcept { return {arg_types.data(), arity}; }
};

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Derives the full token signature from a display name such as `MAP(*2)`,
/// `ZIPWITH(min)`, `TAKE` or `DROP(2)`. Throws RegistryError for unknown names.
TokenSpec describe_token(std::string_view name);

/// The immutable token table Σ. Ids are dense and equal to table positions.
class Registry {
 public:
  Registry() = default;

  /// The built-in DeepCoder-derived roster.
  static Registry deepcoder();
  /// Builds a registry from token names; ids are assigned in order.
  static Registry from_names(std::span<const std::string> names);
  /// Parses `id<TAB>name<TAB>argTypes<TAB>retType` lines.
  static Registry parse(std::string_view text);
  static Registry load(const std::filesystem::path& path);

  /// Returns a copy with the named tokens appended (existing names are kept
  /// as they are).
  Registry with_tokens(std::span<const std::string> names) const;

  std::string serialize() const;

  std::size_t size() const noexcept { return tokens_.size(); }
  const TokenSpec& operator[](TokenId id) const { return tokens_[id]; }
  const TokenSpec& at(TokenId id) const;
  std::optional<TokenId> find(std::string_view name) const;
  TokenId id_of(std::string_view name) const;
  std::span<const TokenSpec> tokens() const noexcept { return tokens_; }

  /// 64-bit FNV-1a of the registry file bytes (of `serialize()` for
  /// registries that were not loaded from text).
  std::uint64_t hash() const noexcept { return hash_; }

 private:
  void finalize(std::uint64_t hash);

  std::vector<TokenSpec> tokens_;
  std::unordered_map<std::string, TokenId> by_name_;
  std::uint64_t hash_ = 0;
};

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace progsyn

#endif  // PROGSYN_REGISTRY_HPP
