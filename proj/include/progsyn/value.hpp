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

#ifndef PROGSYN_VALUE_HPP
#define PROGSYN_VALUE_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace progsyn {

/// The two runtime types of the list DSL.
enum class Type : std::uint8_t { Int, List };

using Int = std::int32_t;
using IntList = std::vector<Int>;

inline constexpr Int kIntMin = std::numeric_limits<Int>::min();
inline constexpr Int kIntMax = std::numeric_limits<Int>::max();
inline constexpr std::size_t kListCap = 64;

/// Clamps a wide intermediate into the DSL integer range.
constexpr Int saturate(std::int64_t v) noexcept {
  if (v > kIntMax) return kIntMax;
  if (v < kIntMin) return kIntMin;
  return static_cast<Int>(v);
}

/// A DSL datum: either an integer or a list of integers.
class Value {
 public:
  Value() = default;
  Value(Int v) : data_(v) {}  // NOLINT(google-explicit-constructor)
  Value(IntList v) : data_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  /// 0 for integers, the empty list for lists.
  static Value default_for(Type t) { return t == Type::Int ? Value(Int{0}) : Value(IntList{}); }

  Type type() const noexcept { return data_.index() == 0 ? Type::Int : Type::List; }
  bool is_int() const noexcept { return data_.index() == 0; }
  bool is_list() const noexcept { return data_.index() == 1; }

  Int as_int() const { return std::get<Int>(data_); }
  const IntList& as_list() const { return std::get<IntList>(data_); }
  IntList& as_list() { return std::get<IntList>(data_); }

  friend bool operator==(const Value&, const Value&) = default;

 private:
  std::variant<Int, IntList> data_{Int{0}};
};

std::string_view to_string(Type t) noexcept;

/// Decimal integer or `[a,b,c]`.
std::string to_string(const Value& v);

/// Parses a value literal; throws std::invalid_argument on malformed text,
/// out-of-range integers, or lists longer than `cap`.
Value parse_value(std::string_view text, std::size_t cap = kListCap);

}  // namespace progsyn

#endif  // PROGSYN_VALUE_HPP
