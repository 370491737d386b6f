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


// Codecs from real parameter vectors to token sequences.

#ifndef PROGSYN_MAPPING_HPP
#define PROGSYN_MAPPING_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "progsyn/fitness.hpp"

namespace progsyn {

enum class SchemeKind : std::uint8_t { Single, Multi, DynMulti, Bin, DynBin };
enum class BinMode : std::uint8_t { Equal, Proportional };

std::string_view to_string(SchemeKind kind) noexcept;
/// "single", "multi", "dyn-multi", "bin" or "dyn-bin".
SchemeKind parse_scheme_kind(std::string_view text);
BinMode parse_bin_mode(std::string_view text);

/// Bin boundaries Phi^-1(c_1) <= ... <= Phi^-1(c_{k-1}) for cumulative masses
/// c_j of `weights` (renormalised); end bins are unbounded.
std::vector<double> normal_bin_boundaries(std::span<const double> weights);
/// Equal-probability boundaries for `bins` bins.
std::vector<double> normal_bin_boundaries(std::size_t bins);
/// Half-open bins [low, high): the number of boundaries <= x.
std::size_t bin_index(std::span<const double> boundaries, double x);

class MappingScheme {
 public:
  /// `pmap` is required for proportional BIN/DYN_BIN and ignored otherwise.
  MappingScheme(SchemeKind kind, std::size_t length, std::size_t registry_size, BinMode mode = BinMode::Equal,
                const ProbabilityMap* pmap = nullptr);

  SchemeKind kind() const noexcept { return kind_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t registry_size() const noexcept { return sigma_; }
  BinMode bin_mode() const noexcept { return mode_; }
  /// Dimension of the parameter vectors this scheme decodes.
  std::size_t dimension() const noexcept;
  /// Divisors of the target length, ascending (group counts for DYN_MULTI).
  const std::vector<std::size_t>& divisors() const noexcept { return divisors_; }

  /// Pure: identical vectors decode to identical programs. Throws
  /// std::invalid_argument on a dimension mismatch.
  Program decode(std::span<const double> x) const;

 private:
  std::vector<TokenId> top_tokens(std::span<const double> block, std::size_t count) const;
  TokenId bin_token(double x) const;

  SchemeKind kind_;
  std::size_t length_;
  std::size_t sigma_;
  BinMode mode_;
  std::vector<double> token_bounds_;
  std::vector<double> length_bounds_;
  std::vector<std::size_t> divisors_;
  std::vector<double> divisor_bounds_;
};

}  // namespace progsyn

#endif  // PROGSYN_MAPPING_HPP
