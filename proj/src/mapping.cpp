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


#include "progsyn/mapping.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "progsyn/numeric.hpp"

namespace progsyn {

std::string_view to_string(SchemeKind kind) noexcept {
  switch (kind) {
    case SchemeKind::Single: return "single";
    case SchemeKind::Multi: return "multi";
    case SchemeKind::DynMulti: return "dyn-multi";
    case SchemeKind::Bin: return "bin";
    case SchemeKind::DynBin: return "dyn-bin";
  }
  return "?";
}

SchemeKind parse_scheme_kind(std::string_view text) {
  for (auto k : {SchemeKind::Single, SchemeKind::Multi, SchemeKind::DynMulti, SchemeKind::Bin, SchemeKind::DynBin})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown mapping scheme '" + std::string(text) + "'");
}

BinMode parse_bin_mode(std::string_view text) {
  if (text == "equal") return BinMode::Equal;
  if (text == "prop") return BinMode::Proportional;
  throw std::invalid_argument("unknown bin mode '" + std::string(text) + "'");
}

std::vector<double> normal_bin_boundaries(std::span<const double> weights) {
  if (weights.empty()) throw std::invalid_argument("no bins");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0)) throw std::invalid_argument("bin weights must have positive mass");
  std::vector<double> out;
  out.reserve(weights.size() - 1);
  double cum = 0;
  for (std::size_t j = 0; j + 1 < weights.size(); ++j) {
    if (weights[j] < 0) throw std::invalid_argument("negative bin weight");
    cum += weights[j];
    out.push_back(normal_quantile(std::clamp(cum / total, 0.0, 1.0)));
  }
  return out;
}

std::vector<double> normal_bin_boundaries(std::size_t bins) {
  if (bins == 0) throw std::invalid_argument("no bins");
  std::vector<double> out;
  out.reserve(bins - 1);
  for (std::size_t j = 1; j < bins; ++j) out.push_back(normal_quantile(static_cast<double>(j) / static_cast<double>(bins)));
  return out;
}

std::size_t bin_index(std::span<const double> boundaries, double x) {
  return static_cast<std::size_t>(std::upper_bound(boundaries.begin(), boundaries.end(), x) - boundaries.begin());
}

MappingScheme::MappingScheme(SchemeKind kind, std::size_t length, std::size_t registry_size, BinMode mode,
                             const ProbabilityMap* pmap)
    : kind_(kind), length_(length), sigma_(registry_size), mode_(mode) {
  if (length == 0) throw std::invalid_argument("target length must be at least 1");
  if (registry_size == 0) throw std::invalid_argument("empty registry");
  if (kind == SchemeKind::Single && length > registry_size)
    throw std::invalid_argument("single-group mapping needs length <= registry size");
  if (kind == SchemeKind::Bin || kind == SchemeKind::DynBin) {
    if (mode == BinMode::Proportional) {
      if (!pmap) throw std::invalid_argument("proportional bins need a probability map");
      validate_pmap(*pmap, registry_size);
      token_bounds_ = normal_bin_boundaries(*pmap);
    } else {
      token_bounds_ = normal_bin_boundaries(registry_size);
    }
    length_bounds_ = normal_bin_boundaries(length);
  }
  if (kind == SchemeKind::DynMulti) {
    for (std::size_t k = 1; k <= length; ++k)
      if (length % k == 0) divisors_.push_back(k);
    divisor_bounds_ = normal_bin_boundaries(divisors_.size());
  }
}

std::size_t MappingScheme::dimension() const noexcept {
  switch (kind_) {
    case SchemeKind::Single: return sigma_;
    case SchemeKind::Multi: return length_ * sigma_;
    case SchemeKind::DynMulti: return length_ * sigma_ + 1;
    case SchemeKind::Bin: return length_;
    case SchemeKind::DynBin: return length_ + 1;
  }
  return 0;
}

// Tokens of the `count` largest coordinates, largest first; ties go to the
// lower token id.
std::vector<TokenId> MappingScheme::top_tokens(std::span<const double> block, std::size_t count) const {
  std::vector<TokenId> ids(block.size());
  std::iota(ids.begin(), ids.end(), TokenId{0});
  std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(count), ids.end(),
                    [&](TokenId a, TokenId b) { return block[a] > block[b] || (block[a] == block[b] && a < b); });
  ids.resize(count);
  return ids;
}

TokenId MappingScheme::bin_token(double x) const { return static_cast<TokenId>(bin_index(token_bounds_, x)); }

Program MappingScheme::decode(std::span<const double> x) const {
  if (x.size() != dimension())
    throw std::invalid_argument("vector has dimension " + std::to_string(x.size()) + ", scheme expects " +
                                std::to_string(dimension()));
  Program p;
  p.tokens.reserve(length_);
  auto block = [&](std::size_t i) { return x.subspan(i * sigma_, sigma_); };
  switch (kind_) {
    case SchemeKind::Single:
      p.tokens = top_tokens(x, length_);
      break;
    case SchemeKind::Multi:
      for (std::size_t i = 0; i < length_; ++i) p.tokens.push_back(top_tokens(block(i), 1)[0]);
      break;
    case SchemeKind::DynMulti: {
      const std::size_t k = divisors_[bin_index(divisor_bounds_, x.back())];
      for (std::size_t i = 0; i < k; ++i)
        for (auto t : top_tokens(block(i), length_ / k)) p.tokens.push_back(t);
      break;
    }
    case SchemeKind::Bin:
      for (double v : x) p.tokens.push_back(bin_token(v));
      break;
    case SchemeKind::DynBin: {
      const std::size_t len = 1 + bin_index(length_bounds_, x.back());
      for (std::size_t i = 0; i < len; ++i) p.tokens.push_back(bin_token(x[i]));
      break;
    }
  }
  return p;
}

}  // namespace progsyn
