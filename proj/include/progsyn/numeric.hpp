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


// Small numeric helpers shared by the search engines.

#ifndef PROGSYN_NUMERIC_HPP
#define PROGSYN_NUMERIC_HPP

#include <cstddef>
#include <span>

#include "progsyn/value.hpp"

namespace progsyn {

/// Levenshtein distance with unit insert/delete/substitute costs.
std::size_t edit_distance(std::span<const Int> a, std::span<const Int> b);

/// Inverse of the standard normal CDF. Returns -inf at 0 and +inf at 1;
/// throws std::domain_error outside [0, 1].
double normal_quantile(double p);

/// Standard normal CDF.
double normal_cdf(double x);

}  // namespace progsyn

#endif  // PROGSYN_NUMERIC_HPP
