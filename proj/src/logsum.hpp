// Copyright 2026 The Alphaleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace alphaleak::detail {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log sum_i exp(v_i) with max subtraction. An empty input or all -inf terms
// (a sum of zeros) gives -inf.
inline double log_sum_exp(std::span<const double> v) {
  double m = kNegInf;
  for (double t : v) m = std::max(m, t);
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double t : v) s += std::exp(t - m);
  return m + std::log(s);
}

}  // namespace alphaleak::detail
