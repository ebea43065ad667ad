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

#include <cmath>
#include <limits>

#include "alphaleak/errors.hpp"

namespace alphaleak {

// Order parameter of the Renyi family. The limit points 1 and +infinity get
// exact tags so every consumer dispatches to the continuous extension instead
// of comparing a float against 1.0. A finite order is anything in
// (0,1) union (1,inf); non-positive or NaN orders are rejected.
class AlphaOrder {
 public:
  enum class Tag { kOne, kInfinity, kFinite };

  static AlphaOrder one() noexcept { return AlphaOrder(Tag::kOne, 1.0); }

  static AlphaOrder infinity() noexcept {
    return AlphaOrder(Tag::kInfinity, std::numeric_limits<double>::infinity());
  }

  // Maps exactly 1.0 to the kOne tag and +inf to kInfinity.
  static AlphaOrder of(double raw) {
    if (std::isnan(raw) || raw <= 0.0) {
      throw AlphaOutOfRange("alpha must be a positive order, got " +
                            std::to_string(raw));
    }
    if (raw == 1.0) return one();
    if (std::isinf(raw)) return infinity();
    return AlphaOrder(Tag::kFinite, raw);
  }

  Tag tag() const noexcept { return tag_; }
  bool is_one() const noexcept { return tag_ == Tag::kOne; }
  bool is_infinity() const noexcept { return tag_ == Tag::kInfinity; }
  bool is_finite() const noexcept { return tag_ == Tag::kFinite; }

  // The finite order value; meaningful only when is_finite().
  double finite_value() const noexcept { return value_; }

  // Numeric view (1.0, +inf, or the finite value) for display and
  // serialization.
  double numeric() const noexcept { return value_; }

  friend bool operator==(const AlphaOrder& a, const AlphaOrder& b) noexcept {
    return a.tag_ == b.tag_ && a.value_ == b.value_;
  }

 private:
  AlphaOrder(Tag tag, double value) noexcept : tag_(tag), value_(value) {}

  Tag tag_;
  double value_;
};

}  // namespace alphaleak
