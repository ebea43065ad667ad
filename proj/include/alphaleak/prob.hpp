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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "alphaleak/errors.hpp"

namespace alphaleak {

// Probability vector on a finite alphabet. Entries are validated at
// construction: non-negative and summing to one within kSumTolerance.
// Entries below kZeroClamp are snapped to exact zero so the support set is
// exact; max-over-support and zero-skipping code relies on that.
class Distribution {
 public:
  static constexpr double kSumTolerance = 1e-9;
  static constexpr double kZeroClamp = 1e-15;

  explicit Distribution(std::vector<double> raw);

  static Distribution uniform(std::size_t n);
  static Distribution point_mass(std::size_t n, std::size_t index);
  // Uniform over the given (strictly increasing) index set, zero elsewhere.
  static Distribution uniform_on(std::size_t n,
                                 std::span<const std::size_t> support);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const noexcept { return probs_; }

  // Indices with strictly positive probability, ascending.
  const std::vector<std::size_t>& support() const noexcept { return support_; }

  // Lowest index attaining the maximum probability.
  std::size_t argmax() const noexcept;
  double max_prob() const noexcept { return probs_[argmax()]; }

 private:
  std::vector<double> probs_;
  std::vector<std::size_t> support_;
};

// Row-stochastic conditional probability matrix W(y|x); row x is the output
// distribution given input x. Rows share one output alphabet.
class Channel {
 public:
  explicit Channel(std::vector<std::vector<double>> rows);
  explicit Channel(std::vector<Distribution> rows);

  static Channel identity(std::size_t n);
  // Binary symmetric channel with the given crossover probability.
  static Channel bsc(double crossover);
  // Every row equal to `row`: the output carries no information about the
  // input.
  static Channel rank_one(std::size_t in_size, Distribution row);

  std::size_t in_size() const noexcept { return rows_.size(); }
  std::size_t out_size() const noexcept { return rows_.front().size(); }
  const Distribution& row(std::size_t x) const { return rows_[x]; }
  double prob(std::size_t x, std::size_t y) const { return rows_[x][y]; }

  // True when all rows agree entrywise within tol.
  bool is_rank_one(double tol = 1e-12) const noexcept;

 private:
  std::vector<Distribution> rows_;
};

// Joint probability mass on X x Y with cached marginals and posterior
// columns. Columns with zero output marginal carry no mass and have no
// posterior.
class Joint {
 public:
  explicit Joint(std::vector<std::vector<double>> mass);

  std::size_t x_size() const noexcept { return mass_.size(); }
  std::size_t y_size() const noexcept { return mass_.front().size(); }
  double mass(std::size_t x, std::size_t y) const { return mass_[x][y]; }

  const Distribution& x_marginal() const noexcept { return x_marginal_; }
  const Distribution& y_marginal() const noexcept { return y_marginal_; }

  bool has_posterior(std::size_t y) const {
    return posteriors_[y].has_value();
  }
  // P(X | Y = y); defined only when column y has positive marginal.
  const Distribution& posterior(std::size_t y) const;

  // Row-major copy of the mass as a Distribution over the product alphabet.
  Distribution flattened() const;

 private:
  std::vector<std::vector<double>> mass_;
  Distribution x_marginal_;
  Distribution y_marginal_;
  std::vector<std::optional<Distribution>> posteriors_;
};

Joint joint_from(const Distribution& prior, const Channel& channel);

// Parallel composition: both outputs are released for the same input. Output
// pair (y1, y2) is flattened to y1 * w2.out_size() + y2.
Channel product_channel(const Channel& w1, const Channel& w2);

// Series composition along a Markov chain X - Y - Z; rows of the result are
// the matrix product of the factors.
Channel cascade_channel(const Channel& w1, const Channel& w2);

// Channel of a deterministic reverse map X = x_of_y(Y) with Y ~ out_dist.
// Returns P(y|x), which has one positive entry per output column, together
// with the induced input distribution. The input alphabet is
// [0, max(x_of_y)]; throws UncoveredX when some x in it gets zero mass.
std::pair<Channel, Distribution> reverse_deterministic_channel(
    std::span<const std::size_t> x_of_y, const Distribution& out_dist);

// Reproducible sampling helpers. Uniform deviates are derived from the raw
// 64-bit stream as (bits >> 11) * 2^-53 so results do not depend on the
// standard library's distribution implementations.
double uniform_unit(std::mt19937_64& rng);
// Uniform on the simplex: normalized i.i.d. unit-rate exponentials.
Distribution random_distribution(std::mt19937_64& rng, std::size_t n);
Channel random_channel(std::mt19937_64& rng, std::size_t in_size,
                       std::size_t out_size);

}  // namespace alphaleak
