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

#include "alphaleak/prob.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace alphaleak {
namespace {

std::string index_str(std::size_t i) { return std::to_string(i); }

std::vector<std::size_t> positive_indices(const std::vector<double>& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0.0) out.push_back(i);
  }
  return out;
}

}  // namespace

Distribution::Distribution(std::vector<double> raw) : probs_(std::move(raw)) {
  if (probs_.empty()) throw EmptyInput("distribution has no entries");
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    // The negated comparison also rejects NaN.
    if (!(probs_[i] >= 0.0)) {
      throw NegativeEntry("entry " + index_str(i) + " is " +
                          std::to_string(probs_[i]) + ", must be >= 0");
    }
  }
  const double sum = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (!(std::abs(sum - 1.0) <= kSumTolerance)) {
    throw NotNormalized("entries sum to " + std::to_string(sum) +
                        ", must be 1 within " + std::to_string(kSumTolerance));
  }
  for (double& p : probs_) {
    if (p < kZeroClamp) p = 0.0;
  }
  support_ = positive_indices(probs_);
  if (support_.empty()) throw NotNormalized("all entries clamp to zero");
}

Distribution Distribution::uniform(std::size_t n) {
  if (n == 0) throw EmptyInput("uniform distribution needs n >= 1");
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Distribution Distribution::point_mass(std::size_t n, std::size_t index) {
  if (n == 0) throw EmptyInput("point mass needs n >= 1");
  if (index >= n) {
    throw DimensionMismatch("point mass index " + index_str(index) +
                            " out of range for alphabet of size " +
                            index_str(n));
  }
  std::vector<double> v(n, 0.0);
  v[index] = 1.0;
  return Distribution(std::move(v));
}

Distribution Distribution::uniform_on(std::size_t n,
                                      std::span<const std::size_t> support) {
  if (support.empty()) throw EmptySupport("support set is empty");
  std::vector<double> v(n, 0.0);
  for (std::size_t k = 0; k < support.size(); ++k) {
    const std::size_t i = support[k];
    if (i >= n) {
      throw DimensionMismatch("support index " + index_str(i) +
                              " out of range for alphabet of size " +
                              index_str(n));
    }
    if (k > 0 && support[k] <= support[k - 1]) {
      throw Error("support indices must be strictly increasing");
    }
    v[i] = 1.0 / static_cast<double>(support.size());
  }
  return Distribution(std::move(v));
}

std::size_t Distribution::argmax() const noexcept {
  std::size_t best = 0;
  for (std::size_t i = 1; i < probs_.size(); ++i) {
    if (probs_[i] > probs_[best]) best = i;
  }
  return best;
}

namespace {

std::vector<Distribution> rows_from_raw(std::vector<std::vector<double>> raw) {
  if (raw.empty()) throw EmptyInput("channel has no rows");
  const std::size_t expected = raw[0].size();
  std::vector<Distribution> rows;
  rows.reserve(raw.size());
  for (std::size_t x = 0; x < raw.size(); ++x) {
    if (raw[x].size() != expected) {
      throw DimensionMismatch("row " + index_str(x) + " has " +
                              index_str(raw[x].size()) + " entries, expected " +
                              index_str(expected));
    }
    try {
      rows.emplace_back(std::move(raw[x]));
    } catch (const NegativeEntry& e) {
      throw NegativeEntry("row " + index_str(x) + ": " + e.what());
    } catch (const NotNormalized& e) {
      throw NotNormalized("row " + index_str(x) + ": " + e.what());
    } catch (const EmptyInput& e) {
      throw EmptyInput("row " + index_str(x) + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace

Channel::Channel(std::vector<std::vector<double>> rows)
    : rows_(rows_from_raw(std::move(rows))) {}

Channel::Channel(std::vector<Distribution> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw EmptyInput("channel has no rows");
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (rows_[x].size() != rows_[0].size()) {
      throw DimensionMismatch("row " + index_str(x) + " has " +
                              index_str(rows_[x].size()) +
                              " entries, expected " +
                              index_str(rows_[0].size()));
    }
  }
}

Channel Channel::identity(std::size_t n) {
  if (n == 0) throw EmptyInput("identity channel needs n >= 1");
  std::vector<Distribution> rows;
  rows.reserve(n);
  for (std::size_t x = 0; x < n; ++x) rows.push_back(Distribution::point_mass(n, x));
  return Channel(std::move(rows));
}

Channel Channel::bsc(double crossover) {
  return Channel(std::vector<std::vector<double>>{
      {1.0 - crossover, crossover}, {crossover, 1.0 - crossover}});
}

Channel Channel::rank_one(std::size_t in_size, Distribution row) {
  if (in_size == 0) throw EmptyInput("channel needs in_size >= 1");
  std::vector<Distribution> rows(in_size, row);
  return Channel(std::move(rows));
}

bool Channel::is_rank_one(double tol) const noexcept {
  for (std::size_t x = 1; x < in_size(); ++x) {
    for (std::size_t y = 0; y < out_size(); ++y) {
      if (std::abs(rows_[x][y] - rows_[0][y]) > tol) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::vector<double>> validated_mass(
    std::vector<std::vector<double>> mass) {
  if (mass.empty() || mass[0].empty()) throw EmptyInput("joint mass is empty");
  double total = 0.0;
  for (std::size_t x = 0; x < mass.size(); ++x) {
    if (mass[x].size() != mass[0].size()) {
      throw DimensionMismatch("joint row " + index_str(x) + " has " +
                              index_str(mass[x].size()) +
                              " entries, expected " +
                              index_str(mass[0].size()));
    }
    for (std::size_t y = 0; y < mass[x].size(); ++y) {
      if (!(mass[x][y] >= 0.0)) {
        throw NegativeEntry("joint entry (" + index_str(x) + "," +
                            index_str(y) + ") is " +
                            std::to_string(mass[x][y]) + ", must be >= 0");
      }
      total += mass[x][y];
    }
  }
  if (!(std::abs(total - 1.0) <= Distribution::kSumTolerance)) {
    throw NotNormalized("joint mass sums to " + std::to_string(total) +
                        ", must be 1");
  }
  for (auto& row : mass) {
    for (double& p : row) {
      if (p < Distribution::kZeroClamp) p = 0.0;
    }
  }
  return mass;
}

Distribution x_marginal_of(const std::vector<std::vector<double>>& mass) {
  std::vector<double> v(mass.size(), 0.0);
  for (std::size_t x = 0; x < mass.size(); ++x) {
    for (double p : mass[x]) v[x] += p;
  }
  return Distribution(std::move(v));
}

Distribution y_marginal_of(const std::vector<std::vector<double>>& mass) {
  std::vector<double> v(mass[0].size(), 0.0);
  for (const auto& row : mass) {
    for (std::size_t y = 0; y < row.size(); ++y) v[y] += row[y];
  }
  return Distribution(std::move(v));
}

std::vector<std::optional<Distribution>> posteriors_of(
    const std::vector<std::vector<double>>& mass, const Distribution& y_marg) {
  std::vector<std::optional<Distribution>> out(y_marg.size());
  for (std::size_t y = 0; y < y_marg.size(); ++y) {
    if (y_marg[y] <= 0.0) continue;
    std::vector<double> col(mass.size());
    for (std::size_t x = 0; x < mass.size(); ++x) col[x] = mass[x][y] / y_marg[y];
    out[y].emplace(std::move(col));
  }
  return out;
}

}  // namespace

Joint::Joint(std::vector<std::vector<double>> mass)
    : mass_(validated_mass(std::move(mass))),
      x_marginal_(x_marginal_of(mass_)),
      y_marginal_(y_marginal_of(mass_)),
      posteriors_(posteriors_of(mass_, y_marginal_)) {}

const Distribution& Joint::posterior(std::size_t y) const {
  if (y >= posteriors_.size()) {
    throw DimensionMismatch("posterior column " + index_str(y) +
                            " out of range");
  }
  if (!posteriors_[y].has_value()) {
    throw EmptySupport("column " + index_str(y) +
                       " has zero marginal, posterior undefined");
  }
  return *posteriors_[y];
}

Distribution Joint::flattened() const {
  std::vector<double> flat;
  flat.reserve(x_size() * y_size());
  for (const auto& row : mass_) flat.insert(flat.end(), row.begin(), row.end());
  return Distribution(std::move(flat));
}

Joint joint_from(const Distribution& prior, const Channel& channel) {
  if (prior.size() != channel.in_size()) {
    throw DimensionMismatch("prior has " + index_str(prior.size()) +
                            " entries but channel has " +
                            index_str(channel.in_size()) + " inputs");
  }
  std::vector<std::vector<double>> mass(prior.size());
  for (std::size_t x = 0; x < prior.size(); ++x) {
    mass[x].resize(channel.out_size());
    for (std::size_t y = 0; y < channel.out_size(); ++y) {
      mass[x][y] = prior[x] * channel.prob(x, y);
    }
  }
  return Joint(std::move(mass));
}

Channel product_channel(const Channel& w1, const Channel& w2) {
  if (w1.in_size() != w2.in_size()) {
    throw DimensionMismatch("factors have " + index_str(w1.in_size()) +
                            " and " + index_str(w2.in_size()) + " inputs");
  }
  const std::size_t m1 = w1.out_size();
  const std::size_t m2 = w2.out_size();
  std::vector<std::vector<double>> rows(w1.in_size());
  for (std::size_t x = 0; x < w1.in_size(); ++x) {
    rows[x].resize(m1 * m2);
    for (std::size_t y1 = 0; y1 < m1; ++y1) {
      for (std::size_t y2 = 0; y2 < m2; ++y2) {
        rows[x][y1 * m2 + y2] = w1.prob(x, y1) * w2.prob(x, y2);
      }
    }
  }
  return Channel(std::move(rows));
}

Channel cascade_channel(const Channel& w1, const Channel& w2) {
  if (w1.out_size() != w2.in_size()) {
    throw DimensionMismatch("first stage has " + index_str(w1.out_size()) +
                            " outputs but second stage has " +
                            index_str(w2.in_size()) + " inputs");
  }
  std::vector<std::vector<double>> rows(w1.in_size());
  for (std::size_t x = 0; x < w1.in_size(); ++x) {
    rows[x].assign(w2.out_size(), 0.0);
    for (std::size_t y = 0; y < w1.out_size(); ++y) {
      const double wy = w1.prob(x, y);
      if (wy == 0.0) continue;
      for (std::size_t z = 0; z < w2.out_size(); ++z) {
        rows[x][z] += wy * w2.prob(y, z);
      }
    }
  }
  return Channel(std::move(rows));
}

std::pair<Channel, Distribution> reverse_deterministic_channel(
    std::span<const std::size_t> x_of_y, const Distribution& out_dist) {
  if (x_of_y.size() != out_dist.size()) {
    throw DimensionMismatch("map covers " + index_str(x_of_y.size()) +
                            " outputs but the distribution has " +
                            index_str(out_dist.size()));
  }
  std::size_t nx = 0;
  for (std::size_t x : x_of_y) nx = std::max(nx, x + 1);
  std::vector<double> induced(nx, 0.0);
  for (std::size_t y = 0; y < x_of_y.size(); ++y) induced[x_of_y[y]] += out_dist[y];
  for (std::size_t x = 0; x < nx; ++x) {
    if (induced[x] <= 0.0) {
      throw UncoveredX("input symbol " + index_str(x) +
                       " receives zero mass under the reverse map");
    }
  }
  std::vector<std::vector<double>> rows(nx);
  for (std::size_t x = 0; x < nx; ++x) rows[x].assign(out_dist.size(), 0.0);
  for (std::size_t y = 0; y < x_of_y.size(); ++y) {
    rows[x_of_y[y]][y] = out_dist[y] / induced[x_of_y[y]];
  }
  return {Channel(std::move(rows)), Distribution(std::move(induced))};
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Distribution random_distribution(std::mt19937_64& rng, std::size_t n) {
  if (n == 0) throw EmptyInput("random distribution needs n >= 1");
  std::vector<double> v(n);
  double sum = 0.0;
  for (double& e : v) {
    // Unit-rate exponential via inverse CDF; log1p keeps small deviates
    // accurate.
    e = -std::log1p(-uniform_unit(rng));
    sum += e;
  }
  for (double& e : v) e /= sum;
  return Distribution(std::move(v));
}

Channel random_channel(std::mt19937_64& rng, std::size_t in_size,
                       std::size_t out_size) {
  std::vector<Distribution> rows;
  rows.reserve(in_size);
  for (std::size_t x = 0; x < in_size; ++x) {
    rows.push_back(random_distribution(rng, out_size));
  }
  return Channel(std::move(rows));
}

}  // namespace alphaleak
