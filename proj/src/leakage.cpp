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

#include "alphaleak/leakage.hpp"

#include <cmath>
#include <vector>

#include "logsum.hpp"

namespace alphaleak {
namespace {

constexpr double kPosInf = std::numeric_limits<double>::infinity();

void require_leakage_order(AlphaOrder alpha) {
  if (alpha.is_finite() && alpha.finite_value() < 1.0) {
    throw AlphaOutOfRange("leakage orders below 1 are not defined, got " +
                          std::to_string(alpha.finite_value()));
  }
}

}  // namespace

Distribution tilt_distribution(const Distribution& source, AlphaOrder alpha) {
  switch (alpha.tag()) {
    case AlphaOrder::Tag::kOne:
      return source;
    case AlphaOrder::Tag::kInfinity:
      return Distribution::point_mass(source.size(), source.argmax());
    case AlphaOrder::Tag::kFinite: {
      const double a = alpha.finite_value();
      std::vector<double> logs;
      logs.reserve(source.support().size());
      for (std::size_t i : source.support()) {
        logs.push_back(a * std::log(source[i]));
      }
      const double z = detail::log_sum_exp(logs);
      std::vector<double> out(source.size(), 0.0);
      for (std::size_t k = 0; k < source.support().size(); ++k) {
        out[source.support()[k]] = std::exp(logs[k] - z);
      }
      return Distribution(std::move(out));
    }
  }
  throw Error("unreachable alpha tag");
}

Estimator optimal_estimator(const Distribution& source, AlphaOrder alpha) {
  return Estimator{Estimator::Kind::kPrior, 0, tilt_distribution(source, alpha),
                   alpha};
}

double expected_alpha_loss(const Distribution& truth,
                           const Distribution& guess, AlphaOrder alpha) {
  if (truth.size() != guess.size()) {
    throw DimensionMismatch("truth has " + std::to_string(truth.size()) +
                            " entries but guess has " +
                            std::to_string(guess.size()));
  }
  require_leakage_order(alpha);
  switch (alpha.tag()) {
    case AlphaOrder::Tag::kOne: {
      double loss = 0.0;
      for (std::size_t i : truth.support()) {
        if (guess[i] == 0.0) return kPosInf;
        loss -= truth[i] * std::log(guess[i]);
      }
      return loss;
    }
    case AlphaOrder::Tag::kInfinity: {
      double reward = 0.0;
      for (std::size_t i : truth.support()) reward += truth[i] * guess[i];
      return 1.0 - reward;
    }
    case AlphaOrder::Tag::kFinite: {
      const double a = alpha.finite_value();
      const double c = a / (a - 1.0);
      double loss = 0.0;
      for (std::size_t i : truth.support()) {
        loss += truth[i] * c * (1.0 - std::pow(guess[i], (a - 1.0) / a));
      }
      return loss;
    }
  }
  throw Error("unreachable alpha tag");
}

namespace {

// Operational evaluation at order one: the drop in expected log-loss between
// guessing from the prior and guessing from the observed posterior.
LeakageReport operational_one(const Distribution& prior,
                              const Channel& channel) {
  const Joint joint = joint_from(prior, channel);
  const AlphaOrder one = AlphaOrder::one();
  const double prior_loss =
      expected_alpha_loss(prior, tilt_distribution(prior, one), one);
  double posterior_loss = 0.0;
  for (std::size_t y = 0; y < joint.y_size(); ++y) {
    if (!joint.has_posterior(y)) continue;
    const Distribution& post = joint.posterior(y);
    posterior_loss += joint.y_marginal()[y] *
                      expected_alpha_loss(post, tilt_distribution(post, one), one);
  }
  return {prior_loss - posterior_loss,
          one,
          LeakageMethod::kOperationalRatio,
          {{"prior_loss", prior_loss}, {"posterior_loss", posterior_loss}}};
}

// Order infinity: log of the ratio of correct-guess probabilities with and
// without the observation.
LeakageReport operational_infinity(const Distribution& prior,
                                   const Channel& channel) {
  const Joint joint = joint_from(prior, channel);
  const AlphaOrder inf = AlphaOrder::infinity();
  double num = 0.0;
  for (std::size_t y = 0; y < joint.y_size(); ++y) {
    if (!joint.has_posterior(y)) continue;
    const Distribution& post = joint.posterior(y);
    const Distribution guess = tilt_distribution(post, inf);
    double reward = 0.0;
    for (std::size_t x : post.support()) reward += post[x] * guess[x];
    num += joint.y_marginal()[y] * reward;
  }
  const Distribution guess = tilt_distribution(prior, inf);
  double den = 0.0;
  for (std::size_t x : prior.support()) den += prior[x] * guess[x];
  return {std::log(num) - std::log(den),
          inf,
          LeakageMethod::kOperationalRatio,
          {{"numerator", num}, {"denominator", den}}};
}

// Finite orders: ratio of maximal expected rewards, the reward being the
// complement of the alpha-loss. Plain column-by-column arithmetic; this is
// deliberately a different numeric path from the mutual-information form.
LeakageReport operational_finite(const Distribution& prior,
                                 const Channel& channel, AlphaOrder alpha) {
  const double a = alpha.finite_value();
  const double expo = (a - 1.0) / a;
  const Joint joint = joint_from(prior, channel);
  double num = 0.0;
  for (std::size_t y = 0; y < joint.y_size(); ++y) {
    if (!joint.has_posterior(y)) continue;
    const Distribution& post = joint.posterior(y);
    const Distribution guess = tilt_distribution(post, alpha);
    double reward = 0.0;
    for (std::size_t x : post.support()) {
      reward += post[x] * std::pow(guess[x], expo);
    }
    num += joint.y_marginal()[y] * reward;
  }
  const Distribution guess = tilt_distribution(prior, alpha);
  double den = 0.0;
  for (std::size_t x : prior.support()) {
    den += prior[x] * std::pow(guess[x], expo);
  }
  return {a / (a - 1.0) * (std::log(num) - std::log(den)),
          alpha,
          LeakageMethod::kOperationalRatio,
          {{"numerator", num}, {"denominator", den}}};
}

}  // namespace

LeakageReport alpha_leakage(const Distribution& prior, const Channel& channel,
                            AlphaOrder alpha, LeakageMethod method) {
  require_leakage_order(alpha);
  if (method == LeakageMethod::kArimotoIdentity) {
    const MeasureValue v = arimoto_mi(prior, channel, alpha);
    return {v.nats,
            alpha,
            method,
            {{"arimoto_mi_nats", v.nats}}};
  }
  if (prior.size() != channel.in_size()) {
    throw DimensionMismatch("prior has " + std::to_string(prior.size()) +
                            " entries but channel has " +
                            std::to_string(channel.in_size()) + " inputs");
  }
  switch (alpha.tag()) {
    case AlphaOrder::Tag::kOne:
      return operational_one(prior, channel);
    case AlphaOrder::Tag::kInfinity:
      return operational_infinity(prior, channel);
    case AlphaOrder::Tag::kFinite:
      return operational_finite(prior, channel, alpha);
  }
  throw Error("unreachable alpha tag");
}

}  // namespace alphaleak
