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

#include "alphaleak/measures.hpp"

#include <cmath>
#include <vector>

#include "logsum.hpp"

namespace alphaleak {
namespace {

using detail::kNegInf;
using detail::log_sum_exp;

constexpr double kPosInf = std::numeric_limits<double>::infinity();

void require_same_size(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("distributions have sizes " +
                            std::to_string(p.size()) + " and " +
                            std::to_string(q.size()));
  }
}

void require_compatible(const Distribution& prior, const Channel& channel) {
  if (prior.size() != channel.in_size()) {
    throw DimensionMismatch("prior has " + std::to_string(prior.size()) +
                            " entries but channel has " +
                            std::to_string(channel.in_size()) + " inputs");
  }
}

double shannon_entropy(const Distribution& p) {
  double h = 0.0;
  for (std::size_t i : p.support()) h -= p[i] * std::log(p[i]);
  return h;
}

double shannon_mi(const Distribution& prior, const Channel& w) {
  const Joint joint = joint_from(prior, w);
  const Distribution& py = joint.y_marginal();
  double mi = 0.0;
  for (std::size_t x : prior.support()) {
    for (std::size_t y = 0; y < w.out_size(); ++y) {
      const double m = joint.mass(x, y);
      if (m > 0.0) mi += m * std::log(m / (prior[x] * py[y]));
    }
  }
  return mi;
}

double shannon_cond_entropy(const Joint& joint) {
  const Distribution& py = joint.y_marginal();
  double h = 0.0;
  for (std::size_t x = 0; x < joint.x_size(); ++x) {
    for (std::size_t y = 0; y < joint.y_size(); ++y) {
      const double m = joint.mass(x, y);
      if (m > 0.0) h -= m * std::log(m / py[y]);
    }
  }
  return h;
}

}  // namespace

MeasureValue renyi_entropy(const Distribution& p, AlphaOrder alpha) {
  switch (alpha.tag()) {
    case AlphaOrder::Tag::kOne:
      return {shannon_entropy(p), alpha};
    case AlphaOrder::Tag::kInfinity:
      return {-std::log(p.max_prob()), alpha};
    case AlphaOrder::Tag::kFinite: {
      const double a = alpha.finite_value();
      std::vector<double> terms;
      terms.reserve(p.support().size());
      for (std::size_t i : p.support()) terms.push_back(a * std::log(p[i]));
      return {log_sum_exp(terms) / (1.0 - a), alpha};
    }
  }
  throw Error("unreachable alpha tag");
}

MeasureValue renyi_divergence(const Distribution& p, const Distribution& q,
                              AlphaOrder alpha) {
  require_same_size(p, q);
  switch (alpha.tag()) {
    case AlphaOrder::Tag::kOne: {
      double d = 0.0;
      for (std::size_t i : p.support()) {
        if (q[i] == 0.0) return {kPosInf, alpha};
        d += p[i] * std::log(p[i] / q[i]);
      }
      return {d, alpha};
    }
    case AlphaOrder::Tag::kInfinity: {
      double worst = 0.0;
      for (std::size_t i : p.support()) {
        if (q[i] == 0.0) return {kPosInf, alpha};
        worst = std::max(worst, p[i] / q[i]);
      }
      return {std::log(worst), alpha};
    }
    case AlphaOrder::Tag::kFinite: {
      const double a = alpha.finite_value();
      if (a > 1.0) {
        for (std::size_t i : p.support()) {
          if (q[i] == 0.0) return {kPosInf, alpha};
        }
      }
      std::vector<double> terms;
      terms.reserve(p.support().size());
      for (std::size_t i : p.support()) {
        // For a < 1 a zero q entry contributes an exact zero term.
        if (q[i] > 0.0) {
          terms.push_back(a * std::log(p[i]) + (1.0 - a) * std::log(q[i]));
        }
      }
      return {log_sum_exp(terms) / (a - 1.0), alpha};
    }
  }
  throw Error("unreachable alpha tag");
}

MeasureValue arimoto_cond_entropy(const Joint& joint, AlphaOrder alpha) {
  switch (alpha.tag()) {
    case AlphaOrder::Tag::kOne:
      return {shannon_cond_entropy(joint), alpha};
    case AlphaOrder::Tag::kInfinity: {
      double s = 0.0;
      for (std::size_t y = 0; y < joint.y_size(); ++y) {
        double col = 0.0;
        for (std::size_t x = 0; x < joint.x_size(); ++x) {
          col = std::max(col, joint.mass(x, y));
        }
        s += col;
      }
      return {-std::log(s), alpha};
    }
    case AlphaOrder::Tag::kFinite: {
      const double a = alpha.finite_value();
      std::vector<double> outer;
      std::vector<double> inner;
      for (std::size_t y = 0; y < joint.y_size(); ++y) {
        inner.clear();
        for (std::size_t x = 0; x < joint.x_size(); ++x) {
          const double m = joint.mass(x, y);
          if (m > 0.0) inner.push_back(a * std::log(m));
        }
        if (inner.empty()) continue;
        outer.push_back(log_sum_exp(inner) / a);
      }
      return {a / (1.0 - a) * log_sum_exp(outer), alpha};
    }
  }
  throw Error("unreachable alpha tag");
}

MeasureValue sibson_mi(const Distribution& prior, const Channel& channel,
                       AlphaOrder alpha) {
  require_compatible(prior, channel);
  switch (alpha.tag()) {
    case AlphaOrder::Tag::kOne:
      return {shannon_mi(prior, channel), alpha};
    case AlphaOrder::Tag::kInfinity: {
      double s = 0.0;
      for (std::size_t y = 0; y < channel.out_size(); ++y) {
        double best = 0.0;
        for (std::size_t x : prior.support()) {
          best = std::max(best, channel.prob(x, y));
        }
        s += best;
      }
      return {std::log(s), alpha};
    }
    case AlphaOrder::Tag::kFinite: {
      const double a = alpha.finite_value();
      std::vector<double> outer;
      std::vector<double> inner;
      for (std::size_t y = 0; y < channel.out_size(); ++y) {
        inner.clear();
        for (std::size_t x : prior.support()) {
          const double w = channel.prob(x, y);
          if (w > 0.0) inner.push_back(std::log(prior[x]) + a * std::log(w));
        }
        if (inner.empty()) continue;
        outer.push_back(log_sum_exp(inner) / a);
      }
      return {a / (a - 1.0) * log_sum_exp(outer), alpha};
    }
  }
  throw Error("unreachable alpha tag");
}

MeasureValue arimoto_mi(const Distribution& prior, const Channel& channel,
                        AlphaOrder alpha) {
  require_compatible(prior, channel);
  switch (alpha.tag()) {
    case AlphaOrder::Tag::kOne:
      return {shannon_mi(prior, channel), alpha};
    case AlphaOrder::Tag::kInfinity: {
      // log of (sum_y max_x P(x) W(y|x)) / max_x P(x).
      double num = 0.0;
      for (std::size_t y = 0; y < channel.out_size(); ++y) {
        double best = 0.0;
        for (std::size_t x : prior.support()) {
          best = std::max(best, prior[x] * channel.prob(x, y));
        }
        num += best;
      }
      return {std::log(num) - std::log(prior.max_prob()), alpha};
    }
    case AlphaOrder::Tag::kFinite: {
      // Single-ratio form:
      //   (alpha/(alpha-1)) log [ sum_y (sum_x P^a W^a)^(1/a) / (sum_x P^a)^(1/a) ].
      const double a = alpha.finite_value();
      std::vector<double> den_terms;
      den_terms.reserve(prior.support().size());
      for (std::size_t x : prior.support()) {
        den_terms.push_back(a * std::log(prior[x]));
      }
      const double log_den = log_sum_exp(den_terms) / a;
      std::vector<double> outer;
      std::vector<double> inner;
      for (std::size_t y = 0; y < channel.out_size(); ++y) {
        inner.clear();
        for (std::size_t x : prior.support()) {
          const double w = channel.prob(x, y);
          if (w > 0.0) {
            inner.push_back(a * (std::log(prior[x]) + std::log(w)));
          }
        }
        if (inner.empty()) continue;
        outer.push_back(log_sum_exp(inner) / a);
      }
      return {a / (a - 1.0) * (log_sum_exp(outer) - log_den), alpha};
    }
  }
  throw Error("unreachable alpha tag");
}

}  // namespace alphaleak
