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

#include "alphaleak/alpha_order.hpp"
#include "alphaleak/prob.hpp"

namespace alphaleak {

// A measure evaluated in nats, tagged with the order it was evaluated at.
// Unit conversion (1 nat = 1/ln 2 bits) is left to presentation layers.
struct MeasureValue {
  double nats;
  AlphaOrder alpha;
};

// Renyi entropy H_alpha(p) = (1/(1-alpha)) log sum_x p(x)^alpha, with the
// Shannon entropy at order one and the min-entropy -log max_x p(x) at order
// infinity. Sums run over the support only and in the log domain, so large
// orders do not underflow.
MeasureValue renyi_entropy(const Distribution& p, AlphaOrder alpha);

// Renyi divergence
//   D_alpha(p||q) = (1/(alpha-1)) log sum_x p(x)^alpha q(x)^(1-alpha),
// Kullback-Leibler at order one and log max_{p(x)>0} p(x)/q(x) at infinity.
// Returns +infinity when p puts mass outside q's support and the order makes
// that term infinite (every order >= 1).
MeasureValue renyi_divergence(const Distribution& p, const Distribution& q,
                              AlphaOrder alpha);

// Arimoto conditional entropy of a joint mass:
//   H_alpha(X|Y) = (alpha/(1-alpha)) log sum_y (sum_x P(x,y)^alpha)^(1/alpha)
// with the Shannon conditional entropy at order one and
// -log sum_y max_x P(x,y) at order infinity.
MeasureValue arimoto_cond_entropy(const Joint& joint, AlphaOrder alpha);

// Sibson mutual information of order alpha, in closed form:
//   I_alpha(P, W) = (alpha/(alpha-1)) log sum_y (sum_x P(x) W(y|x)^alpha)^(1/alpha).
// Order one is the Shannon mutual information; order infinity is
// log sum_y max_{x in supp P} W(y|x), the maximal leakage of the channel
// restricted to the prior's support.
MeasureValue sibson_mi(const Distribution& prior, const Channel& channel,
                       AlphaOrder alpha);

// Arimoto mutual information I_alpha(P, W) = H_alpha(X) - H_alpha(X|Y),
// evaluated through the equivalent single-ratio form so the two entropy
// terms never get subtracted at large orders.
MeasureValue arimoto_mi(const Distribution& prior, const Channel& channel,
                        AlphaOrder alpha);

}  // namespace alphaleak
