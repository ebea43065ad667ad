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
#include <map>
#include <string>

#include "alphaleak/measures.hpp"

namespace alphaleak {

// Tilted distribution with entries proportional to source(x)^alpha; the
// reward-maximizing randomized guess under the alpha-loss. Order one returns
// the source itself, order infinity a point mass on the argmax (lowest index
// wins ties). Computed in the log domain so large orders stay finite.
Distribution tilt_distribution(const Distribution& source, AlphaOrder alpha);

struct Estimator {
  enum class Kind { kPrior, kPosteriorColumn };

  Kind kind;
  // Observed column; meaningful only for kPosteriorColumn.
  std::size_t column;
  Distribution dist;
  AlphaOrder alpha;
};

// The loss-minimizing estimator for a truth drawn from `source`: the tilt of
// the source at the given order.
Estimator optimal_estimator(const Distribution& source, AlphaOrder alpha);

// Expected alpha-loss of announcing `guess` for a truth drawn from `truth`:
//   E[(alpha/(alpha-1)) (1 - guess(X)^((alpha-1)/alpha))].
// The log-loss E[-log guess(X)] at order one (+infinity if the guess misses
// part of the truth's support) and the 0-1 loss 1 - E[guess(X)] at order
// infinity. Orders below one are rejected.
double expected_alpha_loss(const Distribution& truth,
                           const Distribution& guess, AlphaOrder alpha);

enum class LeakageMethod {
  // Evaluate the Arimoto mutual information of the prior and channel.
  kArimotoIdentity,
  // Evaluate the operational definition directly: the multiplicative gain in
  // maximal expected reward from observing the output, one posterior column
  // at a time, with the tilted estimators plugged in.
  kOperationalRatio,
};

struct LeakageReport {
  double nats;
  AlphaOrder alpha;
  LeakageMethod method;
  // Free-form numeric diagnostics for rendering (intermediate numerators,
  // losses, and similar).
  std::map<std::string, double> diagnostics;
};

// Alpha-leakage from X to Y for orders in [1, infinity]; orders below one are
// rejected with AlphaOutOfRange. The two methods agree to within numerical
// error; kOperationalRatio exists as an independently coded cross-check.
LeakageReport alpha_leakage(const Distribution& prior, const Channel& channel,
                            AlphaOrder alpha,
                            LeakageMethod method = LeakageMethod::kArimotoIdentity);

}  // namespace alphaleak
