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

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "alphaleak/capacity.hpp"
#include "alphaleak/leakage.hpp"

namespace alphaleak {

// Default additive slack for inequality checks.
inline constexpr double kDefaultSlack = 1e-8;

// Outcome of one mechanical property check. Inequalities are checked as
// lhs <= rhs + slack; equality-flavored checks additionally require
// rhs <= lhs + slack (the tighter direction is recorded in `slack`).
struct TheoremVerdict {
  std::string theorem_id;
  // FNV-1a over the theorem id and witness; stable across runs.
  std::string instance_digest;
  // Seed of the harness that generated the instance; zero for explicit
  // instances.
  std::uint64_t seed = 0;
  bool passed = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = kDefaultSlack;
  // JSON object holding every input needed to re-run the check.
  std::string witness;
};

std::string to_json_line(const TheoremVerdict& verdict);

// Re-runs the check encoded in a witness. Checks are deterministic given the
// witness, so lhs and rhs reproduce the original bit for bit. Returns every
// verdict the check emits (some checks emit several).
std::vector<TheoremVerdict> replay(const std::string& witness_json);

// Writes the witness to <dir>/witness_<theorem_id>_<digest>.json and returns
// the path.
std::string persist_witness(const TheoremVerdict& verdict,
                            const std::string& dir);

// Maximal alpha-leakage is quasi-convex in the channel: its value at any
// convex combination of w0 and w1 is at most the larger of the endpoint
// values. Checked over the given lambda grid; lhs is the worst mixture value.
TheoremVerdict check_quasiconvexity(const Channel& w0, const Channel& w1,
                                    const Distribution& prior,
                                    AlphaOrder alpha,
                                    std::span<const double> lambda_grid);

// Data-processing under a Markov chain X - Y - Z with Z = w2(Y): leakage to
// Z exceeds neither the leakage to Y nor the leakage from Y to Z. Returns
// the two verdicts in that order.
std::pair<TheoremVerdict, TheoremVerdict> check_dpi(const Channel& w1,
                                                    const Channel& w2,
                                                    const Distribution& prior,
                                                    AlphaOrder alpha);

// Releasing both outputs of two channels leaks at most the sum of the
// individual leakages; the joint release is the product channel.
TheoremVerdict check_composition(const Channel& w1, const Channel& w2,
                                 const Distribution& prior, AlphaOrder alpha);

// Bounds on maximal alpha-leakage: non-negativity, the alphabet-size (or
// prior-entropy, at order one) ceiling, dominance by maximal leakage, the
// uniform-input Sibson lower bound (finite orders above one), and zero
// exactly when the channel is rank one.
std::vector<TheoremVerdict> check_bounds(const Channel& channel,
                                         const Distribution& prior,
                                         AlphaOrder alpha);

// The Sibson mutual information is the infimum over output distributions q
// of the Renyi divergence between the joint and prior x q. Checks that the
// closed form matches the divergence at the minimizing q and lower-bounds it
// at `trials` random q. Valid at order one and finite orders; order infinity
// works too, with column maxima as the minimizing q.
TheoremVerdict check_sibson_infimum(const Distribution& prior,
                                    const Channel& channel, AlphaOrder alpha,
                                    int trials, std::uint64_t seed = 0);

// A shattering of X into copies_per_x[x] lookalikes per symbol, weighted so
// that the Arimoto mutual information of the lifted source equals the Sibson
// mutual information of `target` through the original channel.
struct ShatterSpec {
  std::vector<std::size_t> copies_per_x;
  // Source over the lifted alphabet U (blocks in x order, copies adjacent).
  Distribution u_weights;
  // Input distribution induced on X by the lifted source: proportional to
  // the within-block sum of u_weights(u)^alpha.
  Distribution induced_x_tilde;
  // Block membership: x_of_u[u] is the x a lookalike belongs to.
  std::vector<std::size_t> x_of_u;
};

// Builds the shattering for the given target (its support must lie inside
// the prior's support, else InfeasibleTarget) and checks the equality of the
// two mutual informations. Valid at order one, finite orders above one, and
// order infinity; at infinity block weights are proportional to block sizes
// and only the equality of the informations is meaningful.
std::pair<ShatterSpec, TheoremVerdict> shatter_construction(
    const Distribution& prior, const Channel& channel,
    const Distribution& target, std::span<const std::size_t> copies_per_x,
    AlphaOrder alpha);

}  // namespace alphaleak
