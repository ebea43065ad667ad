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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "alphaleak/measures.hpp"

namespace alphaleak {

struct SolveOptions {
  // Per-start cap on ascent iterations; the Newton refinement runs only when
  // the best start finished under this budget.
  std::uint64_t max_iterations = 100000;
  // Objective improvements below this no longer count as progress.
  double objective_tol = 1e-12;
  // Converged iff the KKT residual at the returned point is below this.
  double kkt_tol = 1e-8;
  // Random restarts in addition to the deterministic uniform start.
  int random_restarts = 5;
  std::uint64_t seed = 0;
};

struct CapacityResult {
  double nats;
  // Maximizing input over the full input alphabet (zero off the support).
  Distribution argmax_input;
  AlphaOrder alpha;
  std::uint64_t iterations;
  double kkt_residual;
  bool converged;
  std::map<std::string, double> diagnostics;
};

// log sum_y max_{x in support} W(y|x): the maximal leakage of the channel
// restricted to inputs in `support`.
double maxl(const Channel& channel, std::span<const std::size_t> support);

// Sibson mutual information at the uniform input, evaluated in closed form.
// Lower-bounds the order-alpha capacity and is tight for symmetric channels.
// Finite orders above one only.
double uniform_sibson_lower_bound(const Channel& channel, AlphaOrder alpha);

// The capacity objective and its exact gradient over nonnegative weight
// vectors indexed by `support`. Weights need not be normalized: scaling all
// weights by c shifts the objective by (1/(alpha-1)) log c, which makes the
// analytic gradient checkable against plain finite differences coordinate by
// coordinate. On the simplex the objective equals the Sibson mutual
// information.
double sibson_objective(const Channel& channel,
                        std::span<const std::size_t> support, double alpha,
                        std::span<const double> weights);
std::vector<double> sibson_gradient(const Channel& channel,
                                    std::span<const std::size_t> support,
                                    double alpha,
                                    std::span<const double> weights);

// Maximizes the order-alpha Sibson mutual information over input
// distributions supported in `support`, by multiplicative (exponentiated)
// gradient ascent with adaptive step size, followed by an active-set Newton
// refinement on the face the ascent settles on. The objective is concave in
// the input for alpha > 1, so a vanishing KKT residual certifies the global
// maximum; the seeded random restarts only hedge against slow starts.
// Finite orders above one only.
CapacityResult solve_alpha_capacity(const Channel& channel,
                                    std::span<const std::size_t> support,
                                    AlphaOrder alpha,
                                    const SolveOptions& opts = {});

// Brute-force verification oracle: exhaustive simplex lattice of the given
// resolution followed by derivative-free pattern-search refinement around the
// best lattice point. Resolution is capped below at 1e-3 and the support at
// four symbols to keep the lattice enumerable.
double grid_oracle_capacity(const Channel& channel,
                            std::span<const std::size_t> support,
                            AlphaOrder alpha, double resolution);

// Maximal alpha-leakage of the channel for a source with the given prior:
// the Shannon mutual information of the prior itself at order one, the
// Sibson capacity constrained to the prior's support for finite orders above
// one, and the closed-form maximal leakage over the prior's support at order
// infinity. Orders below one are rejected.
CapacityResult maximal_alpha_leakage(const Distribution& prior,
                                     const Channel& channel, AlphaOrder alpha,
                                     const SolveOptions& opts = {});

}  // namespace alphaleak
