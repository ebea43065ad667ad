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

#include "alphaleak/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "logsum.hpp"

namespace alphaleak {
namespace {

using detail::kNegInf;

// Weights below this are treated as inactive in the KKT residual: the
// first-order condition there is an inequality, not an equality.
constexpr double kActiveTol = 1e-12;
constexpr double kEtaMin = 1e-18;
constexpr double kEtaMax = 1e6;

void require_support(const Channel& channel,
                     std::span<const std::size_t> support) {
  if (support.empty()) throw EmptySupport("support set is empty");
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (support[k] >= channel.in_size()) {
      throw DimensionMismatch("support index " + std::to_string(support[k]) +
                              " out of range for channel with " +
                              std::to_string(channel.in_size()) + " inputs");
    }
    if (k > 0 && support[k] <= support[k - 1]) {
      throw Error("support indices must be strictly increasing");
    }
  }
}

double require_finite_above_one(AlphaOrder alpha) {
  if (!alpha.is_finite() || alpha.finite_value() <= 1.0) {
    throw AlphaOutOfRange("a finite order above 1 is required here");
  }
  return alpha.finite_value();
}

// Log-domain evaluator for the capacity objective
//   f(w) = (a/(a-1)) log sum_y (sum_i w_i W(y|x_i)^a)^(1/a)
// over nonnegative weights w indexed by the support. Columns where every
// supported input has zero probability contribute nothing.
class SibsonEval {
 public:
  SibsonEval(const Channel& channel, std::span<const std::size_t> support,
             double a)
      : d_(support.size()), m_(channel.out_size()), a_(a),
        alogw_(d_ * m_), lw_(d_), ly_(m_) {
    for (std::size_t i = 0; i < d_; ++i) {
      for (std::size_t y = 0; y < m_; ++y) {
        const double w = channel.prob(support[i], y);
        alogw_[i * m_ + y] = w > 0.0 ? a * std::log(w) : kNegInf;
      }
    }
  }

  std::size_t dim() const { return d_; }

  double order() const { return a_; }

  // Recomputes the per-column logs for the given weights and returns
  // log sum_y (S_y)^(1/a).
  double refresh(std::span<const double> w) {
    for (std::size_t i = 0; i < d_; ++i) {
      lw_[i] = w[i] > 0.0 ? std::log(w[i]) : kNegInf;
    }
    double outer_max = kNegInf;
    for (std::size_t y = 0; y < m_; ++y) {
      double mx = kNegInf;
      for (std::size_t i = 0; i < d_; ++i) {
        mx = std::max(mx, lw_[i] + alogw_[i * m_ + y]);
      }
      if (mx == kNegInf) {
        ly_[y] = kNegInf;
        continue;
      }
      double s = 0.0;
      for (std::size_t i = 0; i < d_; ++i) {
        const double t = lw_[i] + alogw_[i * m_ + y];
        if (t != kNegInf) s += std::exp(t - mx);
      }
      ly_[y] = (mx + std::log(s)) / a_;
      outer_max = std::max(outer_max, ly_[y]);
    }
    double g = 0.0;
    for (std::size_t y = 0; y < m_; ++y) {
      if (ly_[y] != kNegInf) g += std::exp(ly_[y] - outer_max);
    }
    logg_ = outer_max + std::log(g);
    return logg_;
  }

  double objective(std::span<const double> w) {
    return a_ / (a_ - 1.0) * refresh(w);
  }

  // Exact partial derivatives at w; also refreshes the column cache.
  void gradient(std::span<const double> w, std::span<double> out) {
    const double logg = refresh(w);
    for (std::size_t i = 0; i < d_; ++i) {
      double mx = kNegInf;
      for (std::size_t y = 0; y < m_; ++y) {
        const double la = alogw_[i * m_ + y];
        if (la == kNegInf || ly_[y] == kNegInf) continue;
        mx = std::max(mx, (1.0 - a_) * ly_[y] + la);
      }
      if (mx == kNegInf) {
        out[i] = 0.0;
        continue;
      }
      double s = 0.0;
      for (std::size_t y = 0; y < m_; ++y) {
        const double la = alogw_[i * m_ + y];
        if (la == kNegInf || ly_[y] == kNegInf) continue;
        s += std::exp((1.0 - a_) * ly_[y] + la - mx);
      }
      out[i] = std::exp(mx + std::log(s) - logg) / (a_ - 1.0);
    }
  }

  // Curvature kernel B_ij = sum_y exp(a log W_iy + a log W_jy
  // + (1-2a) log(S_y)/a - log g), evaluated at the weights of the last
  // refresh. The Hessian of the objective is -(B_ij + (a-1) g_i g_j)/a,
  // negative semidefinite for a > 1. Clamped to stay finite when a released
  // weight dominates a nearly dead column.
  double pair_term(std::size_t i, std::size_t j) const {
    double mx = kNegInf;
    for (std::size_t y = 0; y < m_; ++y) {
      if (ly_[y] == kNegInf) continue;
      const double la = alogw_[i * m_ + y];
      const double lb = alogw_[j * m_ + y];
      if (la == kNegInf || lb == kNegInf) continue;
      mx = std::max(mx, la + lb + (1.0 - 2.0 * a_) * ly_[y] - logg_);
    }
    if (mx == kNegInf) return 0.0;
    double s = 0.0;
    for (std::size_t y = 0; y < m_; ++y) {
      if (ly_[y] == kNegInf) continue;
      const double la = alogw_[i * m_ + y];
      const double lb = alogw_[j * m_ + y];
      if (la == kNegInf || lb == kNegInf) continue;
      s += std::exp(la + lb + (1.0 - 2.0 * a_) * ly_[y] - logg_ - mx);
    }
    const double ls = mx + std::log(s);
    return std::exp(std::min(ls, 690.0));
  }

 private:
  std::size_t d_, m_;
  double a_;
  std::vector<double> alogw_;
  std::vector<double> lw_;
  std::vector<double> ly_;
  double logg_ = kNegInf;
};

double kkt_residual_of(std::span<const double> w, std::span<const double> g) {
  double lambda = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) lambda += w[i] * g[i];
  double res = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > kActiveTol) {
      res = std::max(res, std::abs(g[i] - lambda));
    } else {
      res = std::max(res, std::max(g[i] - lambda, 0.0));
    }
  }
  return res;
}

struct EgRun {
  std::vector<double> w;
  double f = kNegInf;
  double kkt = std::numeric_limits<double>::infinity();
  std::uint64_t iterations = 0;
  bool converged = false;
};

// Exponentiated-gradient ascent from one start. Steps multiply each weight by
// exp(eta * gradient) and renormalize; a step that lowers the objective is
// rejected and eta halved, a successful step grows eta. Additive shifts of
// the gradient cancel in the update, so the step is insensitive to the
// 1/(alpha-1) offset blowing up near order one. The ascent is first order
// only, so on an ill-conditioned instance the residual can crawl; rather
// than burn the whole budget it stops once a 400-iteration window improves
// the residual by less than half a percent and leaves the rest to the
// Newton refinement.
constexpr std::uint64_t kStallWindow = 400;

EgRun run_eg(SibsonEval& eval, std::vector<double> w,
             const SolveOptions& opts) {
  const std::size_t d = w.size();
  std::vector<double> grad(d), cand(d);
  EgRun run;
  double f = eval.objective(w);
  double eta = 1.0;
  double last_improve = std::numeric_limits<double>::infinity();
  double block_min = std::numeric_limits<double>::infinity();
  double prev_block_min = std::numeric_limits<double>::infinity();
  std::uint64_t it = 0;
  for (; it < opts.max_iterations; ++it) {
    eval.gradient(w, grad);
    const double kkt = kkt_residual_of(w, grad);
    if (last_improve < opts.objective_tol && kkt < opts.kkt_tol) {
      run.converged = true;
      break;
    }
    block_min = std::min(block_min, kkt);
    if ((it + 1) % kStallWindow == 0) {
      if (block_min > 0.995 * prev_block_min) break;
      prev_block_min = block_min;
      block_min = std::numeric_limits<double>::infinity();
    }
    double gmax = kNegInf;
    for (std::size_t i = 0; i < d; ++i) {
      if (w[i] > 0.0) gmax = std::max(gmax, grad[i]);
    }
    bool stepped = false;
    while (eta >= kEtaMin) {
      double z = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        cand[i] = w[i] > 0.0 ? w[i] * std::exp(eta * (grad[i] - gmax)) : 0.0;
        z += cand[i];
      }
      for (std::size_t i = 0; i < d; ++i) cand[i] /= z;
      const double fc = eval.objective(cand);
      if (fc >= f) {
        last_improve = fc - f;
        w.swap(cand);
        f = fc;
        eta = std::min(eta * 1.2, kEtaMax);
        stepped = true;
        break;
      }
      eta *= 0.5;
    }
    if (!stepped) break;  // no admissible step at machine precision
  }
  run.iterations = it;
  // Report the residual at the final iterate, whatever ended the loop.
  eval.gradient(w, grad);
  run.kkt = kkt_residual_of(w, grad);
  run.f = eval.objective(w);
  run.w = std::move(w);
  return run;
}

// In-place Gaussian elimination with partial pivoting. Returns false when a
// pivot vanishes.
bool solve_dense(std::vector<double>& a, std::vector<double>& b,
                 std::size_t n) {
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    }
    if (!(std::abs(a[piv * n + c]) > 0.0)) return false;
    if (piv != c) {
      for (std::size_t k = c; k < n; ++k) std::swap(a[piv * n + k], a[c * n + k]);
      std::swap(b[piv], b[c]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const double m = a[r * n + c] / a[c * n + c];
      if (m == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= m * a[c * n + k];
      b[r] -= m * b[c];
    }
  }
  for (std::size_t r = n; r-- > 0;) {
    double s = b[r];
    for (std::size_t k = r + 1; k < n; ++k) s -= a[r * n + k] * b[k];
    b[r] = s / a[r * n + r];
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (!std::isfinite(b[r])) return false;
  }
  return true;
}

// Equality-constrained Newton refinement on the face the ascent settled on.
// Concavity for a > 1 makes every KKT point the global maximum, so the only
// job left after the multiplicative ascent is to sharpen the certificate;
// Newton does that quadratically where the first-order ascent crawls.
// Returns the number of Newton iterations; `run` is updated only when the
// refined point certifies at least as well.
std::uint64_t newton_polish(SibsonEval& eval, EgRun& run,
                            const SolveOptions& opts) {
  const std::size_t d = run.w.size();
  if (d < 2 || d > 256) return 0;
  constexpr std::uint64_t kMaxPolish = 60;
  const double a = eval.order();
  const double kkt_floor = std::max(1e-14, 1e-2 * opts.kkt_tol);
  std::vector<double> w = run.w;
  std::vector<double> grad(d), delta(d), cand(d), gls(d);
  double f = eval.objective(w);
  // Evaluating the objective carries noise on the order of eps * a/(a-1);
  // near order one the gain of a certificate-sharpening step sits below it,
  // so such steps are judged by the KKT residual instead.
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() *
                       (a / (a - 1.0) + std::abs(f) + 1.0);
  double best_kkt = std::numeric_limits<double>::infinity();
  int no_gain = 0;
  std::uint64_t used = 0;
  for (; used < kMaxPolish; ++used) {
    eval.gradient(w, grad);
    const double kkt = kkt_residual_of(w, grad);
    if (kkt <= kkt_floor) break;
    if (kkt >= 0.9 * best_kkt) {
      if (++no_gain >= 3) break;
    } else {
      no_gain = 0;
    }
    best_kkt = std::min(best_kkt, kkt);

    double lambda = 0.0;
    for (std::size_t i = 0; i < d; ++i) lambda += w[i] * grad[i];
    std::vector<std::size_t> act;
    for (std::size_t i = 0; i < d; ++i) {
      if (w[i] > kActiveTol || grad[i] - lambda > 0.0) act.push_back(i);
    }

    bool stepped = false;
    // Coordinates pinned at zero whose step would go negative get dropped
    // from the face and the system re-solved. Every gradient is taken
    // relative to the multiplier lambda: near order one the raw entries sit
    // around 1/(alpha-1) and their residual structure would drown in
    // cancellation noise. The rank-one (alpha-1) lambda^2 block dropped from
    // the Hessian acts as zero on the constraint plane, so the step is
    // unchanged.
    while (act.size() >= 2) {
      const std::size_t k = act.size();
      const std::size_t n = k + 1;
      std::vector<double> kkt_mat(n * n, 0.0), rhs(n, 0.0);
      double hmax = 0.0;
      for (std::size_t p = 0; p < k; ++p) {
        const double ep = grad[act[p]] - lambda;
        for (std::size_t q = p; q < k; ++q) {
          const double eq = grad[act[q]] - lambda;
          const double h = -(eval.pair_term(act[p], act[q]) +
                             (a - 1.0) * (lambda * (ep + eq) + ep * eq)) /
                           a;
          kkt_mat[p * n + q] = h;
          kkt_mat[q * n + p] = h;
          hmax = std::max(hmax, std::abs(h));
        }
      }
      const double tau = 1e-12 * (1.0 + hmax);
      for (std::size_t p = 0; p < k; ++p) {
        kkt_mat[p * n + p] -= tau;
        kkt_mat[p * n + k] = 1.0;
        kkt_mat[k * n + p] = 1.0;
        rhs[p] = -(grad[act[p]] - lambda);
      }
      if (!solve_dense(kkt_mat, rhs, n)) break;

      double shift = 0.0;
      for (std::size_t p = 0; p < k; ++p) shift += rhs[p];
      shift /= static_cast<double>(k);
      std::fill(delta.begin(), delta.end(), 0.0);
      double ascent = 0.0;
      for (std::size_t p = 0; p < k; ++p) {
        delta[act[p]] = rhs[p] - shift;
        ascent += delta[act[p]] * (grad[act[p]] - lambda);
      }
      if (!(ascent > 0.0)) break;

      double tmax = 1.0;
      std::vector<std::size_t> blocked;
      for (std::size_t p = 0; p < k; ++p) {
        const std::size_t i = act[p];
        if (delta[i] >= 0.0) continue;
        if (w[i] <= 0.0) {
          blocked.push_back(i);
        } else {
          tmax = std::min(tmax, -w[i] / delta[i]);
        }
      }
      if (!blocked.empty()) {
        std::vector<std::size_t> kept;
        for (std::size_t i : act) {
          if (std::find(blocked.begin(), blocked.end(), i) == blocked.end()) {
            kept.push_back(i);
          }
        }
        act.swap(kept);
        continue;
      }

      for (double t = tmax; t > 1e-12; t *= 0.5) {
        double z = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
          cand[i] = std::max(0.0, w[i] + t * delta[i]);
          if (cand[i] < 1e-15) cand[i] = 0.0;
          z += cand[i];
        }
        for (std::size_t i = 0; i < d; ++i) cand[i] /= z;
        const double fc = eval.objective(cand);
        bool accept = fc >= f;
        if (!accept && fc >= f - noise) {
          eval.gradient(cand, gls);
          accept = kkt_residual_of(cand, gls) <= 0.9 * kkt;
        }
        if (accept) {
          w = cand;
          f = fc;
          stepped = true;
          break;
        }
      }
      break;
    }
    if (!stepped) break;
  }

  eval.gradient(w, grad);
  const double kkt = kkt_residual_of(w, grad);
  const double fw = eval.objective(w);
  if (std::isfinite(fw) && kkt <= run.kkt) {
    run.w = std::move(w);
    run.f = fw;
    run.kkt = kkt;
  }
  return used;
}

}  // namespace

double maxl(const Channel& channel, std::span<const std::size_t> support) {
  require_support(channel, support);
  double s = 0.0;
  for (std::size_t y = 0; y < channel.out_size(); ++y) {
    double best = 0.0;
    for (std::size_t x : support) best = std::max(best, channel.prob(x, y));
    s += best;
  }
  return std::log(s);
}

double uniform_sibson_lower_bound(const Channel& channel, AlphaOrder alpha) {
  const double a = require_finite_above_one(alpha);
  const double n = static_cast<double>(channel.in_size());
  std::vector<double> outer;
  std::vector<double> inner;
  for (std::size_t y = 0; y < channel.out_size(); ++y) {
    inner.clear();
    for (std::size_t x = 0; x < channel.in_size(); ++x) {
      const double w = channel.prob(x, y);
      if (w > 0.0) inner.push_back(a * std::log(w));
    }
    if (inner.empty()) continue;
    outer.push_back(detail::log_sum_exp(inner) / a);
  }
  return a / (a - 1.0) *
         (detail::log_sum_exp(outer) - std::log(n) / a);
}

double sibson_objective(const Channel& channel,
                        std::span<const std::size_t> support, double alpha,
                        std::span<const double> weights) {
  require_support(channel, support);
  if (weights.size() != support.size()) {
    throw DimensionMismatch("got " + std::to_string(weights.size()) +
                            " weights for a support of size " +
                            std::to_string(support.size()));
  }
  if (!(alpha > 1.0) || std::isinf(alpha)) {
    throw AlphaOutOfRange("a finite order above 1 is required here");
  }
  SibsonEval eval(channel, support, alpha);
  return eval.objective(weights);
}

std::vector<double> sibson_gradient(const Channel& channel,
                                    std::span<const std::size_t> support,
                                    double alpha,
                                    std::span<const double> weights) {
  require_support(channel, support);
  if (weights.size() != support.size()) {
    throw DimensionMismatch("got " + std::to_string(weights.size()) +
                            " weights for a support of size " +
                            std::to_string(support.size()));
  }
  if (!(alpha > 1.0) || std::isinf(alpha)) {
    throw AlphaOutOfRange("a finite order above 1 is required here");
  }
  SibsonEval eval(channel, support, alpha);
  std::vector<double> out(support.size());
  eval.gradient(weights, out);
  return out;
}

CapacityResult solve_alpha_capacity(const Channel& channel,
                                    std::span<const std::size_t> support,
                                    AlphaOrder alpha,
                                    const SolveOptions& opts) {
  const double a = require_finite_above_one(alpha);
  require_support(channel, support);
  const std::size_t d = support.size();
  SibsonEval eval(channel, support, a);

  std::vector<std::vector<double>> starts;
  starts.push_back(std::vector<double>(d, 1.0 / static_cast<double>(d)));
  std::mt19937_64 rng(opts.seed);
  for (int r = 0; r < opts.random_restarts; ++r) {
    starts.push_back(random_distribution(rng, d).probs());
  }

  EgRun best;
  std::size_t best_start = 0;
  std::uint64_t total_iterations = 0;
  for (std::size_t s = 0; s < starts.size(); ++s) {
    EgRun run = run_eg(eval, starts[s], opts);
    total_iterations += run.iterations;
    if (run.f > best.f) {
      best = std::move(run);
      best_start = s;
    }
  }

  // Refine the winning run unless it exhausted its budget outright, in which
  // case the caller asked to be starved and gets an honest non-converged.
  std::uint64_t polish_iterations = 0;
  if (best.iterations < opts.max_iterations) {
    polish_iterations = newton_polish(eval, best, opts);
    total_iterations += polish_iterations;
  }

  std::vector<double> full(channel.in_size(), 0.0);
  for (std::size_t i = 0; i < d; ++i) full[support[i]] = best.w[i];
  CapacityResult result{best.f,
                        Distribution(std::move(full)),
                        alpha,
                        total_iterations,
                        best.kkt,
                        best.kkt < opts.kkt_tol,
                        {}};
  result.diagnostics["starts"] = static_cast<double>(starts.size());
  result.diagnostics["best_start"] = static_cast<double>(best_start);
  result.diagnostics["best_start_iterations"] =
      static_cast<double>(best.iterations);
  result.diagnostics["polish_iterations"] =
      static_cast<double>(polish_iterations);
  return result;
}

double grid_oracle_capacity(const Channel& channel,
                            std::span<const std::size_t> support,
                            AlphaOrder alpha, double resolution) {
  const double a = require_finite_above_one(alpha);
  require_support(channel, support);
  const std::size_t d = support.size();
  if (d > 4) {
    throw SupportTooLarge("grid oracle handles supports of at most 4, got " +
                          std::to_string(d));
  }
  if (!(resolution >= 1e-3) || !(resolution <= 0.5)) {
    throw Error("grid resolution must lie in [1e-3, 0.5]");
  }
  const long long k = std::llround(1.0 / resolution);
  // Lattice size is C(k+d-1, d-1); keep it enumerable.
  double lattice = 1.0;
  for (std::size_t j = 1; j < d; ++j) {
    lattice *= static_cast<double>(k + static_cast<long long>(j)) /
               static_cast<double>(j);
  }
  if (lattice > 3e6) {
    throw Error("grid resolution too fine for this support size");
  }

  const std::size_t m = channel.out_size();
  std::vector<double> pw(d * m);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t y = 0; y < m; ++y) {
      pw[i * m + y] = std::pow(channel.prob(support[i], y), a);
    }
  }
  const auto eval = [&](const std::vector<double>& p) {
    double acc = 0.0;
    for (std::size_t y = 0; y < m; ++y) {
      double s = 0.0;
      for (std::size_t i = 0; i < d; ++i) s += p[i] * pw[i * m + y];
      if (s > 0.0) acc += std::pow(s, 1.0 / a);
    }
    return a / (a - 1.0) * std::log(acc);
  };

  double best_f = kNegInf;
  std::vector<double> best_p(d, 0.0);
  std::vector<long long> counts(d, 0);
  std::vector<double> point(d, 0.0);
  // Enumerates all length-d compositions of k.
  const auto visit = [&](const auto& self, std::size_t pos,
                         long long remaining) -> void {
    if (pos + 1 == d) {
      counts[pos] = remaining;
      for (std::size_t i = 0; i < d; ++i) {
        point[i] = static_cast<double>(counts[i]) / static_cast<double>(k);
      }
      const double f = eval(point);
      if (f > best_f) {
        best_f = f;
        best_p = point;
      }
      return;
    }
    for (long long c = 0; c <= remaining; ++c) {
      counts[pos] = c;
      self(self, pos + 1, remaining - c);
    }
  };
  visit(visit, 0, k);

  // Pattern search over pairwise mass moves, step halving to the floor.
  double step = resolution;
  std::vector<double> cand(d);
  long long budget = 200000;
  while (step > 1e-9 && budget > 0) {
    bool improved = false;
    for (std::size_t i = 0; i < d && budget > 0; ++i) {
      for (std::size_t j = 0; j < d && budget > 0; ++j) {
        if (i == j || best_p[j] <= 0.0) continue;
        const double delta = std::min(step, best_p[j]);
        cand = best_p;
        cand[j] -= delta;
        cand[i] += delta;
        --budget;
        const double f = eval(cand);
        if (f > best_f) {
          best_f = f;
          best_p = cand;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best_f;
}

CapacityResult maximal_alpha_leakage(const Distribution& prior,
                                     const Channel& channel, AlphaOrder alpha,
                                     const SolveOptions& opts) {
  if (prior.size() != channel.in_size()) {
    throw DimensionMismatch("prior has " + std::to_string(prior.size()) +
                            " entries but channel has " +
                            std::to_string(channel.in_size()) + " inputs");
  }
  switch (alpha.tag()) {
    case AlphaOrder::Tag::kOne: {
      // Order one is prior-dependent: the Shannon mutual information itself.
      const double v = sibson_mi(prior, channel, alpha).nats;
      CapacityResult result{v, prior, alpha, 0, 0.0, true, {}};
      result.diagnostics["closed_form"] = 1.0;
      return result;
    }
    case AlphaOrder::Tag::kInfinity: {
      const double v = maxl(channel, prior.support());
      CapacityResult result{
          v,
          Distribution::uniform_on(prior.size(), prior.support()),
          alpha,
          0,
          0.0,
          true,
          {}};
      result.diagnostics["closed_form"] = 1.0;
      return result;
    }
    case AlphaOrder::Tag::kFinite: {
      if (alpha.finite_value() < 1.0) {
        throw AlphaOutOfRange("maximal alpha-leakage needs an order >= 1");
      }
      return solve_alpha_capacity(channel, prior.support(), alpha, opts);
    }
  }
  throw Error("unreachable alpha tag");
}

}  // namespace alphaleak
