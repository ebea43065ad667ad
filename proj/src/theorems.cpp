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

#include "alphaleak/theorems.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "json.hpp"
#include "logsum.hpp"

namespace alphaleak {
namespace {

using nlohmann::json;

json dist_to_json(const Distribution& d) { return json(d.probs()); }

Distribution dist_from_json(const json& j) {
  return Distribution(j.get<std::vector<double>>());
}

json channel_to_json(const Channel& w) {
  json rows = json::array();
  for (std::size_t x = 0; x < w.in_size(); ++x) {
    rows.push_back(w.row(x).probs());
  }
  return rows;
}

Channel channel_from_json(const json& j) {
  return Channel(j.get<std::vector<std::vector<double>>>());
}

json alpha_to_json(AlphaOrder alpha) {
  if (alpha.is_infinity()) return json("inf");
  return json(alpha.numeric());
}

AlphaOrder alpha_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return AlphaOrder::infinity();
    throw ParseError("unknown alpha spelling in witness: " +
                     j.get<std::string>());
  }
  return AlphaOrder::of(j.get<double>());
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

TheoremVerdict make_verdict(std::string id, double lhs, double rhs,
                            double slack, bool passed, const json& witness) {
  TheoremVerdict v;
  v.theorem_id = std::move(id);
  v.lhs = lhs;
  v.rhs = rhs;
  v.slack = slack;
  v.passed = passed;
  v.witness = witness.dump();
  v.instance_digest = fnv1a_hex(v.theorem_id + "\n" + v.witness);
  return v;
}

TheoremVerdict make_ineq_verdict(std::string id, double lhs, double rhs,
                                 double slack, const json& witness) {
  return make_verdict(std::move(id), lhs, rhs, slack, lhs <= rhs + slack,
                      witness);
}

double leakage_nats(const Distribution& prior, const Channel& channel,
                    AlphaOrder alpha) {
  return maximal_alpha_leakage(prior, channel, alpha).nats;
}

Channel mix_channels(const Channel& w0, const Channel& w1, double lambda) {
  std::vector<std::vector<double>> rows(w0.in_size());
  for (std::size_t x = 0; x < w0.in_size(); ++x) {
    rows[x].resize(w0.out_size());
    for (std::size_t y = 0; y < w0.out_size(); ++y) {
      rows[x][y] = lambda * w0.prob(x, y) + (1.0 - lambda) * w1.prob(x, y);
    }
  }
  return Channel(std::move(rows));
}

}  // namespace

TheoremVerdict check_quasiconvexity(const Channel& w0, const Channel& w1,
                                    const Distribution& prior,
                                    AlphaOrder alpha,
                                    std::span<const double> lambda_grid) {
  if (w0.in_size() != w1.in_size() || w0.out_size() != w1.out_size()) {
    throw DimensionMismatch("channels being mixed must share a shape");
  }
  for (double l : lambda_grid) {
    if (!(l >= 0.0 && l <= 1.0)) {
      throw Error("lambda values must lie in [0, 1]");
    }
  }
  const double at_w0 = leakage_nats(prior, w0, alpha);
  const double at_w1 = leakage_nats(prior, w1, alpha);
  const double rhs = std::max(at_w0, at_w1);
  double lhs = -std::numeric_limits<double>::infinity();
  for (double l : lambda_grid) {
    lhs = std::max(lhs, leakage_nats(prior, mix_channels(w0, w1, l), alpha));
  }
  json witness{{"check", "quasiconvexity"},
               {"alpha", alpha_to_json(alpha)},
               {"prior", dist_to_json(prior)},
               {"channel0", channel_to_json(w0)},
               {"channel1", channel_to_json(w1)},
               {"lambda_grid", std::vector<double>(lambda_grid.begin(),
                                                   lambda_grid.end())}};
  return make_ineq_verdict("quasiconvexity", lhs, rhs, kDefaultSlack, witness);
}

std::pair<TheoremVerdict, TheoremVerdict> check_dpi(const Channel& w1,
                                                    const Channel& w2,
                                                    const Distribution& prior,
                                                    AlphaOrder alpha) {
  const Channel xz = cascade_channel(w1, w2);
  const double to_z = leakage_nats(prior, xz, alpha);
  const double to_y = leakage_nats(prior, w1, alpha);
  // The Y-side leakage is taken at the Y-marginal the chain induces, so its
  // support constraint reflects the actual intermediate distribution.
  const Distribution y_marg = joint_from(prior, w1).y_marginal();
  const double y_to_z = leakage_nats(y_marg, w2, alpha);
  json witness{{"check", "dpi"},
               {"alpha", alpha_to_json(alpha)},
               {"prior", dist_to_json(prior)},
               {"channel", channel_to_json(w1)},
               {"channel2", channel_to_json(w2)}};
  return {make_ineq_verdict("dpi_first_hop", to_z, to_y, kDefaultSlack,
                            witness),
          make_ineq_verdict("dpi_second_hop", to_z, y_to_z, kDefaultSlack,
                            witness)};
}

TheoremVerdict check_composition(const Channel& w1, const Channel& w2,
                                 const Distribution& prior, AlphaOrder alpha) {
  const Channel both = product_channel(w1, w2);
  const double joint_leakage = leakage_nats(prior, both, alpha);
  const double sum =
      leakage_nats(prior, w1, alpha) + leakage_nats(prior, w2, alpha);
  json witness{{"check", "composition"},
               {"alpha", alpha_to_json(alpha)},
               {"prior", dist_to_json(prior)},
               {"channel", channel_to_json(w1)},
               {"channel2", channel_to_json(w2)}};
  return make_ineq_verdict("composition", joint_leakage, sum, kDefaultSlack,
                           witness);
}

std::vector<TheoremVerdict> check_bounds(const Channel& channel,
                                         const Distribution& prior,
                                         AlphaOrder alpha) {
  const double leak = leakage_nats(prior, channel, alpha);
  json witness{{"check", "bounds"},
               {"alpha", alpha_to_json(alpha)},
               {"prior", dist_to_json(prior)},
               {"channel", channel_to_json(channel)}};
  std::vector<TheoremVerdict> out;
  out.push_back(
      make_ineq_verdict("bounds_nonneg", 0.0, leak, kDefaultSlack, witness));
  const double ceiling =
      alpha.is_one() ? renyi_entropy(prior, AlphaOrder::one()).nats
                     : std::log(static_cast<double>(prior.size()));
  out.push_back(
      make_ineq_verdict("bounds_upper", leak, ceiling, kDefaultSlack, witness));
  out.push_back(make_ineq_verdict("bounds_maxl_dominates", leak,
                                  maxl(channel, prior.support()),
                                  kDefaultSlack, witness));
  if (alpha.is_finite() && alpha.finite_value() > 1.0) {
    out.push_back(make_ineq_verdict(
        "bounds_uniform_sibson_lower",
        uniform_sibson_lower_bound(channel, alpha), leak, kDefaultSlack,
        witness));
  }
  if (channel.is_rank_one()) {
    out.push_back(make_verdict("bounds_zero_iff_rank_one", std::abs(leak), 0.0,
                               1e-9, std::abs(leak) <= 1e-9, witness));
  } else {
    // A visibly informative channel must leak; a tiny value here flags a
    // regression even though no theorem is violated by it alone.
    out.push_back(make_verdict("bounds_zero_iff_rank_one", 1e-9, leak, 0.0,
                               leak > 1e-9, witness));
  }
  return out;
}

TheoremVerdict check_sibson_infimum(const Distribution& prior,
                                    const Channel& channel, AlphaOrder alpha,
                                    int trials, std::uint64_t seed) {
  if (trials < 0) throw Error("trials must be non-negative");
  const double smi = sibson_mi(prior, channel, alpha).nats;
  const Joint joint = joint_from(prior, channel);
  const Distribution pxy = joint.flattened();
  const auto reference = [&](const Distribution& q) {
    std::vector<double> flat(prior.size() * q.size());
    for (std::size_t x = 0; x < prior.size(); ++x) {
      for (std::size_t y = 0; y < q.size(); ++y) {
        flat[x * q.size() + y] = prior[x] * q[y];
      }
    }
    return Distribution(std::move(flat));
  };

  // The minimizing output law: normalize (sum_x P(x) W(y|x)^alpha)^(1/alpha)
  // over y (the output marginal at order one, column maxima at infinity).
  std::vector<double> qstar_log(channel.out_size(), detail::kNegInf);
  for (std::size_t y = 0; y < channel.out_size(); ++y) {
    std::vector<double> inner;
    for (std::size_t x : prior.support()) {
      const double w = channel.prob(x, y);
      if (w == 0.0) continue;
      if (alpha.is_one()) {
        inner.push_back(std::log(prior[x]) + std::log(w));
      } else if (alpha.is_infinity()) {
        inner.push_back(std::log(w));
      } else {
        inner.push_back(std::log(prior[x]) +
                        alpha.finite_value() * std::log(w));
      }
    }
    if (inner.empty()) continue;
    if (alpha.is_infinity()) {
      qstar_log[y] = *std::max_element(inner.begin(), inner.end());
    } else if (alpha.is_one()) {
      qstar_log[y] = detail::log_sum_exp(inner);
    } else {
      qstar_log[y] = detail::log_sum_exp(inner) / alpha.finite_value();
    }
  }
  const double z = detail::log_sum_exp(qstar_log);
  std::vector<double> qstar(channel.out_size(), 0.0);
  for (std::size_t y = 0; y < channel.out_size(); ++y) {
    if (qstar_log[y] != detail::kNegInf) {
      qstar[y] = std::exp(qstar_log[y] - z);
    }
  }
  const double at_qstar =
      renyi_divergence(pxy, reference(Distribution(qstar)), alpha).nats;

  double min_divergence = at_qstar;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Distribution q = random_distribution(rng, channel.out_size());
    min_divergence = std::min(
        min_divergence, renyi_divergence(pxy, reference(q), alpha).nats);
  }

  json witness{{"check", "sibson_infimum"},
               {"alpha", alpha_to_json(alpha)},
               {"prior", dist_to_json(prior)},
               {"channel", channel_to_json(channel)},
               {"trials", trials},
               {"rng_seed", seed}};
  const bool passed =
      smi <= min_divergence + 1e-9 && std::abs(at_qstar - smi) <= 1e-6;
  TheoremVerdict v =
      make_verdict("sibson_infimum", smi, min_divergence, 1e-9, passed,
                   witness);
  v.seed = seed;
  return v;
}

std::pair<ShatterSpec, TheoremVerdict> shatter_construction(
    const Distribution& prior, const Channel& channel,
    const Distribution& target, std::span<const std::size_t> copies_per_x,
    AlphaOrder alpha) {
  if (prior.size() != channel.in_size() || target.size() != prior.size()) {
    throw DimensionMismatch("prior, target and channel sizes must agree");
  }
  if (copies_per_x.size() != prior.size()) {
    throw DimensionMismatch("copies_per_x must cover every input symbol");
  }
  for (std::size_t c : copies_per_x) {
    if (c < 1) throw Error("every symbol needs at least one lookalike");
  }
  for (std::size_t x : target.support()) {
    if (prior[x] == 0.0) {
      throw InfeasibleTarget("target puts mass on symbol " +
                             std::to_string(x) +
                             " outside the prior's support");
    }
  }

  const std::size_t n = prior.size();
  // Block masses m_x: uniform within each block, chosen so the induced
  // tilt (proportional to the within-block sum of weight^alpha, which is
  // c_x (m_x/c_x)^alpha) reproduces the target. At finite orders that gives
  // m_x proportional to target^(1/alpha) c_x^(1-1/alpha).
  std::vector<double> log_m(n, detail::kNegInf);
  if (alpha.is_infinity()) {
    double total = 0.0;
    for (std::size_t x : target.support()) {
      total += static_cast<double>(copies_per_x[x]);
    }
    for (std::size_t x : target.support()) {
      log_m[x] = std::log(static_cast<double>(copies_per_x[x]) / total);
    }
  } else if (alpha.is_one()) {
    for (std::size_t x : target.support()) log_m[x] = std::log(target[x]);
  } else {
    const double a = alpha.finite_value();
    std::vector<double> terms;
    for (std::size_t x : target.support()) {
      log_m[x] = std::log(target[x]) / a +
                 (1.0 - 1.0 / a) * std::log(static_cast<double>(copies_per_x[x]));
      terms.push_back(log_m[x]);
    }
    const double z = detail::log_sum_exp(terms);
    for (std::size_t x : target.support()) log_m[x] -= z;
  }

  std::size_t total_u = 0;
  for (std::size_t c : copies_per_x) total_u += c;
  std::vector<double> u_weights(total_u, 0.0);
  std::vector<std::size_t> x_of_u(total_u);
  std::vector<Distribution> lifted_rows;
  lifted_rows.reserve(total_u);
  std::size_t u = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const double per_copy =
        log_m[x] == detail::kNegInf
            ? 0.0
            : std::exp(log_m[x]) / static_cast<double>(copies_per_x[x]);
    for (std::size_t c = 0; c < copies_per_x[x]; ++c, ++u) {
      u_weights[u] = per_copy;
      x_of_u[u] = x;
      lifted_rows.push_back(channel.row(x));
    }
  }

  // Induced input law: proportional to c_x (m_x/c_x)^alpha. Degenerate at
  // order infinity, where it is reported proportional to the block sizes.
  std::vector<double> induced(n, 0.0);
  if (alpha.is_finite()) {
    const double a = alpha.finite_value();
    std::vector<double> logs(n, detail::kNegInf);
    std::vector<double> terms;
    for (std::size_t x : target.support()) {
      const double c = static_cast<double>(copies_per_x[x]);
      logs[x] = std::log(c) + a * (log_m[x] - std::log(c));
      terms.push_back(logs[x]);
    }
    const double z = detail::log_sum_exp(terms);
    for (std::size_t x : target.support()) induced[x] = std::exp(logs[x] - z);
  } else {
    for (std::size_t x : target.support()) induced[x] = std::exp(log_m[x]);
  }

  ShatterSpec spec{std::vector<std::size_t>(copies_per_x.begin(),
                                            copies_per_x.end()),
                   Distribution(std::move(u_weights)),
                   Distribution(std::move(induced)), std::move(x_of_u)};

  const Channel lifted(std::move(lifted_rows));
  const double lhs = arimoto_mi(spec.u_weights, lifted, alpha).nats;
  const double rhs = sibson_mi(target, channel, alpha).nats;
  bool passed = std::abs(lhs - rhs) <= 1e-9;
  if (!alpha.is_infinity()) {
    for (std::size_t x = 0; x < n; ++x) {
      if (std::abs(spec.induced_x_tilde[x] - target[x]) > 1e-9) {
        passed = false;
      }
    }
  }
  json witness{{"check", "shatter"},
               {"alpha", alpha_to_json(alpha)},
               {"prior", dist_to_json(prior)},
               {"channel", channel_to_json(channel)},
               {"target", dist_to_json(target)},
               {"copies", spec.copies_per_x}};
  return {std::move(spec),
          make_verdict("shatter", lhs, rhs, 1e-9, passed, witness)};
}

std::string to_json_line(const TheoremVerdict& verdict) {
  json j;
  j["theorem_id"] = verdict.theorem_id;
  j["seed"] = verdict.seed;
  j["passed"] = verdict.passed;
  j["lhs"] = verdict.lhs;
  j["rhs"] = verdict.rhs;
  j["slack"] = verdict.slack;
  j["witness"] = json::parse(verdict.witness);
  return j.dump();
}

std::vector<TheoremVerdict> replay(const std::string& witness_json) {
  json w;
  try {
    w = json::parse(witness_json);
  } catch (const json::exception& e) {
    throw ParseError(std::string("witness is not valid JSON: ") + e.what());
  }
  if (!w.is_object() || !w.contains("check")) {
    throw ParseError("witness must be an object with a 'check' field");
  }
  const std::string check = w.at("check").get<std::string>();
  const AlphaOrder alpha = alpha_from_json(w.at("alpha"));
  if (check == "quasiconvexity") {
    const auto grid = w.at("lambda_grid").get<std::vector<double>>();
    return {check_quasiconvexity(channel_from_json(w.at("channel0")),
                                 channel_from_json(w.at("channel1")),
                                 dist_from_json(w.at("prior")), alpha, grid)};
  }
  if (check == "dpi") {
    auto [a, b] = check_dpi(channel_from_json(w.at("channel")),
                            channel_from_json(w.at("channel2")),
                            dist_from_json(w.at("prior")), alpha);
    return {std::move(a), std::move(b)};
  }
  if (check == "composition") {
    return {check_composition(channel_from_json(w.at("channel")),
                              channel_from_json(w.at("channel2")),
                              dist_from_json(w.at("prior")), alpha)};
  }
  if (check == "bounds") {
    return check_bounds(channel_from_json(w.at("channel")),
                        dist_from_json(w.at("prior")), alpha);
  }
  if (check == "sibson_infimum") {
    return {check_sibson_infimum(dist_from_json(w.at("prior")),
                                 channel_from_json(w.at("channel")), alpha,
                                 w.at("trials").get<int>(),
                                 w.at("rng_seed").get<std::uint64_t>())};
  }
  if (check == "shatter") {
    const auto copies = w.at("copies").get<std::vector<std::size_t>>();
    auto [spec, verdict] = shatter_construction(
        dist_from_json(w.at("prior")), channel_from_json(w.at("channel")),
        dist_from_json(w.at("target")), copies, alpha);
    (void)spec;
    return {std::move(verdict)};
  }
  throw ParseError("unknown check in witness: " + check);
}

std::string persist_witness(const TheoremVerdict& verdict,
                            const std::string& dir) {
  namespace fs = std::filesystem;
  fs::path d(dir.empty() ? "." : dir);
  fs::create_directories(d);
  const fs::path path =
      d / ("witness_" + verdict.theorem_id + "_" + verdict.instance_digest +
           ".json");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write witness file " + path.string());
  out << verdict.witness << "\n";
  return path.string();
}

}  // namespace alphaleak
