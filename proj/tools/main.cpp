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
//
// Command-line frontend. Exit codes: 0 success, 1 sweep monotonicity
// warning, 2 parse/validation error, 3 alpha out of range, 4 solver
// non-convergence under --strict, 5 failed verdict or violated bound.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "alphaleak/capacity.hpp"
#include "alphaleak/io.hpp"
#include "alphaleak/leakage.hpp"
#include "alphaleak/theorems.hpp"

namespace {

using namespace alphaleak;

constexpr double kLn2 = 0.6931471805599453;
constexpr double kMonotoneSlack = 1e-9;
constexpr double kComposeSlack = 1e-8;

// All numeric output goes through these, so it is locale-independent and
// byte-identical across reruns.
std::string sig12(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  (void)ec;
  return std::string(buf, ptr);
}

std::string shortest(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string alpha_label(AlphaOrder a) {
  if (a.is_infinity()) return "inf";
  return shortest(a.numeric());
}

AlphaOrder parse_alpha_token(const std::string& token) {
  if (token == "inf") return AlphaOrder::infinity();
  double v = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("cannot parse '" + token + "' as an alpha order");
  }
  return AlphaOrder::of(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<AlphaOrder> parse_alpha_list(const std::string& spec) {
  std::vector<AlphaOrder> out;
  for (const auto& token : split(spec, ',')) {
    out.push_back(parse_alpha_token(token));
  }
  return out;
}

// start:stop:points, log-spaced with exact endpoints. Infinity is not a
// grid value; list it explicitly with --alpha instead.
std::vector<AlphaOrder> parse_alpha_grid(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) {
    throw ParseError("--alpha-grid expects start:stop:points, got '" + spec +
                     "'");
  }
  const AlphaOrder start = parse_alpha_token(parts[0]);
  const AlphaOrder stop = parse_alpha_token(parts[1]);
  if (start.is_infinity() || stop.is_infinity()) {
    throw ParseError("--alpha-grid endpoints must be finite");
  }
  long points = 0;
  const char* begin = parts[2].data();
  const char* end = begin + parts[2].size();
  auto [ptr, ec] = std::from_chars(begin, end, points);
  if (ec != std::errc() || ptr != end || points < 1) {
    throw ParseError("--alpha-grid needs a positive point count, got '" +
                     parts[2] + "'");
  }
  const double lo = start.numeric();
  const double hi = stop.numeric();
  if (hi < lo) {
    throw ParseError("--alpha-grid stop must not be below start");
  }
  std::vector<AlphaOrder> out;
  out.reserve(points);
  out.push_back(start);
  for (long i = 1; i + 1 < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    out.push_back(AlphaOrder::of(
        std::exp((1.0 - t) * std::log(lo) + t * std::log(hi))));
  }
  if (points > 1) out.push_back(stop);
  return out;
}

struct CommonOpts {
  std::string channel_path;
  std::string channel2_path;
  std::string prior_path;
  std::string q_path;
  std::string target_path;
  std::string alpha_spec;
  std::string grid_spec;
  std::string output_path;
  double tol = 0.0;
  std::uint64_t seed = 0;
  bool bits = false;
  bool nats = false;
  bool strict = false;

  bool use_bits() const {
    if (bits && nats) throw ParseError("--bits and --nats are exclusive");
    return !nats;  // bits by default
  }
  double render(double v) const { return use_bits() ? v / kLn2 : v; }
  const char* unit_name() const { return use_bits() ? "bits" : "nats"; }
  SolveOptions solver() const {
    SolveOptions opts;
    opts.seed = seed;
    if (tol > 0.0) opts.kkt_tol = tol;
    return opts;
  }
};

void add_common(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--channel", o->channel_path, "channel file (CSV or JSON)");
  cmd->add_option("--channel2", o->channel2_path, "second channel file");
  cmd->add_option("--prior", o->prior_path, "prior distribution file");
  cmd->add_option("--q", o->q_path, "reference distribution file");
  cmd->add_option("--target", o->target_path, "target distribution file");
  cmd->add_option("--alpha", o->alpha_spec,
                  "alpha order(s), comma separated; 'inf' allowed");
  cmd->add_option("--alpha-grid", o->grid_spec,
                  "log-spaced grid start:stop:points");
  cmd->add_option("--output", o->output_path, "write output here, not stdout");
  cmd->add_option("--tol", o->tol, "solver KKT tolerance override");
  cmd->add_option("--seed", o->seed, "seed for randomized work");
  cmd->add_flag("--bits", o->bits, "report bits (default)");
  cmd->add_flag("--nats", o->nats, "report nats");
  cmd->add_flag("--strict", o->strict, "fail on solver non-convergence");
}

Channel need_channel(const std::string& path, const char* flag) {
  if (path.empty()) {
    throw ParseError(std::string(flag) + " is required here");
  }
  return load_channel(path);
}

Distribution need_distribution(const std::string& path, const char* flag) {
  if (path.empty()) {
    throw ParseError(std::string(flag) + " is required here");
  }
  return load_distribution(path);
}

std::vector<std::size_t> full_support(std::size_t n) {
  std::vector<std::size_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  return s;
}

// Writing through a staging buffer keeps --output and stdout byte-identical.
int deliver(const CommonOpts& o, const std::string& text) {
  if (o.output_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(o.output_path, std::ios::binary);
  if (!out) throw Error("cannot open output file " + o.output_path);
  out << text;
  return 0;
}

const std::vector<std::string> kMeasures = {
    "renyi-entropy", "renyi-div",      "sibson",
    "arimoto",       "cond-entropy",   "alpha-leakage",
    "max-alpha-leakage", "maxl"};

struct MeasureOutcome {
  double nats;
  bool converged;
};

// Evaluates one measure at one order. Throws AlphaOutOfRange for orders a
// measure does not admit.
MeasureOutcome eval_measure(const std::string& measure, const CommonOpts& o,
                            AlphaOrder alpha) {
  if (measure == "renyi-entropy") {
    const Distribution p = need_distribution(o.prior_path, "--prior");
    return {renyi_entropy(p, alpha).nats, true};
  }
  if (measure == "renyi-div") {
    const Distribution p = need_distribution(o.prior_path, "--prior");
    const Distribution q = need_distribution(o.q_path, "--q");
    return {renyi_divergence(p, q, alpha).nats, true};
  }
  const Channel w = need_channel(o.channel_path, "--channel");
  if (measure == "maxl") {
    if (o.prior_path.empty()) {
      return {maxl(w, full_support(w.in_size())), true};
    }
    const Distribution p = load_distribution(o.prior_path);
    return {maxl(w, p.support()), true};
  }
  const Distribution p = need_distribution(o.prior_path, "--prior");
  if (measure == "sibson") return {sibson_mi(p, w, alpha).nats, true};
  if (measure == "arimoto") return {arimoto_mi(p, w, alpha).nats, true};
  if (measure == "cond-entropy") {
    return {arimoto_cond_entropy(joint_from(p, w), alpha).nats, true};
  }
  if (measure == "alpha-leakage") {
    return {alpha_leakage(p, w, alpha).nats, true};
  }
  // max-alpha-leakage
  const CapacityResult r = maximal_alpha_leakage(p, w, alpha, o.solver());
  return {r.nats, r.converged};
}

std::vector<AlphaOrder> resolve_alphas(const CommonOpts& o, bool need_one) {
  if (!o.alpha_spec.empty() && !o.grid_spec.empty()) {
    throw ParseError("--alpha and --alpha-grid are exclusive");
  }
  if (!o.grid_spec.empty()) {
    if (need_one) throw ParseError("this command takes a single --alpha");
    return parse_alpha_grid(o.grid_spec);
  }
  if (o.alpha_spec.empty()) {
    throw ParseError("--alpha is required here");
  }
  auto alphas = parse_alpha_list(o.alpha_spec);
  if (need_one && alphas.size() != 1) {
    throw ParseError("this command takes a single --alpha");
  }
  return alphas;
}

int cmd_compute(const std::string& measure, const CommonOpts& o) {
  AlphaOrder alpha = AlphaOrder::infinity();
  if (measure != "maxl") {
    alpha = resolve_alphas(o, /*need_one=*/true)[0];
  }
  const MeasureOutcome r = eval_measure(measure, o, alpha);
  if (o.strict && !r.converged) {
    std::cerr << "error: solver failed to converge\n";
    return 4;
  }
  std::ostringstream text;
  text << sig12(o.render(r.nats)) << " " << o.unit_name() << "\n";
  return deliver(o, text.str());
}

int cmd_sweep(const std::string& measure, const CommonOpts& o) {
  const std::vector<AlphaOrder> alphas = resolve_alphas(o, false);

  // Alphas are independent; fan out and emit in grid order.
  std::vector<std::future<MeasureOutcome>> futures;
  futures.reserve(alphas.size());
  for (const AlphaOrder& a : alphas) {
    futures.push_back(std::async(std::launch::async, [&o, &measure, a] {
      return eval_measure(measure, o, a);
    }));
  }

  std::ostringstream csv;
  csv << "alpha,value_nats,value_bits,converged\n";
  bool any_unconverged = false;
  bool monotone = true;
  double prev = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const MeasureOutcome r = futures[i].get();
    any_unconverged = any_unconverged || !r.converged;
    csv << alpha_label(alphas[i]) << "," << sig12(r.nats) << ","
        << sig12(r.nats / kLn2) << "," << (r.converged ? 1 : 0) << "\n";
    if (measure == "max-alpha-leakage") {
      if (r.nats < prev - kMonotoneSlack) {
        monotone = false;
        csv << "# warning: value decreased at alpha="
            << alpha_label(alphas[i]) << "\n";
      }
      prev = std::max(prev, r.nats);
    }
  }
  const int rc = deliver(o, csv.str());
  if (rc != 0) return rc;
  if (o.strict && any_unconverged) {
    std::cerr << "error: a solver call failed to converge\n";
    return 4;
  }
  if (!monotone) {
    std::cerr << "warning: max-alpha-leakage sweep was not monotone\n";
    return 1;
  }
  return 0;
}

std::vector<std::size_t> parse_copies(const std::string& spec) {
  if (spec.empty()) throw ParseError("--copies is required for shatter");
  std::vector<std::size_t> out;
  for (const auto& token : split(spec, ',')) {
    unsigned long long v = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || v == 0) {
      throw ParseError("cannot parse '" + token + "' as a copy count");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<double> parse_lambda_grid(const std::string& spec) {
  if (spec.empty()) return {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> out;
  for (const auto& token : split(spec, ',')) {
    double v = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
      throw ParseError("cannot parse '" + token + "' as a lambda");
    }
    out.push_back(v);
  }
  return out;
}

void run_named_check(const std::string& check, const CommonOpts& o,
                     AlphaOrder a, int trials, const std::string& copies_spec,
                     const std::string& lambda_spec,
                     std::vector<TheoremVerdict>* verdicts) {
  if (check == "quasiconvexity") {
    verdicts->push_back(check_quasiconvexity(
        need_channel(o.channel_path, "--channel"),
        need_channel(o.channel2_path, "--channel2"),
        need_distribution(o.prior_path, "--prior"), a,
        parse_lambda_grid(lambda_spec)));
    return;
  }
  if (check == "dpi") {
    auto [hop1, hop2] =
        check_dpi(need_channel(o.channel_path, "--channel"),
                  need_channel(o.channel2_path, "--channel2"),
                  need_distribution(o.prior_path, "--prior"), a);
    verdicts->push_back(std::move(hop1));
    verdicts->push_back(std::move(hop2));
    return;
  }
  if (check == "composition") {
    verdicts->push_back(check_composition(
        need_channel(o.channel_path, "--channel"),
        need_channel(o.channel2_path, "--channel2"),
        need_distribution(o.prior_path, "--prior"), a));
    return;
  }
  if (check == "bounds") {
    auto batch = check_bounds(need_channel(o.channel_path, "--channel"),
                              need_distribution(o.prior_path, "--prior"), a);
    for (auto& v : batch) verdicts->push_back(std::move(v));
    return;
  }
  if (check == "sibson-infimum") {
    verdicts->push_back(check_sibson_infimum(
        need_distribution(o.prior_path, "--prior"),
        need_channel(o.channel_path, "--channel"), a, trials, o.seed));
    return;
  }
  if (check == "shatter") {
    verdicts->push_back(
        shatter_construction(need_distribution(o.prior_path, "--prior"),
                             need_channel(o.channel_path, "--channel"),
                             need_distribution(o.target_path, "--target"),
                             parse_copies(copies_spec), a)
            .second);
    return;
  }
  throw ParseError("unknown check '" + check + "'");
}

// One battery instance: every check on one seeded random scenario, at every
// applicable order.
void run_battery_instance(std::uint64_t instance_seed, int trials,
                          std::vector<TheoremVerdict>* verdicts) {
  std::mt19937_64 rng(instance_seed);
  const std::size_t nx = 2 + (rng() % 2);
  const std::size_t ny = 2 + (rng() % 3);
  const Channel w1 = random_channel(rng, nx, ny);
  const Channel w2 = random_channel(rng, nx, ny);
  const Channel onward = random_channel(rng, ny, 2 + (rng() % 3));
  const Distribution prior = random_distribution(rng, nx);
  const Distribution target = random_distribution(rng, nx);
  std::vector<std::size_t> copies(nx);
  for (auto& c : copies) c = 1 + (rng() % 3);
  const std::vector<double> lambda_grid{0.0, 0.25, 0.5, 0.75, 1.0};

  const AlphaOrder orders[] = {AlphaOrder::one(), AlphaOrder::of(1.5),
                               AlphaOrder::of(2.0), AlphaOrder::infinity()};
  for (const AlphaOrder& a : orders) {
    auto stamp = [&](TheoremVerdict v) {
      v.seed = instance_seed;
      verdicts->push_back(std::move(v));
    };
    stamp(check_quasiconvexity(w1, w2, prior, a, lambda_grid));
    auto [hop1, hop2] = check_dpi(w1, onward, prior, a);
    stamp(std::move(hop1));
    stamp(std::move(hop2));
    stamp(check_composition(w1, w2, prior, a));
    for (auto& v : check_bounds(w1, prior, a)) stamp(std::move(v));
    if (!a.is_infinity()) {
      stamp(check_sibson_infimum(prior, w1, a, trials, instance_seed));
    }
    stamp(shatter_construction(prior, w1, target, copies, a).second);
  }
}

int cmd_verify(const std::string& check, const CommonOpts& o, int random_n,
               int trials, const std::string& copies_spec,
               const std::string& lambda_spec, const std::string& replay_path,
               const std::string& witness_dir) {
  std::vector<TheoremVerdict> verdicts;
  bool from_replay = false;
  if (!replay_path.empty()) {
    std::ifstream in(replay_path, std::ios::binary);
    if (!in) throw Error("cannot read witness file " + replay_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    verdicts = replay(buf.str());
    from_replay = true;
  } else if (!check.empty()) {
    const std::vector<AlphaOrder> alphas =
        o.alpha_spec.empty() && o.grid_spec.empty()
            ? std::vector<AlphaOrder>{AlphaOrder::one(), AlphaOrder::of(1.5),
                                      AlphaOrder::of(2.0),
                                      AlphaOrder::infinity()}
            : resolve_alphas(o, false);
    for (const AlphaOrder& a : alphas) {
      if (check == "sibson-infimum" && a.is_infinity() && o.alpha_spec.empty()) {
        continue;  // skip in the default sweep; explicit requests still run
      }
      run_named_check(check, o, a, trials, copies_spec, lambda_spec,
                      &verdicts);
    }
  } else {
    if (random_n <= 0) {
      throw ParseError(
          "verify needs a check name, --random N, or --replay FILE");
    }
    for (int i = 0; i < random_n; ++i) {
      run_battery_instance(o.seed * 1000003 + static_cast<std::uint64_t>(i),
                           trials, &verdicts);
    }
  }

  std::ostringstream lines;
  int failures = 0;
  for (const auto& v : verdicts) {
    lines << to_json_line(v) << "\n";
    if (!v.passed) ++failures;
  }
  const int rc = deliver(o, lines.str());
  if (rc != 0) return rc;
  if (failures > 0) {
    for (const auto& v : verdicts) {
      if (v.passed || from_replay) continue;
      std::cerr << "witness written: " << persist_witness(v, witness_dir)
                << "\n";
    }
    std::cerr << "error: " << failures << " verdict(s) failed\n";
    return 5;
  }
  return 0;
}

int cmd_compose(const std::vector<std::string>& channel_paths,
                const CommonOpts& o) {
  if (channel_paths.empty()) {
    throw ParseError("compose needs at least one channel file");
  }
  std::vector<Channel> channels;
  channels.reserve(channel_paths.size());
  for (const auto& path : channel_paths) {
    channels.push_back(load_channel(path));
  }
  for (std::size_t i = 1; i < channels.size(); ++i) {
    if (channels[i].in_size() != channels[0].in_size()) {
      throw DimensionMismatch("channel " + std::to_string(i + 1) + " has " +
                              std::to_string(channels[i].in_size()) +
                              " inputs, expected " +
                              std::to_string(channels[0].in_size()));
    }
  }
  const AlphaOrder alpha = o.alpha_spec.empty()
                               ? AlphaOrder::infinity()
                               : resolve_alphas(o, /*need_one=*/true)[0];
  const Distribution prior =
      o.prior_path.empty() ? Distribution::uniform(channels[0].in_size())
                           : load_distribution(o.prior_path);

  std::ostringstream text;
  bool all_converged = true;
  double budget = 0.0;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const CapacityResult r =
        maximal_alpha_leakage(prior, channels[i], alpha, o.solver());
    all_converged = all_converged && r.converged;
    budget += r.nats;
    text << "release " << (i + 1) << ": " << sig12(o.render(r.nats)) << " "
         << o.unit_name() << "\n";
  }
  Channel joint = channels[0];
  for (std::size_t i = 1; i < channels.size(); ++i) {
    joint = product_channel(joint, channels[i]);
  }
  const CapacityResult exact_r =
      maximal_alpha_leakage(prior, joint, alpha, o.solver());
  all_converged = all_converged && exact_r.converged;
  text << "bound: " << sig12(o.render(budget)) << " " << o.unit_name()
       << "\n";
  text << "exact: " << sig12(o.render(exact_r.nats)) << " " << o.unit_name()
       << "\n";
  const int rc = deliver(o, text.str());
  if (rc != 0) return rc;
  if (o.strict && !all_converged) {
    std::cerr << "error: a solver call failed to converge\n";
    return 4;
  }
  if (exact_r.nats > budget + kComposeSlack) {
    std::cerr << "error: joint leakage exceeds the composition bound\n";
    return 5;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "alphaleak: tunable information-leakage measures for finite channels"};
  app.require_subcommand(1);

  std::string compute_measure;
  CommonOpts compute_opts;
  CLI::App* compute = app.add_subcommand(
      "compute", "evaluate one measure at one order");
  compute->add_option("measure", compute_measure, "measure name")
      ->required()
      ->check(CLI::IsMember(kMeasures));
  add_common(compute, &compute_opts);

  std::string sweep_measure;
  CommonOpts sweep_opts;
  CLI::App* sweep =
      app.add_subcommand("sweep", "evaluate a measure over an alpha grid");
  sweep->add_option("measure", sweep_measure, "measure name")
      ->required()
      ->check(CLI::IsMember(kMeasures));
  add_common(sweep, &sweep_opts);

  std::string verify_check;
  CommonOpts verify_opts;
  int verify_random = 0;
  int verify_trials = 20;
  std::string verify_copies;
  std::string verify_lambdas;
  std::string verify_replay;
  std::string verify_witness_dir = ".";
  CLI::App* verify = app.add_subcommand(
      "verify", "run theorem checks and emit JSON-line verdicts");
  verify->add_option("check", verify_check,
                     "check name (omit to run the random battery)")
      ->check(CLI::IsMember({"quasiconvexity", "dpi", "composition", "bounds",
                             "sibson-infimum", "shatter"}));
  add_common(verify, &verify_opts);
  verify->add_option("--random", verify_random,
                     "number of random battery instances");
  verify->add_option("--trials", verify_trials,
                     "random output laws per infimum check");
  verify->add_option("--copies", verify_copies,
                     "lookalike counts for shatter, comma separated");
  verify->add_option("--lambda-grid", verify_lambdas,
                     "mixture weights for quasiconvexity, comma separated");
  verify->add_option("--replay", verify_replay, "re-run a persisted witness");
  verify->add_option("--witness-dir", verify_witness_dir,
                     "where failing witnesses are written");

  std::vector<std::string> compose_channels;
  CommonOpts compose_opts;
  CLI::App* compose = app.add_subcommand(
      "compose", "account the leakage of composed releases");
  compose->add_option("channels", compose_channels, "channel files")
      ->required();
  add_common(compose, &compose_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*compute) return cmd_compute(compute_measure, compute_opts);
    if (*sweep) return cmd_sweep(sweep_measure, sweep_opts);
    if (*verify) {
      return cmd_verify(verify_check, verify_opts, verify_random,
                        verify_trials, verify_copies, verify_lambdas,
                        verify_replay, verify_witness_dir);
    }
    if (*compose) return cmd_compose(compose_channels, compose_opts);
  } catch (const AlphaOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
