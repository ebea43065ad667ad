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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <vector>

#include "alphaleak/theorems.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace alphaleak;
using nlohmann::json;

namespace {

const std::vector<double> kLambdaGrid{0.0, 0.25, 0.5, 0.75, 1.0};

AlphaOrder alpha_ladder(int i) {
  switch (i % 4) {
    case 0: return AlphaOrder::one();
    case 1: return AlphaOrder::of(1.5);
    case 2: return AlphaOrder::of(2.0);
    default: return AlphaOrder::infinity();
  }
}

}  // namespace

TEST_CASE("quasiconvexity verdict on mixtures of symmetric channels") {
  const TheoremVerdict v =
      check_quasiconvexity(Channel::bsc(0.1), Channel::bsc(0.45),
                           Distribution::uniform(2), AlphaOrder::infinity(),
                           kLambdaGrid);
  CHECK(v.passed);
  // The mixture family is BSC(0.1 l + 0.45 (1-l)); the worst grid point is
  // the first endpoint, so lhs and rhs both equal the leakage of BSC(0.1).
  CHECK(v.lhs == doctest::Approx(std::log(1.8)).epsilon(1e-14));
  CHECK(v.rhs == doctest::Approx(std::log(1.8)).epsilon(1e-14));
  CHECK(v.theorem_id == "quasiconvexity");
  CHECK(v.seed == 0);
  CHECK(v.slack == kDefaultSlack);
}

TEST_CASE("quasiconvexity allows an interior dip") {
  // Mixing a clean channel with its relabeling erases information at the
  // midpoint; quasi-convexity still holds because the grid maximum sits at
  // the endpoints.
  const Channel flip({{0.0, 1.0}, {1.0, 0.0}});
  const TheoremVerdict v =
      check_quasiconvexity(Channel::identity(2), flip,
                           Distribution::uniform(2), AlphaOrder::of(2),
                           kLambdaGrid);
  CHECK(v.passed);
  CHECK(v.lhs == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  const double mid =
      maximal_alpha_leakage(Distribution::uniform(2), Channel::bsc(0.5),
                            AlphaOrder::of(2))
          .nats;
  CHECK(std::abs(mid) < 1e-9);
}

TEST_CASE("quasiconvexity input validation") {
  const std::vector<double> bad{0.5, 1.5};
  CHECK_THROWS_AS(check_quasiconvexity(Channel::bsc(0.1), Channel::bsc(0.2),
                                       Distribution::uniform(2),
                                       AlphaOrder::of(2), bad),
                  Error);
  CHECK_THROWS_AS(check_quasiconvexity(Channel::bsc(0.1),
                                       Channel::identity(3),
                                       Distribution::uniform(2),
                                       AlphaOrder::of(2), kLambdaGrid),
                  DimensionMismatch);
}

TEST_CASE("data processing on a cascade of symmetric channels") {
  const auto [first, second] =
      check_dpi(Channel::bsc(0.1), Channel::bsc(0.1), Distribution::uniform(2),
                AlphaOrder::infinity());
  CHECK(first.passed);
  CHECK(second.passed);
  CHECK(first.theorem_id == "dpi_first_hop");
  CHECK(second.theorem_id == "dpi_second_hop");
  // The cascade is BSC(0.18), so the leakage to Z is log 1.64 against
  // log 1.8 for either single hop.
  CHECK(first.lhs == doctest::Approx(std::log(1.64)).epsilon(1e-14));
  CHECK(first.rhs == doctest::Approx(std::log(1.8)).epsilon(1e-14));
  CHECK(second.lhs == first.lhs);
  CHECK(second.rhs == doctest::Approx(std::log(1.8)).epsilon(1e-14));
  // Both verdicts replay from the same witness.
  CHECK(first.witness == second.witness);
  CHECK(first.instance_digest != second.instance_digest);
}

TEST_CASE("composition of two releases is subadditive") {
  const TheoremVerdict v =
      check_composition(Channel::bsc(0.1), Channel::bsc(0.1),
                        Distribution::uniform(2), AlphaOrder::infinity());
  CHECK(v.passed);
  CHECK(v.theorem_id == "composition");
  // Joint release of two independent copies: column maxima of the product
  // channel sum to 0.81 + 0.09 + 0.09 + 0.81.
  CHECK(v.lhs == doctest::Approx(std::log(1.8)).epsilon(1e-12));
  CHECK(v.rhs == doctest::Approx(2.0 * std::log(1.8)).epsilon(1e-12));
}

TEST_CASE("bounds battery on a rank-one channel") {
  const auto verdicts = check_bounds(Channel::rank_one(3, Distribution({0.2,
                                                                        0.8})),
                                     Distribution::uniform(3),
                                     AlphaOrder::of(2));
  REQUIRE(verdicts.size() == 5);
  for (const auto& v : verdicts) CHECK(v.passed);
  CHECK(verdicts[0].theorem_id == "bounds_nonneg");
  CHECK(verdicts[1].theorem_id == "bounds_upper");
  CHECK(verdicts[2].theorem_id == "bounds_maxl_dominates");
  CHECK(verdicts[3].theorem_id == "bounds_uniform_sibson_lower");
  CHECK(verdicts[4].theorem_id == "bounds_zero_iff_rank_one");
  CHECK(std::abs(verdicts[4].lhs) < 1e-12);
}

TEST_CASE("bounds battery flags an informative channel as leaking") {
  const auto verdicts = check_bounds(Channel::bsc(0.1),
                                     Distribution::uniform(2),
                                     AlphaOrder::of(2));
  REQUIRE(verdicts.size() == 5);
  for (const auto& v : verdicts) CHECK(v.passed);
  // The other direction of the iff: a channel that is not rank one leaks a
  // strictly positive amount.
  CHECK(verdicts[4].rhs == doctest::Approx(std::log(1.64)).epsilon(1e-9));
}

TEST_CASE("reverse deterministic instances attain the upper bounds") {
  std::vector<std::size_t> x_of_y{0, 0, 1};
  auto [w, px] = reverse_deterministic_channel(x_of_y,
                                               Distribution::uniform(3));
  SUBCASE("alphabet ceiling at order 2") {
    const auto verdicts = check_bounds(w, px, AlphaOrder::of(2));
    for (const auto& v : verdicts) CHECK(v.passed);
    CHECK(verdicts[1].lhs == doctest::Approx(std::log(2.0)).epsilon(1e-9));
    CHECK(verdicts[1].rhs == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  }
  SUBCASE("prior entropy ceiling at order one") {
    const auto verdicts = check_bounds(w, px, AlphaOrder::one());
    REQUIRE(verdicts.size() == 4);  // no uniform lower bound at order one
    for (const auto& v : verdicts) CHECK(v.passed);
    CHECK(verdicts[1].lhs ==
          doctest::Approx(0.636514168294813).epsilon(1e-12));
    CHECK(verdicts[1].lhs == doctest::Approx(verdicts[1].rhs).epsilon(1e-12));
  }
  SUBCASE("infinity bounds hold too") {
    const auto verdicts = check_bounds(w, px, AlphaOrder::infinity());
    for (const auto& v : verdicts) CHECK(v.passed);
  }
}

TEST_CASE("sibson infimum equality at the tilted output law") {
  const TheoremVerdict v = check_sibson_infimum(Distribution::uniform(2),
                                                Channel::bsc(0.1),
                                                AlphaOrder::of(2), 0);
  CHECK(v.passed);
  CHECK(v.theorem_id == "sibson_infimum");
  CHECK(v.lhs == doctest::Approx(std::log(1.64)).epsilon(1e-14));
  // With no random trials the minimum is the analytic optimum itself, which
  // for a symmetric channel is the uniform output law.
  CHECK(v.rhs == doctest::Approx(std::log(1.64)).epsilon(1e-10));
}

TEST_CASE("sibson infimum dominates random output laws") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 8; ++t) {
    const std::size_t n = 2 + (rng() % 2);
    const std::size_t m = 2 + (rng() % 3);
    const Channel w = random_channel(rng, n, m);
    const Distribution p = random_distribution(rng, n);
    for (AlphaOrder a : {AlphaOrder::one(), AlphaOrder::of(1.5),
                         AlphaOrder::of(2.0), AlphaOrder::of(6.0),
                         AlphaOrder::infinity()}) {
      const TheoremVerdict v = check_sibson_infimum(p, w, a, 25, rng());
      CHECK(v.passed);
      CHECK(v.lhs <= v.rhs + 1e-9);
    }
  }
}

TEST_CASE("shatter construction reproduces the target tilt") {
  const Distribution prior = Distribution::uniform(2);
  const Channel w = Channel::bsc(0.1);
  const Distribution target({0.75, 0.25});
  const std::vector<std::size_t> copies{2, 3};

  SUBCASE("order 2") {
    const auto [spec, v] =
        shatter_construction(prior, w, target, copies, AlphaOrder::of(2));
    CHECK(v.passed);
    CHECK(v.theorem_id == "shatter");
    REQUIRE(spec.u_weights.size() == 5);
    // Block masses in closed form: 2 - sqrt(2) and sqrt(2) - 1.
    CHECK(spec.u_weights[0] ==
          doctest::Approx((2.0 - std::sqrt(2.0)) / 2.0).epsilon(1e-13));
    CHECK(spec.u_weights[1] == spec.u_weights[0]);
    CHECK(spec.u_weights[2] ==
          doctest::Approx((std::sqrt(2.0) - 1.0) / 3.0).epsilon(1e-13));
    CHECK(spec.x_of_u == std::vector<std::size_t>{0, 0, 1, 1, 1});
    for (std::size_t x = 0; x < 2; ++x) {
      CHECK(spec.induced_x_tilde[x] ==
            doctest::Approx(target[x]).epsilon(1e-12));
    }
    CHECK(v.lhs == doctest::Approx(v.rhs).epsilon(1e-12));
    CHECK(v.rhs ==
          doctest::Approx(sibson_mi(target, w, AlphaOrder::of(2)).nats)
              .epsilon(1e-14));
  }
  SUBCASE("order one splits the target mass evenly within blocks") {
    const auto [spec, v] =
        shatter_construction(prior, w, target, copies, AlphaOrder::one());
    CHECK(v.passed);
    CHECK(spec.u_weights[0] == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(spec.u_weights[2] == doctest::Approx(0.25 / 3.0).epsilon(1e-13));
  }
  SUBCASE("order infinity weights blocks by size") {
    const auto [spec, v] =
        shatter_construction(prior, w, target, copies, AlphaOrder::infinity());
    CHECK(v.passed);
    for (std::size_t u = 0; u < 5; ++u) {
      CHECK(spec.u_weights[u] == doctest::Approx(0.2).epsilon(1e-14));
    }
    CHECK(v.lhs == doctest::Approx(std::log(1.8)).epsilon(1e-12));
  }
  SUBCASE("single copies leave the source untouched") {
    const std::vector<std::size_t> ones{1, 1};
    const auto [spec, v] =
        shatter_construction(prior, w, target, ones, AlphaOrder::of(3));
    CHECK(v.passed);
    CHECK(spec.u_weights.size() == 2);
    // With one lookalike per symbol the lifted source is the tilt-inverse
    // of the target, and the induced tilt is the target itself.
    CHECK(spec.induced_x_tilde[0] == doctest::Approx(0.75).epsilon(1e-12));
  }
}

TEST_CASE("shatter rejects malformed requests") {
  const Channel w = Channel::bsc(0.1);
  const std::vector<std::size_t> copies{2, 3};
  CHECK_THROWS_AS(shatter_construction(Distribution::point_mass(2, 0), w,
                                       Distribution::uniform(2), copies,
                                       AlphaOrder::of(2)),
                  InfeasibleTarget);
  CHECK_THROWS_AS(shatter_construction(Distribution::uniform(2), w,
                                       Distribution::uniform(2),
                                       std::vector<std::size_t>{2},
                                       AlphaOrder::of(2)),
                  DimensionMismatch);
  CHECK_THROWS_AS(shatter_construction(Distribution::uniform(2), w,
                                       Distribution::uniform(2),
                                       std::vector<std::size_t>{2, 0},
                                       AlphaOrder::of(2)),
                  Error);
}

TEST_CASE("shatter equality holds on random instances") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2 + (rng() % 2);
    const Channel w = random_channel(rng, n, 2 + (rng() % 3));
    const Distribution prior = random_distribution(rng, n);
    const Distribution target = random_distribution(rng, n);
    std::vector<std::size_t> copies(n);
    for (auto& c : copies) c = 1 + (rng() % 4);
    const auto [spec, v] =
        shatter_construction(prior, w, target, copies, alpha_ladder(t));
    CHECK(v.passed);
  }
}

TEST_CASE("verdict json lines carry exactly the reporting schema") {
  const TheoremVerdict v = check_composition(Channel::bsc(0.1),
                                             Channel::bsc(0.2),
                                             Distribution::uniform(2),
                                             AlphaOrder::of(2));
  const json j = json::parse(to_json_line(v));
  REQUIRE(j.is_object());
  CHECK(j.size() == 7);
  CHECK(j.at("theorem_id") == "composition");
  CHECK(j.at("seed") == 0);
  CHECK(j.at("passed") == true);
  CHECK(j.at("lhs").get<double>() == v.lhs);
  CHECK(j.at("rhs").get<double>() == v.rhs);
  CHECK(j.at("slack").get<double>() == v.slack);
  CHECK(j.at("witness").is_object());
  CHECK(j.at("witness") == json::parse(v.witness));
}

TEST_CASE("replay reproduces verdicts bit for bit") {
  std::mt19937_64 rng(555);
  const Channel w1 = random_channel(rng, 3, 4);
  const Channel w2 = random_channel(rng, 4, 2);
  const Distribution p = random_distribution(rng, 3);

  const auto [first, second] = check_dpi(w1, w2, p, AlphaOrder::of(1.5));
  const auto replayed = replay(first.witness);
  REQUIRE(replayed.size() == 2);
  CHECK(replayed[0].theorem_id == first.theorem_id);
  CHECK(replayed[0].lhs == first.lhs);
  CHECK(replayed[0].rhs == first.rhs);
  CHECK(replayed[0].passed == first.passed);
  CHECK(replayed[0].instance_digest == first.instance_digest);
  CHECK(replayed[1].lhs == second.lhs);
  CHECK(replayed[1].rhs == second.rhs);

  const TheoremVerdict inf_v =
      check_sibson_infimum(p, w1, AlphaOrder::of(2), 10, 991);
  const auto inf_replayed = replay(inf_v.witness);
  REQUIRE(inf_replayed.size() == 1);
  CHECK(inf_replayed[0].lhs == inf_v.lhs);
  CHECK(inf_replayed[0].rhs == inf_v.rhs);
  CHECK(inf_replayed[0].seed == inf_v.seed);

  const TheoremVerdict q =
      check_quasiconvexity(w1, random_channel(rng, 3, 4), p,
                           AlphaOrder::infinity(), kLambdaGrid);
  const auto q_replayed = replay(q.witness);
  REQUIRE(q_replayed.size() == 1);
  CHECK(q_replayed[0].lhs == q.lhs);
  CHECK(q_replayed[0].rhs == q.rhs);
  CHECK(q_replayed[0].instance_digest == q.instance_digest);
}

TEST_CASE("replay rejects junk") {
  CHECK_THROWS_AS(replay("not json"), ParseError);
  CHECK_THROWS_AS(replay("[1,2]"), ParseError);
  CHECK_THROWS_AS(replay("{\"check\":\"unknown\",\"alpha\":2.0}"), ParseError);
}

TEST_CASE("witness files round-trip through the filesystem") {
  const TheoremVerdict v = check_composition(Channel::bsc(0.1),
                                             Channel::bsc(0.2),
                                             Distribution::uniform(2),
                                             AlphaOrder::infinity());
  const auto dir = std::filesystem::temp_directory_path() /
                   "alphaleak_witness_test";
  std::filesystem::remove_all(dir);
  const std::string path = persist_witness(v, dir.string());
  CHECK(path.find("witness_composition_" + v.instance_digest + ".json") !=
        std::string::npos);
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(content == v.witness + "\n");
  const auto replayed = replay(content);
  REQUIRE(replayed.size() == 1);
  CHECK(replayed[0].lhs == v.lhs);
  std::filesystem::remove_all(dir);
}

TEST_CASE("theorem battery passes on seeded random instances") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    std::mt19937_64 rng(seed * 1000003);
    const std::size_t n = 2 + (rng() % 2);
    const std::size_t m = 2 + (rng() % 3);
    const Channel w1 = random_channel(rng, n, m);
    const Channel w2 = random_channel(rng, n, m);
    const Channel onward = random_channel(rng, m, 2 + (rng() % 2));
    const Distribution prior = random_distribution(rng, n);
    const AlphaOrder a = alpha_ladder(static_cast<int>(seed));

    CHECK(check_quasiconvexity(w1, w2, prior, a, kLambdaGrid).passed);
    const auto [hop1, hop2] = check_dpi(w1, onward, prior, a);
    CHECK(hop1.passed);
    CHECK(hop2.passed);
    CHECK(check_composition(w1, w2, prior, a).passed);
    for (const auto& v : check_bounds(w1, prior, a)) CHECK(v.passed);
    if (!a.is_infinity()) {
      CHECK(check_sibson_infimum(prior, w1, a, 20, seed).passed);
    }
  }
}
