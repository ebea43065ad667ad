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
#include <random>
#include <vector>

#include "alphaleak/measures.hpp"
#include "doctest.h"

using namespace alphaleak;

namespace {

// Independent oracle: the literal formulas in extended precision with plain
// pow, no log-domain rearrangement. Only usable away from extreme orders.
long double entropy_ld(const Distribution& p, long double a) {
  long double s = 0.0L;
  for (std::size_t i : p.support()) s += powl(p[i], a);
  return logl(s) / (1.0L - a);
}

long double divergence_ld(const Distribution& p, const Distribution& q,
                          long double a) {
  long double s = 0.0L;
  for (std::size_t i : p.support()) s += powl(p[i], a) * powl(q[i], 1.0L - a);
  return logl(s) / (a - 1.0L);
}

long double cond_entropy_ld(const Joint& j, long double a) {
  long double outer = 0.0L;
  for (std::size_t y = 0; y < j.y_size(); ++y) {
    long double inner = 0.0L;
    for (std::size_t x = 0; x < j.x_size(); ++x) inner += powl(j.mass(x, y), a);
    outer += powl(inner, 1.0L / a);
  }
  return a / (1.0L - a) * logl(outer);
}

long double sibson_ld(const Distribution& p, const Channel& w, long double a) {
  long double outer = 0.0L;
  for (std::size_t y = 0; y < w.out_size(); ++y) {
    long double inner = 0.0L;
    for (std::size_t x = 0; x < p.size(); ++x) {
      inner += static_cast<long double>(p[x]) * powl(w.prob(x, y), a);
    }
    outer += powl(inner, 1.0L / a);
  }
  return a / (a - 1.0L) * logl(outer);
}

// Literal entropy difference, the form the log-domain code deliberately
// avoids.
long double arimoto_ld(const Distribution& p, const Channel& w,
                       long double a) {
  return entropy_ld(p, a) - cond_entropy_ld(joint_from(p, w), a);
}

constexpr double kLn2 = 0.6931471805599453;

}  // namespace

TEST_CASE("renyi entropy closed forms") {
  const Distribution p({0.5, 0.25, 0.25});
  CHECK(renyi_entropy(p, AlphaOrder::of(2)).nats ==
        doctest::Approx(-std::log(0.375)).epsilon(1e-14));
  CHECK(renyi_entropy(p, AlphaOrder::infinity()).nats ==
        doctest::Approx(kLn2).epsilon(1e-14));
  CHECK(renyi_entropy(Distribution::uniform(4), AlphaOrder::one()).nats ==
        doctest::Approx(std::log(4.0)).epsilon(1e-14));
  // Point masses have zero entropy at every order.
  for (double a : {0.5, 1.0, 2.0, 50.0}) {
    CHECK(std::abs(renyi_entropy(Distribution::point_mass(3, 1),
                                 AlphaOrder::of(a))
                       .nats) < 1e-14);
  }
  CHECK(renyi_entropy(Distribution::point_mass(3, 1), AlphaOrder::infinity())
            .nats == doctest::Approx(0.0));
}

TEST_CASE("renyi entropy is bounded and nonincreasing in alpha") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const Distribution p = random_distribution(rng, 4);
    double prev = renyi_entropy(p, AlphaOrder::of(0.5)).nats;
    CHECK(prev <= std::log(4.0) + 1e-12);
    for (double a : {0.9, 1.0, 1.5, 4.0, 40.0}) {
      const double h = renyi_entropy(p, AlphaOrder::of(a)).nats;
      CHECK(h >= -1e-12);
      CHECK(h <= prev + 1e-12);
      prev = h;
    }
    CHECK(renyi_entropy(p, AlphaOrder::infinity()).nats <= prev + 1e-12);
  }
}

TEST_CASE("renyi divergence closed forms and infinities") {
  const Distribution p({0.5, 0.5});
  const Distribution q({0.25, 0.75});
  CHECK(renyi_divergence(p, q, AlphaOrder::of(2)).nats ==
        doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-14));
  CHECK(renyi_divergence(p, q, AlphaOrder::one()).nats ==
        doctest::Approx(0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0))
            .epsilon(1e-13));
  CHECK(renyi_divergence(p, q, AlphaOrder::infinity()).nats ==
        doctest::Approx(kLn2).epsilon(1e-14));

  SUBCASE("identical arguments give zero") {
    for (double a : {0.5, 1.0, 2.0, 50.0}) {
      CHECK(std::abs(renyi_divergence(q, q, AlphaOrder::of(a)).nats) < 1e-12);
    }
  }
  SUBCASE("support escape is infinite for orders >= 1") {
    const Distribution hole({1.0, 0.0});
    CHECK(std::isinf(renyi_divergence(p, hole, AlphaOrder::one()).nats));
    CHECK(std::isinf(renyi_divergence(p, hole, AlphaOrder::of(2)).nats));
    CHECK(std::isinf(renyi_divergence(p, hole, AlphaOrder::infinity()).nats));
    // Below order one the overlap term keeps it finite.
    CHECK(renyi_divergence(p, hole, AlphaOrder::of(0.5)).nats ==
          doctest::Approx(kLn2).epsilon(1e-13));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(
        renyi_divergence(p, Distribution::uniform(3), AlphaOrder::of(2)),
        DimensionMismatch);
  }
}

TEST_CASE("arimoto conditional entropy special joints") {
  const Joint noisy = joint_from(Distribution::uniform(2), Channel::bsc(0.1));
  CHECK(arimoto_cond_entropy(noisy, AlphaOrder::infinity()).nats ==
        doctest::Approx(-std::log(0.9)).epsilon(1e-14));

  // Identity-channel joints are deterministic given Y.
  const Joint det = joint_from(Distribution({0.2, 0.8}), Channel::identity(2));
  for (double a : {0.5, 1.0, 2.0, 50.0}) {
    CHECK(std::abs(arimoto_cond_entropy(det, AlphaOrder::of(a)).nats) <
          1e-12);
  }

  // Independent joints collapse to the marginal entropy.
  const Joint indep = joint_from(Distribution({0.5, 0.5}),
                                 Channel::rank_one(2, Distribution({0.3, 0.7})));
  for (double a : {0.5, 2.0, 7.0}) {
    CHECK(arimoto_cond_entropy(indep, AlphaOrder::of(a)).nats ==
          doctest::Approx(renyi_entropy(Distribution({0.5, 0.5}),
                                        AlphaOrder::of(a))
                              .nats)
              .epsilon(1e-13));
  }

  // Dead output columns are ignored.
  const Joint dead = joint_from(Distribution::uniform(2),
                                Channel({{1.0, 0.0}, {1.0, 0.0}}));
  CHECK(arimoto_cond_entropy(dead, AlphaOrder::of(2)).nats ==
        doctest::Approx(kLn2).epsilon(1e-13));
}

TEST_CASE("sibson mutual information closed forms") {
  const Distribution u2 = Distribution::uniform(2);
  const Channel bsc = Channel::bsc(0.1);
  CHECK(sibson_mi(u2, bsc, AlphaOrder::of(2)).nats ==
        doctest::Approx(std::log(1.64)).epsilon(1e-14));
  CHECK(sibson_mi(u2, bsc, AlphaOrder::infinity()).nats ==
        doctest::Approx(std::log(1.8)).epsilon(1e-14));
  const double hb = -0.1 * std::log(0.1) - 0.9 * std::log(0.9);
  CHECK(sibson_mi(u2, bsc, AlphaOrder::one()).nats ==
        doctest::Approx(kLn2 - hb).epsilon(1e-13));

  SUBCASE("identity channel turns Sibson MI into order-1/alpha entropy") {
    const Distribution p({0.7, 0.2, 0.1});
    for (double a : {2.0, 5.0}) {
      CHECK(sibson_mi(p, Channel::identity(3), AlphaOrder::of(a)).nats ==
            doctest::Approx(renyi_entropy(p, AlphaOrder::of(1.0 / a)).nats)
                .epsilon(1e-13));
    }
  }
  SUBCASE("rank-one channels carry nothing") {
    const Channel flat = Channel::rank_one(3, Distribution({0.2, 0.8}));
    const Distribution p({0.7, 0.2, 0.1});
    for (double a : {0.5, 1.0, 2.0, 50.0}) {
      CHECK(std::abs(sibson_mi(p, flat, AlphaOrder::of(a)).nats) < 1e-12);
    }
    CHECK(std::abs(sibson_mi(p, flat, AlphaOrder::infinity()).nats) < 1e-12);
  }
  SUBCASE("order infinity maximizes over the prior support only") {
    const Channel w({{0.9, 0.1}, {0.1, 0.9}, {1.0, 0.0}});
    const Distribution restricted({0.5, 0.5, 0.0});
    CHECK(sibson_mi(restricted, w, AlphaOrder::infinity()).nats ==
          doctest::Approx(std::log(1.8)).epsilon(1e-14));
  }
}

TEST_CASE("arimoto mutual information closed forms") {
  const Distribution u2 = Distribution::uniform(2);
  const Channel bsc = Channel::bsc(0.1);
  // At a uniform prior Arimoto and Sibson coincide at every order.
  for (double a : {0.5, 1.0, 1.5, 2.0, 30.0}) {
    CHECK(arimoto_mi(u2, bsc, AlphaOrder::of(a)).nats ==
          doctest::Approx(sibson_mi(u2, bsc, AlphaOrder::of(a)).nats)
              .epsilon(1e-13));
  }
  CHECK(arimoto_mi(u2, bsc, AlphaOrder::infinity()).nats ==
        doctest::Approx(std::log(1.8)).epsilon(1e-14));

  SUBCASE("identity channel recovers the prior's entropy") {
    const Distribution p({0.7, 0.2, 0.1});
    for (double a : {0.5, 2.0, 5.0}) {
      CHECK(arimoto_mi(p, Channel::identity(3), AlphaOrder::of(a)).nats ==
            doctest::Approx(renyi_entropy(p, AlphaOrder::of(a)).nats)
                .epsilon(1e-13));
    }
    CHECK(arimoto_mi(p, Channel::identity(3), AlphaOrder::infinity()).nats ==
          doctest::Approx(renyi_entropy(p, AlphaOrder::infinity()).nats)
              .epsilon(1e-13));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(arimoto_mi(Distribution::uniform(3), bsc,
                               AlphaOrder::of(2)),
                    DimensionMismatch);
  }
}

TEST_CASE("log-domain paths agree with the extended-precision oracle") {
  std::mt19937_64 rng(20260814);
  for (int t = 0; t < 6; ++t) {
    const Distribution p = random_distribution(rng, 5);
    const Distribution q = random_distribution(rng, 5);
    const Channel w = random_channel(rng, 5, 5);
    const Joint j = joint_from(p, w);
    for (double a : {0.5, 2.0, 5.0, 50.0}) {
      const AlphaOrder order = AlphaOrder::of(a);
      const long double al = a;
      CHECK(std::abs(renyi_entropy(p, order).nats -
                     static_cast<double>(entropy_ld(p, al))) < 1e-10);
      CHECK(std::abs(renyi_divergence(p, q, order).nats -
                     static_cast<double>(divergence_ld(p, q, al))) < 1e-10);
      CHECK(std::abs(arimoto_cond_entropy(j, order).nats -
                     static_cast<double>(cond_entropy_ld(j, al))) < 1e-10);
      CHECK(std::abs(sibson_mi(p, w, order).nats -
                     static_cast<double>(sibson_ld(p, w, al))) < 1e-10);
      CHECK(std::abs(arimoto_mi(p, w, order).nats -
                     static_cast<double>(arimoto_ld(p, w, al))) < 1e-10);
    }
  }
}

TEST_CASE("sibson mi is nondecreasing in alpha at a fixed prior") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    const Distribution p = random_distribution(rng, 3);
    const Channel w = random_channel(rng, 3, 4);
    double prev = 0.0;
    for (double a : {0.5, 1.0, 1.5, 2.0, 8.0, 80.0}) {
      const double s = sibson_mi(p, w, AlphaOrder::of(a)).nats;
      CHECK(s >= prev - 1e-10);
      prev = s;
    }
    CHECK(sibson_mi(p, w, AlphaOrder::infinity()).nats >= prev - 1e-10);
  }
}

TEST_CASE("measures are continuous at the alpha boundaries") {
  const Distribution p({0.6, 0.3, 0.1});
  const Channel w({{0.7, 0.2, 0.1}, {0.1, 0.8, 0.1}, {0.3, 0.3, 0.4}});
  SUBCASE("approach to order one") {
    for (double a : {1.0 - 1e-7, 1.0 + 1e-7}) {
      CHECK(std::abs(renyi_entropy(p, AlphaOrder::of(a)).nats -
                     renyi_entropy(p, AlphaOrder::one()).nats) < 1e-5);
      CHECK(std::abs(sibson_mi(p, w, AlphaOrder::of(a)).nats -
                     sibson_mi(p, w, AlphaOrder::one()).nats) < 1e-5);
      CHECK(std::abs(arimoto_mi(p, w, AlphaOrder::of(a)).nats -
                     arimoto_mi(p, w, AlphaOrder::one()).nats) < 1e-5);
    }
  }
  SUBCASE("approach to order infinity survives alpha = 1e6") {
    const double big = 1e6;
    CHECK(std::abs(renyi_entropy(p, AlphaOrder::of(big)).nats -
                   renyi_entropy(p, AlphaOrder::infinity()).nats) < 1e-4);
    CHECK(std::abs(sibson_mi(p, w, AlphaOrder::of(big)).nats -
                   sibson_mi(p, w, AlphaOrder::infinity()).nats) < 1e-4);
    CHECK(std::abs(arimoto_mi(p, w, AlphaOrder::of(big)).nats -
                   arimoto_mi(p, w, AlphaOrder::infinity()).nats) < 1e-4);
  }
}

TEST_CASE("alpha order parsing") {
  CHECK(AlphaOrder::of(1.0).is_one());
  CHECK(AlphaOrder::of(std::numeric_limits<double>::infinity()).is_infinity());
  CHECK(AlphaOrder::of(2.5).is_finite());
  CHECK(AlphaOrder::of(2.5).finite_value() == 2.5);
  CHECK_THROWS_AS(AlphaOrder::of(0.0), AlphaOutOfRange);
  CHECK_THROWS_AS(AlphaOrder::of(-2.0), AlphaOutOfRange);
  CHECK_THROWS_AS(AlphaOrder::of(std::nan("")), AlphaOutOfRange);
}
