//
// Copyright 2026 The qdpkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "qdpkit/divergence.hpp"
#include "qdpkit/errors.hpp"
#include "qdpkit/inference.hpp"
#include "qdpkit/rng.hpp"

using namespace qdpkit;

TEST_CASE("mix") {
  const StatePair weak = weakest_pure_pair(std::log(2.0));
  CHECK((mix(weak, 1.0).matrix() - weak.rho().matrix()).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((mix(weak, 0.0).matrix() - weak.sigma().matrix()).cwiseAbs().maxCoeff() <= 1e-15);
  const Matrix half = mix(weak, 0.5).matrix();
  CHECK(half(0, 0).real() == doctest::Approx(0.5));
  CHECK(half(1, 1).real() == doctest::Approx(0.5));
  CHECK_THROWS_AS(mix(weak, 1.2), ValidationError);
}

TEST_CASE("sld_fisher") {
  SUBCASE("identical states carry no information") {
    Rng rng(61);
    const Matrix rho = random_density_matrix(rng, 3, 4);
    const StatePair same{DensityOperator(rho), DensityOperator(rho)};
    CHECK(sld_fisher(same, 0.37) == doctest::Approx(0.0).epsilon(1e-10));
  }
  SUBCASE("diagonal pairs reduce to the classical Fisher information") {
    const PrivacyParams p(0.8, 0.07);
    const StatePair weak = weakest_pair(p);
    const double theta = 0.3;
    double classical = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double pi = theta * weak.rho().matrix()(i, i).real() +
                        (1.0 - theta) * weak.sigma().matrix()(i, i).real();
      const double di =
          weak.rho().matrix()(i, i).real() - weak.sigma().matrix()(i, i).real();
      if (pi > 1e-12) classical += di * di / pi;
    }
    CHECK(sld_fisher(weak, theta) == doctest::Approx(classical).epsilon(1e-10));
  }
  SUBCASE("the worked value 4/9") {
    const StatePair weak = weakest_pair(PrivacyParams(std::log(2.0), 0.0));
    CHECK(sld_fisher(weak, 0.5) == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
  }
  SUBCASE("theta range is enforced") {
    const StatePair weak = weakest_pure_pair(0.5);
    CHECK_THROWS_AS(sld_fisher(weak, 0.0), ValidationError);
    CHECK_THROWS_AS(sld_fisher(weak, 1.0), ValidationError);
  }
}

TEST_CASE("fisher_max") {
  CHECK(fisher_max(PrivacyParams(0.0, 0.0), 0.4) == doctest::Approx(0.0));
  CHECK(fisher_max(PrivacyParams(0.0, 0.2), 0.5) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(fisher_max(PrivacyParams(std::log(2.0), 0.0), 0.5) ==
        doctest::Approx(4.0 / 9.0).epsilon(1e-14));
  CHECK_THROWS_AS(fisher_max(PrivacyParams(1.0, 0.1), 0.0), ValidationError);
}

TEST_CASE("fisher_max equals the numeric value on the weakest pair") {
  for (const auto& [eps, delta] : std::vector<std::pair<double, double>>{
           {0.5, 0.0}, {std::log(2.0), 0.05}, {1.0, 0.1}, {2.0, 0.2}}) {
    const PrivacyParams p(eps, delta);
    const StatePair weak = weakest_pair(p);
    for (int i = 1; i <= 9; ++i) {
      const double theta = i / 10.0;
      CHECK(fisher_max(p, theta) == doctest::Approx(sld_fisher(weak, theta)).epsilon(1e-8));
    }
  }
}

TEST_CASE("fisher_max is monotone in the privacy parameters") {
  for (double theta : {0.2, 0.5, 0.8}) {
    double prev = 0.0;
    for (double eps = 0.0; eps <= 3.0; eps += 0.25) {
      const double cur = fisher_max(PrivacyParams(eps, 0.05), theta);
      CHECK(cur >= prev - 1e-12);
      prev = cur;
    }
    prev = 0.0;
    for (double delta = 0.0; delta <= 0.5; delta += 0.05) {
      const double cur = fisher_max(PrivacyParams(0.7, delta), theta);
      CHECK(cur >= prev - 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("fisher_max approaches the unconstrained binomial value") {
  for (double theta : {0.2, 0.5, 0.7}) {
    const double limit = 1.0 / (theta * (1.0 - theta));
    const double value = fisher_max(PrivacyParams(20.0, 0.0), theta);
    CHECK(std::abs(value - limit) / limit <= 1e-4);
  }
}

TEST_CASE("finite-difference check of the Fisher information") {
  Rng rng(62);
  for (int rep = 0; rep < 5; ++rep) {
    const auto cp = oracles::random_commuting_pair(rng, 3, 0.1);
    const double theta = 0.4;
    const double h = 1e-3;
    const StatePair bumped(mix(cp.pair, theta), mix(cp.pair, theta + h));
    const double fd = 4.0 * measured_renyi_half(bumped) / (h * h);
    const double exact = sld_fisher(cp.pair, theta);
    if (exact > 1e-6) {
      CHECK(std::abs(fd - exact) / exact <= 0.01);
    }
  }
}

TEST_CASE("privatized_beta_curve") {
  std::vector<double> alphas;
  for (int i = 0; i <= 20; ++i) alphas.push_back(i / 20.0);

  SUBCASE("degenerate mixing makes the curve diagonal") {
    const PrivacyParams p(0.8, 0.0);
    const StatePair weak = weakest_pair(p);
    const PrivatizedCurve pc = privatized_beta_curve(weak, p, 0.4, 0.4, alphas);
    for (const auto& pt : pc.curve.points) {
      CHECK(pt[1] == doctest::Approx(pt[0]).epsilon(1e-8));
    }
  }
  SUBCASE("weakest pair attains its own envelope") {
    const PrivacyParams p(std::log(2.0), 0.05);
    const PrivatizedCurve pc = privatized_beta_curve(weakest_pair(p), p, 0.2, 0.8, alphas);
    CHECK(std::abs(pc.min_slack) <= 1e-8);
  }
  SUBCASE("certified pairs are dominated pointwise") {
    Rng rng(63);
    const PrivacyParams p(1.0, 0.05);
    for (int rep = 0; rep < 5; ++rep) {
      const StatePair pair = random_dp_pair(rng, 3, p);
      const PrivatizedCurve pc = privatized_beta_curve(pair, p, 0.2, 0.8, alphas);
      CHECK(pc.min_slack >= -1e-7);
    }
  }
  SUBCASE("rejects uncertified pairs") {
    const StatePair far = weakest_pure_pair(2.0);
    CHECK_THROWS_AS(privatized_beta_curve(far, PrivacyParams(0.3, 0.0), 0.2, 0.8, alphas),
                    AssumptionError);
  }
}
