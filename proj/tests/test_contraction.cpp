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
#include "qdpkit/contraction.hpp"
#include "qdpkit/errors.hpp"
#include "qdpkit/rng.hpp"
#include "qdpkit/serialization.hpp"
#include "qdpkit/tolerances.hpp"

using namespace qdpkit;

namespace {

// Measurement in the computational basis followed by depolarizing mixing:
// outputs diag((1-l)p + l/2), a pure eps*-LDP channel with
// eps* = log((2-l)/l).
QuantumChannel depolarized_measurement(double lambda) {
  Matrix t0 = Matrix::Zero(2, 2), t1 = Matrix::Zero(2, 2);
  t0(0, 0) = 1.0 - lambda / 2.0;
  t0(1, 1) = lambda / 2.0;
  t1(0, 0) = lambda / 2.0;
  t1(1, 1) = 1.0 - lambda / 2.0;
  return QuantumChannel::measure_and_prepare({DensityOperator(t0), DensityOperator(t1)});
}

}  // namespace

TEST_CASE("QuantumChannel validation and application") {
  CHECK_THROWS_AS(QuantumChannel({Matrix::Identity(2, 2) * 0.9}), ValidationError);

  Rng rng(71);
  const DensityOperator rho(random_density_matrix(rng, 2, 3));
  SUBCASE("identity") {
    const DensityOperator out = apply(QuantumChannel::identity(2), rho);
    CHECK((out.matrix() - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
  }
  SUBCASE("full depolarizing sends everything to the flat state") {
    const DensityOperator out = apply(QuantumChannel::depolarizing(2, 1.0), rho);
    CHECK((out.matrix() - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
  }
  SUBCASE("measure-and-prepare with extremal outputs is diagonal") {
    const StatePair weak = weakest_pure_pair(1.0);
    const QuantumChannel mp =
        QuantumChannel::measure_and_prepare({weak.rho(), weak.sigma()});
    Matrix plus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    const DensityOperator out = apply(mp, DensityOperator(plus));
    CHECK(std::abs(out.matrix()(0, 1)) <= 1e-12);
    CHECK(out.matrix()(0, 0).real() == doctest::Approx(0.5));
  }
}

TEST_CASE("certify_ldp") {
  SUBCASE("fully depolarizing certifies at every eps") {
    const QuantumChannel ch = QuantumChannel::depolarizing(2, 1.0);
    const LdpCertificate cert = certify_ldp(ch, PrivacyParams(0.1, 0.0), 20, 5);
    CHECK(cert.certified_up_to_sampling);
    CHECK(cert.worst_delta <= 1e-12);
  }
  SUBCASE("identity channel keeps orthogonal inputs orthogonal") {
    const LdpCertificate cert = certify_ldp(QuantumChannel::identity(2),
                                            PrivacyParams(1.0, 0.2), 10, 5);
    CHECK_FALSE(cert.certified_up_to_sampling);
    CHECK(cert.worst_delta == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("depolarized measurement certifies exactly at its closed-form level") {
    const double lambda = 0.5;
    const QuantumChannel ch = depolarized_measurement(lambda);
    const double eps_star = std::log((2.0 - lambda) / lambda);
    const LdpCertificate tight = certify_ldp(ch, PrivacyParams(eps_star, 0.0), 40, 5);
    CHECK(tight.certified_up_to_sampling);
    // At a smaller eps the worst sampled delta matches the basis-input value.
    const double eps = 0.5 * eps_star;
    const LdpCertificate loose = certify_ldp(ch, PrivacyParams(eps, 0.0), 40, 5);
    const double expected = (1.0 - lambda / 2.0) - std::exp(eps) * lambda / 2.0;
    CHECK(loose.worst_delta == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("eta closed form and bounds") {
  SUBCASE("worked values") {
    const PrivacyParams p(std::log(2.0), 0.1);
    CHECK(eta_weakest_closed_form(p, 1.0) ==
          doctest::Approx((2.0 - 1.0 + 0.2) / 3.0).epsilon(1e-14));
    CHECK(eta_weakest_closed_form(p, 1.5) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(eta_weakest_closed_form(p, 2.0) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(eta_weakest_closed_form(p, 5.0) == doctest::Approx(0.1).epsilon(1e-14));

    const PrivacyParams pure(std::log(2.0), 0.0);
    const EtaBounds b = eta_bounds(pure, 1.5);
    CHECK(b.upper == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(b.lower == doctest::Approx(0.0).epsilon(1e-14));
  }
  SUBCASE("bounds coincide at gamma = 1 and the gap is exact below e^eps") {
    for (const auto& [eps, delta] :
         std::vector<std::pair<double, double>>{{0.4, 0.0}, {1.0, 0.1}, {2.0, 0.2}}) {
      const PrivacyParams p(eps, delta);
      const double e = std::exp(eps);
      const EtaBounds at_one = eta_bounds(p, 1.0);
      CHECK(at_one.lower == doctest::Approx(at_one.upper).epsilon(1e-14));
      CHECK(at_one.upper == doctest::Approx((e - 1.0 + 2.0 * delta) / (e + 1.0)).epsilon(1e-14));
      for (double gamma = 1.0; gamma <= e; gamma += (e - 1.0) / 7.0) {
        const EtaBounds b = eta_bounds(p, gamma);
        CHECK(b.upper - b.lower == doctest::Approx((gamma - 1.0) / (e + 1.0)).epsilon(1e-12));
      }
      CHECK(eta_bounds(p, e + 0.5).upper == doctest::Approx(delta));
    }
  }
  SUBCASE("closed form agrees with the weakest pair and is monotone") {
    for (const auto& [eps, delta] :
         std::vector<std::pair<double, double>>{{0.5, 0.0}, {1.0, 0.05}, {1.5, 0.15}}) {
      const PrivacyParams p(eps, delta);
      const StatePair weak = weakest_pair(p);
      double prev = 2.0;
      for (double gamma = 1.0; gamma <= std::exp(eps) + 2.0; gamma += 0.2) {
        const double closed = eta_weakest_closed_form(p, gamma);
        CHECK(closed == doctest::Approx(hockey_stick_q(weak, gamma)).epsilon(1e-10));
        CHECK(closed <= prev + 1e-14);
        prev = closed;
      }
    }
  }
}

TEST_CASE("empirical_contraction") {
  SUBCASE("identity channel contracts nothing") {
    CHECK(empirical_contraction(QuantumChannel::identity(2), 1.0, 10, 7) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("full depolarizing contracts everything") {
    CHECK(empirical_contraction(QuantumChannel::depolarizing(2, 1.0), 1.0, 10, 7) ==
          doctest::Approx(0.0));
  }
  SUBCASE("measure-and-prepare with extremal outputs reaches tanh(eps/2)") {
    const double eps = 1.0;
    const StatePair weak = weakest_pure_pair(eps);
    const QuantumChannel mp =
        QuantumChannel::measure_and_prepare({weak.rho(), weak.sigma()});
    CHECK(empirical_contraction(mp, 1.0, 40, 7) ==
          doctest::Approx(std::tanh(eps / 2.0)).epsilon(1e-10));
  }
  SUBCASE("certified channels respect the upper bound across gamma") {
    const double lambda = 0.4;
    const QuantumChannel ch = depolarized_measurement(lambda);
    const PrivacyParams p(std::log((2.0 - lambda) / lambda), 0.0);
    REQUIRE(certify_ldp(ch, p, 30, 11).certified_up_to_sampling);
    for (double gamma = 1.0; gamma <= 5.0; gamma += 0.5) {
      const double estimate = empirical_contraction(ch, gamma, 30, 11);
      CHECK(estimate <= eta_bounds(p, gamma).upper + kTolDominance);
    }
  }
}

TEST_CASE("channel JSON round trip including rectangular Kraus operators") {
  // Three measurement outcomes repreparing qubit states: 2x3 Kraus shapes.
  Matrix t0 = Matrix::Zero(2, 2), t1 = Matrix::Zero(2, 2);
  t0(0, 0) = 0.8;
  t0(1, 1) = 0.2;
  t1(0, 0) = 0.3;
  t1(1, 1) = 0.7;
  const QuantumChannel ch = QuantumChannel::measure_and_prepare(
      {DensityOperator(t0), DensityOperator(t1), DensityOperator(Matrix(0.5 * Matrix::Identity(2, 2)))});
  REQUIRE(ch.in_dim() == 3);
  REQUIRE(ch.out_dim() == 2);
  const QuantumChannel parsed = channel_from_json(channel_to_json(ch));

  Rng rng(73);
  const DensityOperator probe(random_density_matrix(rng, 3, 4));
  const DensityOperator a = apply(ch, probe);
  const DensityOperator b = apply(parsed, probe);
  CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("classical contraction corollary via randomized response") {
  Rng rng(72);
  for (int rep = 0; rep < 20; ++rep) {
    const double eps = rng.uniform(0.2, 1.5);
    const double e = std::exp(eps);
    const int k = 2 + static_cast<int>(rng.integer(2));
    // k-ary randomized response: (eps, 0)-LDP by construction.
    std::vector<std::vector<double>> rows(k, std::vector<double>(k, 1.0 / (e + k - 1)));
    for (int i = 0; i < k; ++i) rows[i][i] = e / (e + k - 1);
    const MarkovKernel kernel(rows);
    const ClassicalDist p(random_simplex(rng, k));
    const ClassicalDist q(random_simplex(rng, k));
    const PrivacyParams params(eps, 0.0);
    for (double gamma : {1.0, 1.2, e, e + 1.0}) {
      const double in = hockey_stick_c(p, q, gamma);
      if (in <= kTolSupp) continue;
      const double out = hockey_stick_c(kernel.apply(p), kernel.apply(q), gamma);
      CHECK(out / in <= eta_weakest_closed_form(params, gamma) + kTolDominance);
    }
  }
}
