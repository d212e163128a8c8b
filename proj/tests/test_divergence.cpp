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
#include "qdpkit/dpcert.hpp"
#include "qdpkit/errors.hpp"
#include "qdpkit/rng.hpp"
#include "qdpkit/tolerances.hpp"

using namespace qdpkit;

namespace {

StatePair identical_pair(int dim, Rng& rng) {
  const Matrix rho = random_density_matrix(rng, dim, dim + 1);
  return StatePair(DensityOperator(rho), DensityOperator(rho));
}

StatePair random_full_support_pair(Rng& rng, int dim) {
  return StatePair(DensityOperator(random_density_matrix(rng, dim, dim + 2)),
                   DensityOperator(random_density_matrix(rng, dim, dim + 2)));
}

}  // namespace

TEST_CASE("hockey_stick_q on the weakest pair matches the closed form") {
  Rng rng(21);
  const StatePair same = identical_pair(3, rng);
  CHECK(hockey_stick_q(same, 1.0) == doctest::Approx(0.0).epsilon(1e-12));

  for (const auto& [eps, delta] : std::vector<std::pair<double, double>>{
           {0.5, 0.0}, {std::log(2.0), 0.05}, {1.0, 0.1}}) {
    const PrivacyParams p(eps, delta);
    const StatePair weak = weakest_pair(p);
    const double e = std::exp(eps);
    for (double gamma = 1.0; gamma <= e + 1.0; gamma += 0.125) {
      const double expected =
          gamma <= e ? (e - gamma + delta * (gamma + 1.0)) / (e + 1.0) : delta;
      CHECK(hockey_stick_q(weak, gamma) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("hockey_stick_q matches its variational form") {
  Rng rng(22);
  for (int rep = 0; rep < 10; ++rep) {
    const StatePair pair = random_full_support_pair(rng, 3);
    const double gamma = rng.uniform(0.0, 3.0);
    const double value = hockey_stick_q(pair, gamma);
    const Matrix gap = pair.rho().matrix() - gamma * pair.sigma().matrix();
    // Optimal effect: projector onto the positive part.
    const EigResult eig = eig_hermitian(gap);
    Matrix best = Matrix::Zero(3, 3);
    for (int i = 0; i < 3; ++i) {
      if (eig.eigenvalues(i) > 0.0) {
        best += eig.eigenvectors.col(i) * eig.eigenvectors.col(i).adjoint();
      }
    }
    CHECK((best * gap).trace().real() == doctest::Approx(value).epsilon(1e-10));
    for (int trial = 0; trial < 25; ++trial) {
      const Matrix effect = random_effect(rng, 3);
      CHECK((effect * gap).trace().real() <= value + 1e-10);
    }
  }
}

TEST_CASE("hyp_test_div basics") {
  Rng rng(23);
  const StatePair same = identical_pair(3, rng);
  for (double alpha : {0.1, 0.35, 0.6, 0.9}) {
    CHECK(hyp_test_div(same, alpha) == doctest::Approx(-std::log(1.0 - alpha)).epsilon(1e-9));
  }

  const PrivacyParams p(std::log(2.0), 0.05);
  const StatePair weak = weakest_pair(p);
  for (double alpha : {0.0, 0.1, 0.25, 0.5, 0.75}) {
    const double f = f_tradeoff(p, alpha);
    CHECK(hyp_test_div(weak, alpha) == doctest::Approx(-std::log(f)).epsilon(1e-9));
  }
  // Beyond 1 - delta the optimal type-II error is exactly zero.
  CHECK(std::isinf(hyp_test_div(weak, 0.97)));
}

TEST_CASE("hyp_test_div agrees with the classical test on commuting pairs") {
  Rng rng(24);
  for (int rep = 0; rep < 10; ++rep) {
    const auto cp = oracles::random_commuting_pair(rng, 4);
    const ClassicalDist p(cp.p), q(cp.q);
    for (double alpha : {0.1, 0.25, 0.5, 0.8}) {
      CHECK(np_beta_q(cp.pair, alpha) ==
            doctest::Approx(np_beta_c(p, q, alpha)).epsilon(1e-7));
    }
  }
}

TEST_CASE("dual type-II error equals the projector-family primal") {
  Rng rng(25);
  double worst = 0.0;
  for (int rep = 0; rep < 500; ++rep) {
    const int dim = 2 + rep % 5;  // dims 2..6
    const StatePair pair = random_full_support_pair(rng, dim);
    for (int i = 1; i <= 9; ++i) {
      const double alpha = i / 10.0;
      const double dual = np_beta_q(pair, alpha);
      const double primal = oracles::primal_np_beta_hull(pair, alpha);
      worst = std::max(worst, std::abs(dual - primal));
    }
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("beta is nonincreasing convex; divergences monotone") {
  Rng rng(26);
  const StatePair pair = random_full_support_pair(rng, 3);
  std::vector<double> beta;
  for (int i = 0; i <= 20; ++i) beta.push_back(np_beta_q(pair, i / 20.0));
  for (std::size_t i = 1; i < beta.size(); ++i) CHECK(beta[i] <= beta[i - 1] + 1e-9);
  for (std::size_t i = 1; i + 1 < beta.size(); ++i) {
    CHECK(beta[i] <= 0.5 * (beta[i - 1] + beta[i + 1]) + 1e-9);
  }
  double prev = 0.0;
  for (int i = 1; i < 18; ++i) {
    const double d = hyp_test_div(pair, i / 20.0);
    CHECK(d >= prev - 1e-9);
    prev = d;
  }
  // E_gamma is convex nonincreasing and reaches zero at e^{D_max}.
  const double cap = std::exp(d_max(pair.rho(), pair.sigma()));
  std::vector<double> es;
  for (int i = 0; i <= 30; ++i) es.push_back(pair.hockey_stick(i * cap / 30.0));
  for (std::size_t i = 1; i < es.size(); ++i) CHECK(es[i] <= es[i - 1] + 1e-10);
  for (std::size_t i = 1; i + 1 < es.size(); ++i) {
    CHECK(es[i] <= 0.5 * (es[i - 1] + es[i + 1]) + 1e-10);
  }
  CHECK(pair.hockey_stick(cap * 1.0000001) <= 1e-10);
}

TEST_CASE("privacy profile characterization against random effects") {
  Rng rng(27);
  for (int rep = 0; rep < 10; ++rep) {
    const StatePair pair = random_full_support_pair(rng, 2 + rep % 3);
    const double eps = 0.3 + 0.1 * rep;
    // Sufficiency is exact through the hockey-stick value; necessity is
    // sampled over random effects.
    const double delta_star = std::max(pair.hockey_stick(std::exp(eps)),
                                       pair.hockey_stick(std::exp(eps), Order::kSigmaRho));
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const Matrix effect = random_effect(rng, pair.dim());
      const double lhs = (effect * pair.rho().matrix()).trace().real();
      const double rhs = std::exp(eps) * (effect * pair.sigma().matrix()).trace().real();
      CHECK(lhs <= rhs + delta_star + 1e-10);
      worst = std::max(worst, lhs - rhs);
    }
    CHECK(worst <= delta_star + 1e-10);
  }
}

TEST_CASE("relative_entropy") {
  Rng rng(28);
  const StatePair same = identical_pair(4, rng);
  CHECK(relative_entropy(same) == doctest::Approx(0.0).epsilon(1e-12));

  const double eps = std::log(2.0);
  CHECK(relative_entropy(weakest_pure_pair(eps)) ==
        doctest::Approx(eps * std::tanh(eps / 2.0)).epsilon(1e-12));

  Matrix pure = Matrix::Zero(2, 2);
  pure(0, 0) = 1.0;
  const StatePair mixed(DensityOperator(pure), DensityOperator(Matrix(0.5 * Matrix::Identity(2, 2))));
  CHECK(relative_entropy(mixed) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  // Support violation yields the sentinel.
  const StatePair reversed(mixed.sigma(), mixed.rho());
  CHECK(std::isinf(relative_entropy(reversed)));
}

TEST_CASE("relative entropy integral representation") {
  Rng rng(29);
  for (int rep = 0; rep < 25; ++rep) {
    const int dim = 2 + static_cast<int>(rng.integer(3));
    const StatePair pair = random_full_support_pair(rng, dim);
    CHECK(relative_entropy_via_integral(pair) ==
          doctest::Approx(relative_entropy(pair)).epsilon(1e-6));
  }
  // Strict support inclusion: the reverse term carries a constant tail.
  Matrix pure = Matrix::Zero(2, 2);
  pure(0, 0) = 1.0;
  const StatePair mixed(DensityOperator(pure), DensityOperator(Matrix(0.5 * Matrix::Identity(2, 2))));
  CHECK(relative_entropy_via_integral(mixed) == doctest::Approx(std::log(2.0)).epsilon(1e-7));
}

TEST_CASE("d_max basics") {
  const StatePair weak = weakest_pure_pair(0.7);
  CHECK(d_max(weak.rho(), weak.sigma()) == doctest::Approx(0.7).epsilon(1e-10));
  CHECK(d_max(weak.sigma(), weak.rho()) == doctest::Approx(0.7).epsilon(1e-10));
  const PrivacyParams p(0.7, 0.1);
  const StatePair weak4 = weakest_pair(p);
  CHECK(std::isinf(d_max(weak4.rho(), weak4.sigma())));
}

TEST_CASE("smooth_truncate") {
  SUBCASE("no excess mass leaves the state untouched") {
    const StatePair weak = weakest_pure_pair(0.8);
    const SmoothTruncation t = smooth_truncate(weak, 0.8);
    CHECK(t.delta == doctest::Approx(0.0));
    CHECK((t.rho_tilde.matrix() - weak.rho().matrix()).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(t.dmax_value <= 0.8 + 1e-9);
  }
  SUBCASE("weakest pair at its own level") {
    const double eps = std::log(2.0);
    const double delta = 0.1;
    const StatePair weak = weakest_pair(PrivacyParams(eps, delta));
    const SmoothTruncation t = smooth_truncate(weak, eps);
    CHECK(t.delta == doctest::Approx(delta).epsilon(1e-10));
    CHECK(t.trace_distance <= std::sqrt(delta * (2.0 - delta)) + 1e-10);
    CHECK(t.dmax_value <= eps - std::log(1.0 - delta) + 1e-9);
    // For this diagonal pair the smoothing meets its cap exactly.
    CHECK(t.dmax_value == doctest::Approx(eps - std::log(1.0 - delta)).epsilon(1e-9));
  }
  SUBCASE("identical states") {
    Rng rng(30);
    const StatePair same = identical_pair(3, rng);
    const SmoothTruncation t = smooth_truncate(same, 0.5);
    CHECK(t.delta == doctest::Approx(0.0));
    CHECK(t.dmax_value <= 1e-9);
    CHECK(t.trace_distance <= 1e-9);
  }
  SUBCASE("random pairs respect both guarantees") {
    Rng rng(31);
    for (int rep = 0; rep < 20; ++rep) {
      const StatePair pair = random_full_support_pair(rng, 3);
      const double eps = rng.uniform(0.1, 1.0);
      const SmoothTruncation t = smooth_truncate(pair, eps);
      CHECK(t.dmax_value <= eps - std::log(1.0 - t.delta) + 1e-8);
      CHECK(t.trace_distance <= std::sqrt(t.delta * (2.0 - t.delta)) + 1e-8);
    }
  }
}

TEST_CASE("renyi_hockey") {
  Rng rng(32);
  const StatePair same = identical_pair(2, rng);
  for (double alpha : {0.3, 0.5, 2.0, 3.0}) {
    CHECK(renyi_hockey(same, alpha) == doctest::Approx(0.0).epsilon(1e-8));
  }

  SUBCASE("commuting pairs match the classical value") {
    for (int rep = 0; rep < 6; ++rep) {
      const auto cp = oracles::random_commuting_pair(rng, 2);
      for (double alpha : {0.5, 0.95, 2.0}) {
        CHECK(renyi_hockey(cp.pair, alpha) ==
              doctest::Approx(oracles::renyi_classical(cp.p, cp.q, alpha)).epsilon(1e-6));
      }
    }
  }
  SUBCASE("weakest pure pair at order one half") {
    const StatePair weak = weakest_pure_pair(std::log(3.0));
    const double expected = oracles::renyi_classical({0.75, 0.25}, {0.25, 0.75}, 0.5);
    CHECK(renyi_hockey(weak, 0.5) == doctest::Approx(expected).epsilon(1e-7));
  }
  SUBCASE("two-sided support leak still matches the classical diagonal value") {
    // delta > 0 makes both support leaks positive, exercising both
    // singular quadrature legs down to u = 0.
    const StatePair weak = weakest_pair(PrivacyParams(std::log(2.0), 0.1));
    const std::vector<double> p{0.1, 0.6, 0.3, 0.0};
    const std::vector<double> q{0.0, 0.3, 0.6, 0.1};
    for (double alpha : {0.3, 0.5, 0.9}) {
      CHECK(renyi_hockey(weak, alpha) ==
            doctest::Approx(oracles::renyi_classical(p, q, alpha)).epsilon(1e-6));
    }
  }
  SUBCASE("validity conditions") {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = 1.0;
    Matrix b = Matrix::Zero(2, 2);
    b(1, 1) = 1.0;
    const StatePair orthogonal{DensityOperator(a), DensityOperator(b)};
    CHECK_THROWS_AS(renyi_hockey(orthogonal, 0.5), AssumptionError);
    // alpha > 1 without support inclusion is outside the domain.
    const StatePair weak4 = weakest_pair(PrivacyParams(0.5, 0.1));
    CHECK_THROWS_AS(renyi_hockey(weak4, 2.0), AssumptionError);
    CHECK_THROWS_AS(renyi_hockey(weak4, 1.0), ValidationError);
  }
  SUBCASE("order zero limit is -log of the sigma-mass on supp(rho)") {
    Matrix pure = Matrix::Zero(2, 2);
    pure(0, 0) = 1.0;
    const StatePair pair(DensityOperator(Matrix(0.5 * Matrix::Identity(2, 2))),
                         DensityOperator(pure));
    CHECK(renyi_hockey(pair, 0.0) == doctest::Approx(0.0).epsilon(1e-9));  // full overlap
    const StatePair narrow(DensityOperator(pure),
                           DensityOperator(Matrix(0.5 * Matrix::Identity(2, 2))));
    CHECK(renyi_hockey(narrow, 0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-9));
  }
}

TEST_CASE("measured_renyi_half") {
  Rng rng(33);
  const StatePair same = identical_pair(3, rng);
  CHECK(measured_renyi_half(same) == doctest::Approx(0.0).epsilon(1e-9));

  SUBCASE("commuting pairs reproduce the classical order-1/2 divergence") {
    const auto p = std::vector<double>{0.75, 0.25};
    const auto q = std::vector<double>{0.25, 0.75};
    const StatePair pair(DensityOperator(oracles::diag_density(p)),
                         DensityOperator(oracles::diag_density(q)));
    const double classical = oracles::renyi_classical(p, q, 0.5);
    CHECK(measured_renyi_half(pair) == doctest::Approx(classical).epsilon(1e-10));
    // The half-log reading deviates by a factor of four.
    CHECK(measured_renyi_half(pair, MeasuredHalfReading::kHalfLog) ==
          doctest::Approx(classical / 4.0).epsilon(1e-10));
  }
  SUBCASE("pure non-commuting pair from the overlap") {
    Matrix zero_state = Matrix::Zero(2, 2);
    zero_state(0, 0) = 1.0;
    Matrix plus_state(2, 2);
    plus_state << 0.5, 0.5, 0.5, 0.5;
    const StatePair pair{DensityOperator(zero_state), DensityOperator(plus_state)};
    // ||sqrt(rho) sqrt(sigma)||_1 = 1/sqrt(2).
    CHECK(measured_renyi_half(pair) == doctest::Approx(std::log(2.0)).epsilon(1e-10));
  }
  SUBCASE("orthogonal states are rejected") {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = 1.0;
    Matrix b = Matrix::Zero(2, 2);
    b(1, 1) = 1.0;
    CHECK_THROWS_AS(measured_renyi_half(StatePair{DensityOperator(a), DensityOperator(b)}),
                    AssumptionError);
  }
}

TEST_CASE("f_divergence") {
  Rng rng(34);
  const StatePair same = identical_pair(3, rng);
  CHECK(f_divergence(same, FWeight::kl()) == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(f_divergence(same, FWeight::chi_squared()) == doctest::Approx(0.0).epsilon(1e-8));

  SUBCASE("KL weight reproduces relative entropy") {
    const double eps = std::log(2.0);
    CHECK(f_divergence(weakest_pure_pair(eps), FWeight::kl()) ==
          doctest::Approx(eps * std::tanh(eps / 2.0)).epsilon(1e-7));
    for (int rep = 0; rep < 8; ++rep) {
      const StatePair pair = random_full_support_pair(rng, 3);
      CHECK(f_divergence(pair, FWeight::kl()) ==
            doctest::Approx(relative_entropy(pair)).epsilon(1e-6));
    }
  }
  SUBCASE("chi-squared weight matches the classical formula on commuting pairs") {
    for (int rep = 0; rep < 6; ++rep) {
      const auto cp = oracles::random_commuting_pair(rng, 3);
      CHECK(f_divergence(cp.pair, FWeight::chi_squared()) ==
            doctest::Approx(oracles::chi_squared_classical(cp.p, cp.q)).epsilon(1e-6));
    }
  }
  SUBCASE("support violation diverges for the KL weight") {
    Matrix pure = Matrix::Zero(2, 2);
    pure(0, 0) = 1.0;
    const StatePair bad(DensityOperator(pure),
                        DensityOperator(Matrix(0.5 * Matrix::Identity(2, 2))));
    const StatePair worse(bad.sigma(), bad.rho());
    CHECK(std::isinf(f_divergence(worse, FWeight::kl())));
  }
  SUBCASE("a concave weight is rejected") {
    CHECK_THROWS_AS(FWeight([](double) { return -1.0; }, "concave"), ValidationError);
  }
}

TEST_CASE("mixture_kl_bound") {
  Rng rng(35);
  const DensityOperator rho(random_density_matrix(rng, 3, 4));
  SUBCASE("single component collapses to the plain divergence") {
    const DensityOperator sigma(random_density_matrix(rng, 3, 4));
    const auto b = mixture_kl_bound(rho, {{1.0, sigma}});
    const double d = relative_entropy(StatePair(rho, sigma));
    CHECK(b.bound_simple == doctest::Approx(d).epsilon(1e-10));
    CHECK(b.bound_tight == doctest::Approx(d).epsilon(1e-10));
  }
  SUBCASE("rho equals a component") {
    const DensityOperator sigma2(random_density_matrix(rng, 3, 4));
    const auto b = mixture_kl_bound(rho, {{0.5, rho}, {0.5, sigma2}});
    CHECK(b.bound_tight <= std::log(2.0) + 1e-10);
    CHECK(b.bound_tight <= b.bound_simple + 1e-12);
  }
  SUBCASE("bounds dominate the true mixture divergence") {
    for (int rep = 0; rep < 10; ++rep) {
      const DensityOperator s1(random_density_matrix(rng, 3, 4));
      const DensityOperator s2(random_density_matrix(rng, 3, 4));
      const double w = rng.uniform(0.05, 0.95);
      const auto b = mixture_kl_bound(rho, {{w, s1}, {1.0 - w, s2}});
      const DensityOperator mixture(
          Matrix(w * s1.matrix() + (1.0 - w) * s2.matrix()));
      const double direct = relative_entropy(StatePair(rho, mixture));
      CHECK(direct <= b.bound_tight + 1e-8);
      CHECK(b.bound_tight <= b.bound_simple + 1e-12);
    }
  }
  SUBCASE("support escape is rejected") {
    Matrix pure = Matrix::Zero(3, 3);
    pure(0, 0) = 1.0;
    CHECK_THROWS_AS(mixture_kl_bound(rho, {{1.0, DensityOperator(pure)}}), AssumptionError);
  }
}

TEST_CASE("reversed Pinsker inequality") {
  SUBCASE("identical states") {
    Rng rng(36);
    const StatePair same = identical_pair(3, rng);
    const ReversedPinsker rp = reversed_pinsker_check(same);
    CHECK(rp.lhs == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rp.rhs == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("pure-DP extremal pair in closed form") {
    const double eps = std::log(2.0);
    const ReversedPinsker rp = reversed_pinsker_check(weakest_pure_pair(eps));
    CHECK(rp.lhs == doctest::Approx(std::log(2.0) / 3.0).epsilon(1e-12));
    CHECK(rp.rhs == doctest::Approx(2.0 * 3.0 * (1.0 / 9.0)).epsilon(1e-12));
    CHECK(rp.lhs <= rp.rhs);
  }
  SUBCASE("random full-support pairs") {
    Rng rng(37);
    for (int rep = 0; rep < 15; ++rep) {
      const StatePair pair = random_full_support_pair(rng, 3);
      const ReversedPinsker rp = reversed_pinsker_check(pair);
      CHECK(rp.lhs <= rp.rhs + 1e-10);
    }
  }
}

TEST_CASE("max-relative-entropy chain bound") {
  Rng rng(38);
  for (int rep = 0; rep < 20; ++rep) {
    const DensityOperator rho(random_density_matrix(rng, 3, 4));
    const DensityOperator mid(random_density_matrix(rng, 3, 4));
    const DensityOperator sigma(random_density_matrix(rng, 3, 4));
    const double lhs = relative_entropy(StatePair(rho, sigma));
    const double rhs = relative_entropy(StatePair(rho, mid)) + d_max(mid, sigma);
    CHECK(lhs <= rhs + 1e-9);
  }
}
