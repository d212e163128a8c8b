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

#include "qdpkit/divergence.hpp"

#include <algorithm>
#include <cmath>

#include "qdpkit/errors.hpp"
#include "qdpkit/quadrature.hpp"
#include "qdpkit/tolerances.hpp"

namespace qdpkit {

namespace {

// Positive-part trace of (a - gamma b) without the Hermiticity re-check;
// inputs are already symmetrized density matrices.
double positive_part(const Matrix& a, const Matrix& b, double gamma) {
  const RealVector lam = eigenvalues_hermitian(a - gamma * b);
  double total = 0.0;
  for (int i = 0; i < lam.size(); ++i) total += std::max(lam(i), 0.0);
  return total;
}

double support_leak(const DensityOperator& a, const DensityOperator& b) {
  // Mass of a outside the support of b.
  return (b.kernel_projector() * a.matrix()).trace().real();
}

// Integrates u^q * g(u) on [0, hi] for q > -1, where g is continuous at 0.
// The substitution u = v^(1/(q+1)) absorbs the power weight exactly.
double integrate_power_segment(const std::function<double(double)>& g, double q, double hi,
                               double abs_tol) {
  if (hi <= 0.0) return 0.0;
  const double s = 1.0 / (q + 1.0);
  const double v_hi = std::pow(hi, q + 1.0);
  const auto transformed = [&](double v) { return g(std::pow(v, s)); };
  return s * adaptive_simpson(transformed, 0.0, v_hi, abs_tol);
}

}  // namespace

StatePair::StatePair(DensityOperator rho, DensityOperator sigma)
    : rho_(std::move(rho)), sigma_(std::move(sigma)) {
  if (rho_.dim() != sigma_.dim()) {
    throw ValidationError("DimMismatch", "state dimensions differ");
  }
}

StatePair::StatePair(const StatePair& other) : rho_(other.rho_), sigma_(other.sigma_) {
  std::scoped_lock lock(other.cache_mutex_);
  cache_ = other.cache_;
}

double StatePair::hockey_stick(double gamma, Order order) const {
  if (!(gamma >= 0.0)) throw ValidationError("RangeError", "gamma must be >= 0");
  const auto key = std::make_pair(gamma, static_cast<int>(order));
  {
    std::scoped_lock lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const double value = order == Order::kRhoSigma
                           ? positive_part(rho_.matrix(), sigma_.matrix(), gamma)
                           : positive_part(sigma_.matrix(), rho_.matrix(), gamma);
  std::scoped_lock lock(cache_mutex_);
  cache_.emplace(key, value);
  return value;
}

double hockey_stick_q(const StatePair& pair, double gamma) {
  return pair.hockey_stick(gamma, Order::kRhoSigma);
}

double d_max(const DensityOperator& a, const DensityOperator& b) {
  if (support_leak(a, b) > kTolSupp) return kInf;
  const Matrix proj = b.support_projector();
  const Matrix s = inv_sqrt_psd(b.matrix(), kTolSupp);
  const Matrix m = s * (proj * a.matrix() * proj) * s;
  const RealVector lam = eigenvalues_hermitian(0.5 * (m + Matrix(m.adjoint())));
  const double top = lam.maxCoeff();
  if (top <= 0.0) return -kInf;
  return std::log(top);
}

std::vector<double> pencil_crossings(const DensityOperator& a, const DensityOperator& b) {
  // gammas with det(a - gamma b) = 0. A small ridge keeps the generalized
  // solver defined for singular b; these values are refinement hints, not
  // load-bearing constants.
  const int d = a.dim();
  const Matrix ridge = b.matrix() + 1e-13 * Matrix::Identity(d, d);
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> solver(a.matrix(), ridge);
  std::vector<double> out;
  if (solver.info() != Eigen::Success) return out;
  for (int i = 0; i < d; ++i) {
    const double g = solver.eigenvalues()(i);
    if (std::isfinite(g) && g > 0.0 && g < 1e12) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double np_beta_q(const StatePair& pair, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("RangeError", "alpha must lie in [0, 1]");
  }
  if (alpha >= 1.0) return 0.0;
  if (alpha <= 0.0) {
    // Only tests supported on ker(rho) keep the type-I error at zero.
    return std::clamp(
        1.0 - (pair.rho().kernel_projector() * pair.sigma().matrix()).trace().real(), 0.0, 1.0);
  }
  const Matrix& rho = pair.rho().matrix();
  const Matrix& sigma = pair.sigma().matrix();
  const auto dual = [&](double t) { return 1.0 - t * alpha - positive_part(sigma, rho, t); };

  double hi;
  const double dm = d_max(pair.sigma(), pair.rho());
  if (std::isfinite(dm)) {
    // Support floors keep finite D_max well below this cap; beyond it the
    // golden bracket would outrun double precision anyway.
    hi = std::exp(std::min(dm, 60.0)) + 1.0;
  } else {
    // Expand until the concave dual starts decreasing; the optimum then
    // lies inside [0, hi].
    hi = 1.0;
    while (hi < 1e12 && dual(2.0 * hi) > dual(hi)) hi *= 2.0;
    hi *= 2.0;
  }
  const GoldenMax best = golden_section_max(dual, 0.0, hi, 200);
  return std::clamp(best.value, 0.0, 1.0);
}

double hyp_test_div(const StatePair& pair, double alpha) {
  const double beta = np_beta_q(pair, alpha);
  if (beta < kBetaFloor) return kInf;
  return -std::log(beta);
}

double relative_entropy(const StatePair& pair) {
  const DensityOperator& rho = pair.rho();
  const DensityOperator& sigma = pair.sigma();
  if (support_leak(rho, sigma) > kTolSupp) return kInf;
  double value = 0.0;
  for (int i = 0; i < rho.support_rank(); ++i) {
    const double lam = rho.eigenvalues()(i);
    value += lam * std::log(lam);
  }
  for (int j = 0; j < sigma.support_rank(); ++j) {
    const double mu = sigma.eigenvalues()(j);
    const auto v = sigma.eigenvectors().col(j);
    const double weight = (v.adjoint() * rho.matrix() * v).real()(0, 0);
    value -= weight * std::log(mu);
  }
  return value;
}

double relative_entropy_via_integral(const StatePair& pair) {
  const DensityOperator& rho = pair.rho();
  const DensityOperator& sigma = pair.sigma();
  const double dm_rs = d_max(rho, sigma);
  if (!std::isfinite(dm_rs)) return kInf;

  const Matrix& r = rho.matrix();
  const Matrix& s = sigma.matrix();

  // u-substitution gamma = 1/u maps both terms onto [0, 1]:
  //   int_1^inf E_gamma(rho||sigma)/gamma dgamma = int u^-2 Tr(u rho - sigma)_+ du,
  //   int_1^inf E_gamma(sigma||rho)/gamma^2 dgamma = int u^-1 Tr(u sigma - rho)_+ du.
  std::vector<double> kinks_fwd, kinks_rev;
  for (double g : pencil_crossings(rho, sigma))
    if (g > 1.0) kinks_fwd.push_back(1.0 / g);
  for (double g : pencil_crossings(sigma, rho))
    if (g > 1.0) kinks_rev.push_back(1.0 / g);

  const double u1 = std::exp(-dm_rs);
  // Forward term as u^-2 Tr(u rho - sigma)_+, so huge gammas never appear.
  const auto fwd_u = [&](double u) {
    const RealVector lam = eigenvalues_hermitian(u * r - s);
    double t = 0.0;
    for (int i = 0; i < lam.size(); ++i) t += std::max(lam(i), 0.0);
    return t / (u * u);
  };
  double term1 = 0.0;
  if (u1 < 1.0) {
    term1 = integrate_with_breakpoints(fwd_u, u1, 1.0, kinks_fwd, kTolInt);
  }

  const double dm_sr = d_max(sigma, rho);
  const double u2 = std::isfinite(dm_sr) ? std::exp(-dm_sr) : 0.0;
  const double leak = support_leak(sigma, rho);
  const auto rev_u = [&](double u) {
    if (u < 1e-12) return leak;  // limit of Tr(u sigma - rho)_+ / u at 0
    const RealVector lam = eigenvalues_hermitian(u * s - r);
    double t = 0.0;
    for (int i = 0; i < lam.size(); ++i) t += std::max(lam(i), 0.0);
    return t / u;
  };
  double term2 = 0.0;
  if (u2 < 1.0) {
    term2 = integrate_with_breakpoints(rev_u, u2, 1.0, kinks_rev, kTolInt);
  }
  return term1 + term2;
}

SmoothTruncation smooth_truncate(const StatePair& pair, double eps) {
  if (!(eps >= 0.0)) throw ValidationError("RangeError", "eps must be >= 0");
  const double scale = std::exp(eps);
  const Matrix& rho = pair.rho().matrix();
  const Matrix scaled_sigma = scale * pair.sigma().matrix();

  EigResult excess = eig_hermitian(Matrix(rho - scaled_sigma));
  Matrix positive = Matrix::Zero(pair.dim(), pair.dim());
  double delta = 0.0;
  for (int i = 0; i < excess.eigenvalues.size(); ++i) {
    if (excess.eigenvalues(i) > 0.0) {
      positive += excess.eigenvalues(i) * excess.eigenvectors.col(i) *
                  excess.eigenvectors.col(i).adjoint();
      delta += excess.eigenvalues(i);
    }
  }
  if (!(delta < 1.0 - 1e-12)) {
    throw AssumptionError("SingularG", "excess mass reaches one; nothing survives smoothing");
  }

  const Matrix damp = scaled_sigma + positive;  // >= rho, so supp(rho) is covered
  const RealVector damp_eigs = eigenvalues_hermitian(damp);
  const double lam_top = damp_eigs.maxCoeff();
  double lam_floor = kInf;
  for (int i = 0; i < damp_eigs.size(); ++i) {
    if (damp_eigs(i) > kTolSupp) lam_floor = std::min(lam_floor, damp_eigs(i));
  }
  if (!(lam_floor > 0.0) || lam_top / lam_floor > 1e14) {
    throw AssumptionError("SingularG", "inverse square root is ill-conditioned");
  }

  const Matrix g = sqrt_psd(scaled_sigma, kTolSupp) * inv_sqrt_psd(damp, kTolSupp);
  Matrix smoothed = g * rho * g.adjoint();
  const double mass = smoothed.trace().real();
  if (!(mass > kTolSupp)) {
    throw AssumptionError("SingularG", "smoothed state lost all mass");
  }
  smoothed /= mass;
  smoothed = 0.5 * (smoothed + Matrix(smoothed.adjoint()));

  SmoothTruncation out{DensityOperator(smoothed), 0.0, 0.0, delta};
  out.dmax_value = d_max(out.rho_tilde, pair.sigma());
  out.trace_distance = 0.5 * trace_norm_hermitian(rho - out.rho_tilde.matrix());
  return out;
}

double renyi_hockey(const StatePair& pair, double alpha) {
  if (!(alpha >= 0.0) || alpha == 1.0) {
    throw ValidationError("RangeError", "alpha must lie in [0,1) or (1,inf)");
  }
  const DensityOperator& rho = pair.rho();
  const DensityOperator& sigma = pair.sigma();
  const double overlap = (rho.support_projector() * sigma.matrix()).trace().real();
  const bool orthogonal = overlap <= kTolSupp;
  const bool included = support_leak(rho, sigma) <= kTolSupp;
  if (!((alpha < 1.0 && !orthogonal) || included)) {
    throw AssumptionError("DomainViolation",
                          "order needs rho << sigma or (alpha < 1 and non-orthogonal states)");
  }
  const double leak_rs = support_leak(rho, sigma);   // limit constant, forward term
  const double leak_sr = support_leak(sigma, rho);   // limit constant, reverse term
  if (alpha == 0.0) {
    // alpha -> 0 limit: only the reverse tail survives, H_0 = leak_sr.
    return -std::log1p(-leak_sr);
  }

  const Matrix& r = rho.matrix();
  const Matrix& s = sigma.matrix();
  const auto g_fwd = [&](double u) {
    if (u < 1e-12) return leak_rs;
    const RealVector lam = eigenvalues_hermitian(u * r - s);
    double t = 0.0;
    for (int i = 0; i < lam.size(); ++i) t += std::max(lam(i), 0.0);
    return t / u;
  };
  const auto g_rev = [&](double u) {
    if (u < 1e-12) return leak_sr;
    const RealVector lam = eigenvalues_hermitian(u * s - r);
    double t = 0.0;
    for (int i = 0; i < lam.size(); ++i) t += std::max(lam(i), 0.0);
    return t / u;
  };

  std::vector<double> kinks_fwd, kinks_rev;
  for (double g : pencil_crossings(rho, sigma))
    if (g > 1.0) kinks_fwd.push_back(1.0 / g);
  for (double g : pencil_crossings(sigma, rho))
    if (g > 1.0) kinks_rev.push_back(1.0 / g);
  std::sort(kinks_fwd.begin(), kinks_fwd.end());
  std::sort(kinks_rev.begin(), kinks_rev.end());

  // term = int_0^1 u^q g(u) du with the weight u^q absorbed near zero by
  // the power substitution; above the first kink the integrand is smooth.
  const auto weighted_term = [&](const std::function<double(double)>& g, double q,
                                 double exact_cutoff, const std::vector<double>& kinks) {
    if (exact_cutoff >= 1.0) return 0.0;
    if (exact_cutoff > 0.0) {
      const auto integrand = [&](double u) { return std::pow(u, q) * g(u); };
      return integrate_with_breakpoints(integrand, exact_cutoff, 1.0, kinks, kTolInt);
    }
    double split = 0.5;
    for (double k : kinks) {
      if (k > 1e-14 && k < split) split = k;
    }
    double total = integrate_power_segment(g, q, split, kTolInt);
    const auto integrand = [&](double u) { return std::pow(u, q) * g(u); };
    total += integrate_with_breakpoints(integrand, split, 1.0, kinks, kTolInt);
    return total;
  };

  const double dm_rs = d_max(rho, sigma);
  const double dm_sr = d_max(sigma, rho);
  if (alpha > 1.0 && (alpha - 1.0) * dm_rs > 600.0) {
    // The moment integral overflows double precision long before the
    // divergence itself does; refuse rather than report a wrong infinity.
    throw ValidationError("RangeError",
                          "order too large for double-precision quadrature at this D_max");
  }
  const double cutoff_fwd = std::isfinite(dm_rs) ? std::exp(-dm_rs) : 0.0;
  const double cutoff_rev = std::isfinite(dm_sr) ? std::exp(-dm_sr) : 0.0;

  // gamma^(alpha-2) E_gamma(rho||sigma) -> u^(-alpha) g_fwd(u),
  // gamma^(-alpha-1) E_gamma(sigma||rho) -> u^(alpha-1) g_rev(u).
  const double h = alpha * (weighted_term(g_fwd, -alpha, cutoff_fwd, kinks_fwd) +
                            weighted_term(g_rev, alpha - 1.0, cutoff_rev, kinks_rev));
  const double arg = 1.0 + (alpha - 1.0) * h;
  if (!(arg > 0.0)) return kInf;
  return std::log(arg) / (alpha - 1.0);
}

double measured_renyi_half(const StatePair& pair, MeasuredHalfReading reading) {
  const Matrix product =
      sqrt_psd(pair.rho().matrix(), kTolSupp) * sqrt_psd(pair.sigma().matrix(), kTolSupp);
  Eigen::JacobiSVD<Matrix> svd(product);
  const double overlap = svd.singularValues().sum();
  if (overlap <= kTolSupp) {
    throw AssumptionError("OrthogonalStates", "states are orthogonal");
  }
  const double coefficient = reading == MeasuredHalfReading::kStandard ? -2.0 : -0.5;
  return coefficient * std::log(overlap);
}

FWeight::FWeight(std::function<double(double)> f2, std::string label)
    : second_derivative(std::move(f2)), description(std::move(label)) {
  for (int i = 0; i <= 60; ++i) {
    const double x = std::pow(10.0, -3.0 + 0.1 * i);
    if (second_derivative(x) < -1e-12) {
      throw ValidationError("InvalidParams",
                            "f'' is negative at " + std::to_string(x) + "; f must be convex");
    }
  }
}

FWeight FWeight::kl() {
  return FWeight([](double x) { return 1.0 / x; }, "x log x");
}

FWeight FWeight::chi_squared() {
  return FWeight([](double) { return 2.0; }, "(x-1)^2");
}

double f_divergence(const StatePair& pair, const FWeight& f) {
  const DensityOperator& rho = pair.rho();
  const DensityOperator& sigma = pair.sigma();
  const Matrix& r = rho.matrix();
  const Matrix& s = sigma.matrix();

  const std::vector<double> crossings_fwd = pencil_crossings(rho, sigma);
  const std::vector<double> crossings_rev = pencil_crossings(sigma, rho);

  const auto e_fwd = [&](double g) { return positive_part(r, s, g); };

  // Forward term int_1^Gamma f''(gamma) E_gamma(rho||sigma) dgamma. With
  // support inclusion the hockey-stick vanishes beyond e^{D_max}; without
  // it the integral is extended in doubling windows until it converges or
  // is declared divergent.
  double term1 = 0.0;
  const double dm_rs = d_max(rho, sigma);
  const auto integrand_fwd = [&](double g) { return f.second_derivative(g) * e_fwd(g); };
  if (std::isfinite(dm_rs)) {
    const double gamma_max = std::exp(std::min(dm_rs, 700.0));
    if (gamma_max > 1.0) {
      term1 = integrate_with_breakpoints(integrand_fwd, 1.0, gamma_max, crossings_fwd, kTolInt);
    }
  } else {
    double lo = 1.0;
    double hi = 2.0;
    for (double k : crossings_fwd) hi = std::max(hi, k);
    term1 = integrate_with_breakpoints(integrand_fwd, lo, hi, crossings_fwd, kTolInt);
    bool converged = false;
    for (int window = 0; window < 48; ++window) {
      const double next = hi * 2.0;
      const double chunk = adaptive_simpson(integrand_fwd, hi, next, kTolInt);
      term1 += chunk;
      hi = next;
      if (std::abs(chunk) < std::max(kTolInt, 1e-12 * std::abs(term1))) {
        converged = true;
        break;
      }
      if (term1 > 1e9) break;
    }
    if (!converged) return kInf;
  }

  // Reverse term int_1^inf gamma^-3 f''(1/gamma) E_gamma(sigma||rho) dgamma
  // = int_0^1 f''(u) Tr(u sigma - rho)_+ du after gamma = 1/u.
  const auto integrand_rev = [&](double u) {
    const RealVector lam = eigenvalues_hermitian(u * s - r);
    double t = 0.0;
    for (int i = 0; i < lam.size(); ++i) t += std::max(lam(i), 0.0);
    return f.second_derivative(u) * t;
  };
  std::vector<double> kinks_rev;
  for (double g : crossings_rev)
    if (g > 1.0) kinks_rev.push_back(1.0 / g);

  double term2 = 0.0;
  const double dm_sr = d_max(sigma, rho);
  if (std::isfinite(dm_sr)) {
    const double u_min = std::exp(-dm_sr);
    if (u_min < 1.0) {
      term2 = integrate_with_breakpoints(integrand_rev, u_min, 1.0, kinks_rev, kTolInt);
    }
  } else {
    double lo = 0.25;
    for (double k : kinks_rev) lo = std::min(lo, k);
    term2 = integrate_with_breakpoints(integrand_rev, lo, 1.0, kinks_rev, kTolInt);
    bool converged = false;
    for (int window = 0; window < 60; ++window) {
      const double next = lo * 0.5;
      const double chunk = adaptive_simpson(integrand_rev, next, lo, kTolInt);
      term2 += chunk;
      lo = next;
      if (std::abs(chunk) < std::max(kTolInt, 1e-12 * std::abs(term2))) {
        converged = true;
        break;
      }
      if (term2 > 1e9) break;
    }
    if (!converged) return kInf;
  }
  return term1 + term2;
}

MixtureKlBounds mixture_kl_bound(
    const DensityOperator& rho,
    const std::vector<std::pair<double, DensityOperator>>& components) {
  if (components.empty()) throw ValidationError("InvalidParams", "mixture needs components");
  double weight_sum = 0.0;
  for (const auto& [w, sigma] : components) {
    if (w < -kTolTrace) throw ValidationError("InvalidParams", "negative mixture weight");
    weight_sum += w;
  }
  if (std::abs(weight_sum - 1.0) > 1e-9) {
    throw ValidationError("InvalidParams", "mixture weights must sum to 1");
  }
  MixtureKlBounds out{kInf, 0.0};
  double tight_sum = 0.0;
  for (const auto& [w, sigma] : components) {
    const double d = relative_entropy(StatePair(rho, sigma));
    if (!std::isfinite(d)) {
      throw AssumptionError("SupportViolation", "rho escapes the support of a component");
    }
    if (w > 0.0) {
      out.bound_simple = std::min(out.bound_simple, d - std::log(w));
      tight_sum += w * std::exp(-d);
    }
  }
  out.bound_tight = -std::log(tight_sum);
  return out;
}

ReversedPinsker reversed_pinsker_check(const StatePair& pair) {
  if (support_leak(pair.rho(), pair.sigma()) > kTolSupp) {
    throw AssumptionError("SupportViolation", "rho escapes the support of sigma");
  }
  ReversedPinsker out;
  out.lhs = relative_entropy(pair);
  const double lam_min = pair.sigma().min_positive_eigenvalue();
  const double e1 = pair.hockey_stick(1.0);
  out.rhs = 2.0 / lam_min * e1 * e1;
  return out;
}

}  // namespace qdpkit
