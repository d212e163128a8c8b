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

// qdpkit command-line front end. Every analysis is a subcommand with
// reproducible seeds; curves are CSV (12 significant digits), verdicts
// and reports are JSON. Validation failures exit 2, violated assumptions
// exit 3, with one machine-readable JSON object on stderr.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdpkit/classical.hpp"
#include "qdpkit/contraction.hpp"
#include "qdpkit/curve.hpp"
#include "qdpkit/divergence.hpp"
#include "qdpkit/dpcert.hpp"
#include "qdpkit/errors.hpp"
#include "qdpkit/inference.hpp"
#include "qdpkit/parallel.hpp"
#include "qdpkit/serialization.hpp"
#include "qdpkit/stability.hpp"

namespace {

using nlohmann::json;
using namespace qdpkit;

// Grid spec: either "lo:hi:count" (inclusive linspace) or a comma list.
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> out;
  const auto parse_num = [&](const std::string& tok) {
    try {
      std::size_t used = 0;
      const double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ValidationError("ParseError", "bad grid token '" + tok + "'");
    }
  };
  if (spec.find(':') != std::string::npos) {
    std::stringstream ss(spec);
    std::string lo_s, hi_s, n_s;
    if (!std::getline(ss, lo_s, ':') || !std::getline(ss, hi_s, ':') ||
        !std::getline(ss, n_s, ':')) {
      throw ValidationError("ParseError", "grid must be lo:hi:count or a comma list");
    }
    const double lo = parse_num(lo_s);
    const double hi = parse_num(hi_s);
    const int n = static_cast<int>(parse_num(n_s));
    if (n < 1 || hi < lo) throw ValidationError("ParseError", "bad grid bounds");
    if (n == 1) {
      out.push_back(lo);
    } else {
      for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1.0));
    }
    return out;
  }
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(parse_num(tok));
  }
  if (out.empty()) throw ValidationError("ParseError", "empty grid");
  return out;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_text_file(out_path, content);
  }
}

std::string curve_csv(const std::string& x, const std::string& y,
                      const std::vector<std::array<double, 2>>& rows) {
  std::ostringstream os;
  os << x << "," << y << "\n";
  for (const auto& r : rows) os << format_float(r[0]) << "," << format_float(r[1]) << "\n";
  return os.str();
}

json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  return json(v);
}

json dist_json(const ClassicalDist& d) {
  return json{{"alphabet", d.alphabet()}, {"probs", d.probs()}};
}

StatePair load_pair(const std::string& rho_path, const std::string& sigma_path) {
  return StatePair(density_from_json(read_text_file(rho_path)),
                   density_from_json(read_text_file(sigma_path)));
}

struct CommonOpts {
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out, "Output path (default: stdout)");
  cmd->add_option("--format", opts.format, "Curve output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

std::string curve_out(const CommonOpts& opts, const std::string& x, const std::string& y,
                      const std::vector<std::array<double, 2>>& rows) {
  if (opts.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({r[0], r[1]});
    return json{{"x", x}, {"y", y}, {"points", arr}}.dump() + "\n";
  }
  return curve_csv(x, y, rows);
}

int run(int argc, char** argv) {
  CLI::App app{"Privacy analysis of quantum state pairs, classical distributions and channels"};
  app.require_subcommand(1);

  // ---- certify ----
  auto* certify_cmd = app.add_subcommand("certify", "DP verdict and tight delta for a pair");
  std::string c_rho, c_sigma;
  double c_eps = 0.0, c_delta = 0.0;
  CommonOpts c_opts;
  certify_cmd->add_option("--rho", c_rho, "rho matrix JSON")->required();
  certify_cmd->add_option("--sigma", c_sigma, "sigma matrix JSON")->required();
  certify_cmd->add_option("--eps", c_eps, "epsilon")->required();
  certify_cmd->add_option("--delta", c_delta, "delta");
  add_common(certify_cmd, c_opts);
  certify_cmd->callback([&] {
    const StatePair pair = load_pair(c_rho, c_sigma);
    const PrivacyParams p(c_eps, c_delta);
    const CertifyResult r = certify_dp(pair, p);
    emit(c_opts.out, json{{"is_dp", r.is_dp},
                          {"delta_star", r.delta_star},
                          {"eps", p.eps},
                          {"delta", p.delta}}
                             .dump() +
                         "\n");
  });

  // ---- divergence ----
  auto* div_cmd =
      app.add_subcommand("divergence", "Divergence value or hockey-stick curve for a pair");
  std::string d_rho, d_sigma, d_p, d_q, d_kind = "kl", d_gamma_grid;
  double d_gamma = 1.0, d_alpha = 0.5;
  CommonOpts d_opts;
  div_cmd->add_option("--rho", d_rho, "quantum pair input");
  div_cmd->add_option("--sigma", d_sigma);
  div_cmd->add_option("--p", d_p, "classical pair input");
  div_cmd->add_option("--q", d_q);
  div_cmd->add_option("--kind", d_kind, "kl | hockey | htd | renyi | mrenyi | dmax")
      ->check(CLI::IsMember({"kl", "hockey", "htd", "renyi", "mrenyi", "dmax"}));
  div_cmd->add_option("--gamma", d_gamma, "order for hockey");
  div_cmd->add_option("--gamma-grid", d_gamma_grid,
                      "emit a (gamma, e_gamma) CSV curve instead of one value (hockey only)");
  div_cmd->add_option("--alpha", d_alpha, "order for htd/renyi");
  add_common(div_cmd, d_opts);
  div_cmd->callback([&] {
    const bool classical = !d_p.empty() && !d_q.empty();
    if (!classical && (d_rho.empty() || d_sigma.empty())) {
      throw ValidationError("InvalidParams", "need --rho/--sigma or --p/--q");
    }
    if (!d_gamma_grid.empty()) {
      if (d_kind != "hockey") {
        throw ValidationError("InvalidParams", "--gamma-grid applies to --kind hockey");
      }
      const std::vector<double> gammas = parse_grid(d_gamma_grid);
      std::vector<std::array<double, 2>> rows(gammas.size());
      if (classical) {
        const ClassicalDist p = dist_from_json(read_text_file(d_p));
        const ClassicalDist q = dist_from_json(read_text_file(d_q));
        for (std::size_t i = 0; i < gammas.size(); ++i) {
          rows[i] = {gammas[i], hockey_stick_c(p, q, gammas[i])};
        }
      } else {
        const StatePair pair = load_pair(d_rho, d_sigma);
        parallel_for(gammas.size(), [&](std::size_t i) {
          rows[i] = {gammas[i], pair.hockey_stick(gammas[i])};
        });
      }
      emit(d_opts.out, curve_out(d_opts, "gamma", "e_gamma", rows));
      return;
    }
    double value = 0.0;
    if (classical) {
      const ClassicalDist p = dist_from_json(read_text_file(d_p));
      const ClassicalDist q = dist_from_json(read_text_file(d_q));
      if (d_kind == "kl") {
        value = kl_c(p, q);
      } else if (d_kind == "hockey") {
        value = hockey_stick_c(p, q, d_gamma);
      } else if (d_kind == "renyi") {
        value = renyi_c(p, q, d_alpha);
      } else if (d_kind == "htd") {
        const double beta = np_beta_c(p, q, d_alpha);
        value = beta <= 0.0 ? std::numeric_limits<double>::infinity() : -std::log(beta);
      } else {
        throw ValidationError("InvalidParams", "kind '" + d_kind + "' needs a quantum pair");
      }
    } else {
      const StatePair pair = load_pair(d_rho, d_sigma);
      if (d_kind == "kl") {
        value = relative_entropy(pair);
      } else if (d_kind == "hockey") {
        value = hockey_stick_q(pair, d_gamma);
      } else if (d_kind == "htd") {
        value = hyp_test_div(pair, d_alpha);
      } else if (d_kind == "renyi") {
        value = renyi_hockey(pair, d_alpha);
      } else if (d_kind == "mrenyi") {
        value = measured_renyi_half(pair);
      } else {
        value = d_max(pair.rho(), pair.sigma());
      }
    }
    emit(d_opts.out, json{{"kind", d_kind}, {"value", number_or_inf(value)}}.dump() + "\n");
  });

  // ---- tradeoff ----
  auto* trade_cmd = app.add_subcommand(
      "tradeoff", "Type-II error curve from params, a quantum pair, or a classical pair");
  std::string t_rho, t_sigma, t_p, t_q, t_alpha_grid = "0:1:101";
  std::optional<double> t_eps;
  double t_delta = 0.0;
  CommonOpts t_opts;
  trade_cmd->add_option("--rho", t_rho);
  trade_cmd->add_option("--sigma", t_sigma);
  trade_cmd->add_option("--p", t_p, "classical pair input");
  trade_cmd->add_option("--q", t_q);
  trade_cmd->add_option("--eps", t_eps, "trade-off function parameters");
  trade_cmd->add_option("--delta", t_delta);
  trade_cmd->add_option("--alpha-grid", t_alpha_grid, "lo:hi:count or comma list");
  add_common(trade_cmd, t_opts);
  trade_cmd->callback([&] {
    const std::vector<double> alphas = parse_grid(t_alpha_grid);
    std::vector<std::array<double, 2>> rows(alphas.size());
    if (!t_rho.empty() && !t_sigma.empty()) {
      const StatePair pair = load_pair(t_rho, t_sigma);
      parallel_for(alphas.size(), [&](std::size_t i) {
        rows[i] = {alphas[i], np_beta_q(pair, alphas[i])};
      });
    } else if (!t_p.empty() && !t_q.empty()) {
      const ClassicalDist p = dist_from_json(read_text_file(t_p));
      const ClassicalDist q = dist_from_json(read_text_file(t_q));
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        rows[i] = {alphas[i], np_beta_c(p, q, alphas[i])};
      }
    } else if (t_eps.has_value()) {
      const PrivacyParams p(*t_eps, t_delta);
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        rows[i] = {alphas[i], f_tradeoff(p, alphas[i])};
      }
    } else {
      throw ValidationError("InvalidParams", "need --rho/--sigma, --p/--q, or --eps");
    }
    emit(t_opts.out, curve_out(t_opts, "alpha", "beta", rows));
  });

  // ---- region ----
  auto* region_cmd = app.add_subcommand("region", "Achievable error region polygon");
  double r_eps = 0.0, r_delta = 0.0;
  CommonOpts r_opts;
  region_cmd->add_option("--eps", r_eps)->required();
  region_cmd->add_option("--delta", r_delta);
  add_common(region_cmd, r_opts);
  region_cmd->callback([&] {
    const Region reg = region(PrivacyParams(r_eps, r_delta));
    std::vector<std::array<double, 2>> rows(reg.vertices.begin(), reg.vertices.end());
    emit(r_opts.out, curve_out(r_opts, "alpha", "beta", rows));
  });

  // ---- weakest ----
  auto* weak_cmd = app.add_subcommand("weakest", "Most informative DP pair as JSON");
  double w_eps = 0.0, w_delta = 0.0;
  bool w_pure = false, w_alt = false;
  CommonOpts w_opts;
  weak_cmd->add_option("--eps", w_eps)->required();
  weak_cmd->add_option("--delta", w_delta);
  weak_cmd->add_flag("--pure", w_pure, "2-dimensional pure-DP pair");
  weak_cmd->add_flag("--alt", w_alt, "alternative corner-achieving pair");
  add_common(weak_cmd, w_opts);
  weak_cmd->callback([&] {
    if (w_pure && w_alt) throw ValidationError("InvalidParams", "--pure and --alt conflict");
    StatePair pair = w_pure  ? weakest_pure_pair(w_eps)
                     : w_alt ? alt_pair(PrivacyParams(w_eps, w_delta))
                             : weakest_pair(PrivacyParams(w_eps, w_delta));
    emit(w_opts.out, pair_to_json(pair) + "\n");
  });

  // ---- dominates ----
  auto* dom_cmd = app.add_subcommand("dominates", "Information-ordering verdict for two pairs");
  std::string da_rho, da_sigma, db_rho, db_sigma;
  int dom_grid = 200;
  CommonOpts dom_opts;
  dom_cmd->add_option("--rho-a", da_rho)->required();
  dom_cmd->add_option("--sigma-a", da_sigma)->required();
  dom_cmd->add_option("--rho-b", db_rho)->required();
  dom_cmd->add_option("--sigma-b", db_sigma)->required();
  dom_cmd->add_option("--grid", dom_grid, "gamma grid size");
  add_common(dom_cmd, dom_opts);
  dom_cmd->callback([&] {
    const StatePair a = load_pair(da_rho, da_sigma);
    const StatePair b = load_pair(db_rho, db_sigma);
    const bool verdict = dominates(a, b, dom_grid);
    json slack = json::array();
    for (int i = 0; i <= 20; ++i) {
      const double g = 0.25 * i;
      slack.push_back({{"gamma", g},
                       {"forward", a.hockey_stick(g) - b.hockey_stick(g)},
                       {"reverse", a.hockey_stick(g, Order::kSigmaRho) -
                                       b.hockey_stick(g, Order::kSigmaRho)}});
    }
    emit(dom_opts.out, json{{"dominates", verdict}, {"slack", slack}}.dump() + "\n");
  });

  // ---- fisher ----
  auto* fisher_cmd = app.add_subcommand(
      "fisher", "Privatized inference: Fisher information maximum or detection-power curve");
  double f_eps = 0.0, f_delta = 0.0, f_theta0 = 0.0, f_theta1 = 1.0;
  std::optional<double> f_theta;
  std::string f_theta_grid, f_rho, f_sigma, f_alpha_grid = "0:1:51";
  CommonOpts f_opts;
  fisher_cmd->add_option("--eps", f_eps)->required();
  fisher_cmd->add_option("--delta", f_delta);
  fisher_cmd->add_option("--theta", f_theta, "single mixing parameter");
  fisher_cmd->add_option("--theta-grid", f_theta_grid, "lo:hi:count or comma list");
  fisher_cmd->add_option("--rho", f_rho,
                         "with --sigma: emit the (alpha, beta_c) detection-power curve of "
                         "this certified pair against the weakest-pair envelope");
  fisher_cmd->add_option("--sigma", f_sigma);
  fisher_cmd->add_option("--theta0", f_theta0, "null mixing parameter for the power curve");
  fisher_cmd->add_option("--theta1", f_theta1, "alternative mixing parameter");
  fisher_cmd->add_option("--alpha-grid", f_alpha_grid);
  add_common(fisher_cmd, f_opts);
  fisher_cmd->callback([&] {
    const PrivacyParams p(f_eps, f_delta);
    if (!f_rho.empty() && !f_sigma.empty()) {
      const StatePair pair = load_pair(f_rho, f_sigma);
      const PrivatizedCurve pc =
          privatized_beta_curve(pair, p, f_theta0, f_theta1, parse_grid(f_alpha_grid));
      std::ostringstream os;
      os << "alpha,beta_c,beta_c_weakest\n";
      for (std::size_t i = 0; i < pc.curve.points.size(); ++i) {
        os << format_float(pc.curve.points[i][0]) << ","
           << format_float(pc.curve.points[i][1]) << ","
           << format_float(pc.weakest_curve.points[i][1]) << "\n";
      }
      emit(f_opts.out, os.str());
      return;
    }
    if (f_theta.has_value()) {
      emit(f_opts.out,
           json{{"theta", *f_theta}, {"value", fisher_max(p, *f_theta)}}.dump() + "\n");
      return;
    }
    if (f_theta_grid.empty()) {
      throw ValidationError("InvalidParams", "need --theta, --theta-grid, or --rho/--sigma");
    }
    const std::vector<double> thetas = parse_grid(f_theta_grid);
    std::vector<std::array<double, 2>> rows(thetas.size());
    parallel_for(thetas.size(),
                 [&](std::size_t i) { rows[i] = {thetas[i], fisher_max(p, thetas[i])}; });
    emit(f_opts.out, curve_out(f_opts, "theta", "fisher_max", rows));
  });

  // ---- contraction ----
  auto* contr_cmd =
      app.add_subcommand("contraction", "Hockey-stick contraction bounds and estimates");
  double ct_eps = 0.0, ct_delta = 0.0;
  std::string ct_gamma_grid = "1:4:31", ct_kraus;
  int ct_trials = 50;
  std::uint64_t ct_seed = 0;
  CommonOpts ct_opts;
  contr_cmd->add_option("--eps", ct_eps)->required();
  contr_cmd->add_option("--delta", ct_delta);
  contr_cmd->add_option("--gamma-grid", ct_gamma_grid);
  contr_cmd->add_option("--kraus", ct_kraus, "channel JSON; adds an empirical column");
  contr_cmd->add_option("--trials", ct_trials, "sampling trials per gamma");
  contr_cmd->add_option("--seed", ct_seed, "sampling seed");
  add_common(contr_cmd, ct_opts);
  contr_cmd->callback([&] {
    const PrivacyParams p(ct_eps, ct_delta);
    const std::vector<double> gammas = parse_grid(ct_gamma_grid);
    std::optional<QuantumChannel> channel;
    if (!ct_kraus.empty()) channel = channel_from_json(read_text_file(ct_kraus));
    std::ostringstream os;
    os << (channel ? "gamma,lower,upper,estimate\n" : "gamma,lower,upper\n");
    for (double g : gammas) {
      const EtaBounds b = eta_bounds(p, g);
      os << format_float(g) << "," << format_float(b.lower) << "," << format_float(b.upper);
      if (channel) {
        os << "," << format_float(empirical_contraction(*channel, g, ct_trials, ct_seed));
      }
      os << "\n";
    }
    emit(ct_opts.out, os.str());
  });

  // ---- truncate ----
  auto* trunc_cmd =
      app.add_subcommand("truncate", "Pure-DP distillation of a classical pair");
  std::string tr_p, tr_q;
  double tr_eps = 0.0;
  CommonOpts tr_opts;
  trunc_cmd->add_option("--p", tr_p, "distribution JSON")->required();
  trunc_cmd->add_option("--q", tr_q, "distribution JSON")->required();
  trunc_cmd->add_option("--eps", tr_eps)->required();
  add_common(trunc_cmd, tr_opts);
  trunc_cmd->callback([&] {
    const ClassicalDist p = dist_from_json(read_text_file(tr_p));
    const ClassicalDist q = dist_from_json(read_text_file(tr_q));
    const TruncatedPair t = truncate_pair(p, q, tr_eps);
    emit(tr_opts.out, json{{"p_tilde", dist_json(t.p_tilde)},
                           {"q_tilde", dist_json(t.q_tilde)},
                           {"delta_eff", t.delta_eff},
                           {"pure_eps", t.pure_eps},
                           {"l1_p", l1_distance(t.p_tilde, p)},
                           {"l1_q", l1_distance(t.q_tilde, q)}}
                               .dump() +
                           "\n");
  });

  // ---- klbound ----
  auto* klb_cmd = app.add_subcommand("klbound", "Output relative-entropy bounds for an LDP kernel");
  std::string kb_kernel, kb_p, kb_q;
  double kb_eps = 0.0, kb_delta = 0.0;
  CommonOpts kb_opts;
  klb_cmd->add_option("--kernel", kb_kernel, "kernel JSON")->required();
  klb_cmd->add_option("--p", kb_p, "input distribution JSON")->required();
  klb_cmd->add_option("--q", kb_q, "input distribution JSON")->required();
  klb_cmd->add_option("--eps", kb_eps)->required();
  klb_cmd->add_option("--delta", kb_delta);
  add_common(klb_cmd, kb_opts);
  klb_cmd->callback([&] {
    const MarkovKernel k = kernel_from_json(read_text_file(kb_kernel));
    const ClassicalDist p = dist_from_json(read_text_file(kb_p));
    const ClassicalDist q = dist_from_json(read_text_file(kb_q));
    const LdpKlBounds b = kl_bound_ldp(k, p, q, kb_eps, kb_delta);
    emit(kb_opts.out, json{{"bound_main", number_or_inf(b.bound_main)},
                           {"bound_alt", number_or_inf(b.bound_alt)},
                           {"actual", number_or_inf(b.actual)},
                           {"mass_floor", b.mass_floor}}
                              .dump() +
                          "\n");
  });

  // ---- stability ----
  auto* stab_cmd = app.add_subcommand("stability", "Learning-stability report");
  int st_n = 1, st_z = 2;
  double st_eps = 0.0, st_delta = 0.0, st_m = 1.0;
  bool st_audit = false;
  CommonOpts st_opts;
  stab_cmd->add_option("--n", st_n, "training sequence length")->required();
  stab_cmd->add_option("--alphabet-size", st_z, "|Z|")->required();
  stab_cmd->add_option("--eps", st_eps)->required();
  stab_cmd->add_option("--delta", st_delta);
  stab_cmd->add_option("--m", st_m, "mass floor in (0, 1]");
  stab_cmd->add_flag("--audit-toy", st_audit,
                     "run the built-in |Z|=2 toy learner and report its measured value");
  add_common(stab_cmd, st_opts);
  stab_cmd->callback([&] {
    const PrivacyParams p(st_eps, st_delta);
    json out;
    out["n"] = st_n;
    out["alphabet_size"] = st_z;
    out["eps"] = st_eps;
    out["delta"] = st_delta;
    out["m"] = st_m;
    if (st_audit) {
      if (st_z != 2) throw ValidationError("InvalidParams", "--audit-toy needs |Z| = 2");
      const ToyLearner toy = make_toy_learner(st_n, p);
      const PrivacyParams step(st_eps, std::max(st_delta, toy.step_delta));
      const StabilityReport rep = stability_bound(st_n, st_z, step, toy.mass_floor);
      out["m"] = toy.mass_floor;
      out["delta"] = step.delta;
      out["regime"] = rep.regime;
      out["g"] = rep.g;
      out["h"] = rep.h;
      out["bound"] = rep.bound;
      double worst = 0.0;
      for (int i = 0; i <= 10; ++i) {
        worst = std::max(worst, toy_learner_holevo(toy, i / 10.0));
      }
      out["holevo_audit"] = worst;
    } else {
      const StabilityReport rep = stability_bound(st_n, st_z, p, st_m);
      out["regime"] = rep.regime;
      out["g"] = rep.g;
      out["h"] = rep.h;
      out["bound"] = rep.bound;
    }
    emit(st_opts.out, out.dump() + "\n");
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ValidationError& e) {
    std::cerr << json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const AssumptionError& e) {
    std::cerr << json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}
