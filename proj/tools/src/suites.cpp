#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>

#include "nikishin/asymptotics.hpp"
#include "nikishin/curve.hpp"
#include "nikishin/equilibrium.hpp"
#include "nikishin/errors.hpp"
#include "nikishin/mop.hpp"
#include "nikishin/weights.hpp"

namespace nikishin::cli {

PrecCtx RunConfig::ctx_for(int n) const {
  return precision_given ? PrecCtx(precision_bits) : precision_for(n, precision_bits);
}

namespace {

// value <= threshold passes
Check upper(const std::string& suite, const std::string& name, double value, double threshold,
            std::string detail = {}) {
  return {suite, name, value, threshold, value <= threshold, std::move(detail)};
}
Check flag(const std::string& suite, const std::string& name, bool ok, std::string detail = {}) {
  return {suite, name, ok ? 1.0 : 0.0, 1.0, ok, std::move(detail)};
}

double rel(const BigFloat& a, const BigFloat& b) { return (abs(a - b) / max(abs(b), ldexp_one(-4000, b.ctx()))).to_double(); }

std::vector<Check> suite_weights(const RunConfig& cfg) {
  const std::string S = "weights";
  std::vector<Check> out;
  const PrecCtx ctx = cfg.ctx();
  double worst = 0;
  std::string where;
  for (int j : {1, 2})
    for (int n : {1, 2, 4})
      for (int k = 0; k <= 20; ++k) {
        double e = rel(BigFloat(moment(j, n, k), ctx), moment_quadrature(j, n, k, ctx));
        if (e > worst) worst = e, where = "j=" + std::to_string(j) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
  out.push_back(upper(S, "moments_vs_quadrature", worst, 1e-30, where));
  out.push_back(flag(S, "m1_0_n1_is_1/2", moment(1, 1, 0) == Rational(1, 2)));
  out.push_back(flag(S, "m2_0_n1_is_1", moment(2, 1, 0) == Rational(1)));
  out.push_back(flag(S, "m2_2_n1_is_5/16", moment(2, 1, 2) == Rational(5, 16)));
  bool scaling = true;
  for (int n : {2, 3, 5})
    for (int k = 0; k <= 10; ++k) {
      scaling &= moment(1, n, k) * rational_pow(Rational(n), 2 * k + 2) == moment(1, 1, k);
      scaling &= moment(2, n, k) * rational_pow(Rational(n), 2 * k + 1) == moment(2, 1, k);
    }
  out.push_back(flag(S, "moment_scaling_exact", scaling));
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> U(-4, 4);
  double rw = 0;
  for (int t = 0; t < 20; ++t) {
    BigComplex z(std::complex<double>(std::abs(U(rng)) + 0.1, U(rng)), ctx);
    for (int n : {1, 3}) {
      RelationsWReport r = check_relationsW(n, z);
      rw = std::max({rw, r.sum_identity.to_double(), r.reciprocal_identity.to_double()});
    }
  }
  // the identities subtract quantities of size u^{2n}; allow a quarter of the bits
  out.push_back(upper(S, "upsilon_relations", rw, std::ldexp(1.0, -static_cast<int>(ctx.bits * 3 / 4))));
  return out;
}

std::vector<Check> suite_curve(const RunConfig& cfg) {
  const std::string S = "curve";
  std::vector<Check> out;
  const PrecCtx ctx = cfg.ctx();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> U(-40, 40);
  double cub = 0, vieta = 0;
  for (int t = 0; t < 1000; ++t) {
    std::complex<double> zc(U(rng), U(rng));
    if (std::abs(zc.imag()) < 1e-3) continue;
    BigComplex z(zc, ctx);
    BranchTriple b = branches_at(z);
    for (const auto& x : b.zeta)
      cub = std::max(cub, abs(((z * x - z) * x + 1.0) * x + 1.0).to_double());
    const auto& s = b.zeta;
    BigComplex e1 = s[0] + s[1] + s[2], e2 = s[0] * s[1] + s[0] * s[2] + s[1] * s[2], e3 = s[0] * s[1] * s[2];
    vieta = std::max({vieta, abs(e1 - 1.0).to_double(), abs(e2 * z - 1.0).to_double(), abs(e3 * z + 1.0).to_double()});
  }
  out.push_back(upper(S, "cubic_residual", cub, 1e-30));
  out.push_back(upper(S, "vieta", vieta, 1e-30));
  double series = 0;
  for (double th : {0.3, 1.2, 2.0, 2.9, -0.7, -2.5}) {
    BigComplex z(std::polar(1e6, th), ctx);
    BranchTriple b = branches_at(z);
    auto sr = branch_series(z);
    for (int j = 0; j < 3; ++j) series = std::max(series, abs(b.zeta[j] - sr[j]).to_double());
  }
  out.push_back(upper(S, "series_at_1e6", series, 1e2 * 1e-18));
  BranchPoints bp = branch_points(ctx);
  out.push_back(upper(S, "forward_map_q_plus", abs(forward_map(BigComplex(bp.q_plus)) - BigComplex(bp.p_plus)).to_double(), 1e-30));
  out.push_back(upper(S, "forward_map_q_minus", abs(forward_map(BigComplex(bp.q_minus)) - BigComplex(bp.p_minus)).to_double(), 1e-30));
  return out;
}

std::vector<Check> suite_equilibrium(const RunConfig& cfg) {
  const std::string S = "equilibrium";
  std::vector<Check> out;
  EquilibriumSolution sol;
  try {
    sol = solve_equilibrium({cfg.m1, cfg.m2, cfg.tol});
  } catch (const ConvergenceError& e) {
    out.push_back(upper(S, "solver_converged", e.worst, cfg.tol, e.what()));
    return out;
  }
  out.push_back(upper(S, "mass_lambda1", std::abs(sol.mass1 - 2), 1e-8));
  out.push_back(upper(S, "mass_lambda2", std::abs(sol.mass2 - 1), 1e-8));
  out.push_back(upper(S, "band_residual", sol.residual_sup, 1e-8));
  double sat = 0;
  for (double f : {0.999, 0.9, 0.5, 0.2, 0.05, 0.01}) {
    double x = sol.p_minus * f;
    sat = std::max(sat, std::abs(sol.lambda2_density(x) * 2 * std::sqrt(-x) - 1));
  }
  out.push_back(upper(S, "constraint_saturated", sat, 1e-8));
  SummaryGReport g = verify_summaryG(sol);
  out.push_back(flag(S, "inequalities_and_identities", g.violations.empty(),
                     g.violations.empty() ? "" : g.violations.front()));
  auto om = omega_samples(sol, {1.0, 4.0, 9.0});
  double od = 0;
  for (double o : om) od = std::max(od, std::abs(o - sol.omega));
  out.push_back(upper(S, "omega_reproduced", od, 1e-6));
  out.push_back(upper(S, "omega_closed_form", std::abs(sol.omega - omega_exact(PrecCtx(128)).to_double()), 1e-6));
  return out;
}

std::vector<Check> suite_mop(const RunConfig& cfg) {
  const std::string S = "mop";
  std::vector<Check> out;
  const PrecCtx ctx = cfg.ctx();
  TypeIISolution q1 = compute_Q(1, ctx);
  out.push_back(flag(S, "Q1_exact", q1.Q.coeffs() == RatVector{Rational(3, 8), Rational(-11, 4), Rational(1)}));
  BigFloat s97 = sqrt(BigFloat(97L, ctx));
  double zerr = std::max(abs(q1.zeros[0] - (11.0 - s97) / 8.0).to_double(), abs(q1.zeros[1] - (11.0 + s97) / 8.0).to_double());
  out.push_back(upper(S, "Q1_zeros", zerr, 1e-40));
  const int nmax = *std::max_element(cfg.n_list.begin(), cfg.n_list.end());
  std::vector<Check> per(nmax);
  parallel_for(nmax, cfg.threads, [&](int i) {
    const int n = i + 1;
    const PrecCtx c = cfg.ctx_for(n);
    MomentData md = moment_data(n, 3 * n + 1);
    TypeIISolution Q = compute_Q(n, md, c);
    bool ok = static_cast<int>(Q.zeros.size()) == 2 * n && Q.zeros.front() > 0.0 && Q.max_zero_imag < 1e-20;
    for (size_t k = 1; ok && k < Q.zeros.size(); ++k) ok = Q.zeros[k] > Q.zeros[k - 1];
    bool orth = true;
    for (int j : {1, 2})
      for (int k = 0; k < n; ++k) orth &= weighted_integral(md, Q.Q.poly(), j, k) == 0;
    per[i] = flag(S, "n=" + std::to_string(n) + "_zeros_real_simple_positive_and_orthogonal", ok && orth,
                  orth ? "" : "nonzero orthogonality residual");
  });
  out.insert(out.end(), per.begin(), per.end());
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> U(-8, 8);
  double dev = 0;
  for (int n : {1, 2, 4}) {
    RHMatrixY Y(n, ctx);
    for (int t = 0; t < 20; ++t) {
      BigComplex z(std::complex<double>(U(rng), U(rng)), ctx);
      dev = std::max(dev, abs(det3(Y.eval(z)) - 1.0).to_double());
    }
  }
  out.push_back(upper(S, "det_Y_is_1", dev, 1e-15));
  return out;
}

std::vector<Check> suite_parametrix(const RunConfig& cfg) {
  const std::string S = "parametrix";
  std::vector<Check> out;
  const PrecCtx ctx = cfg.ctx();
  GlobalParametrix G(ctx);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> U(-30, 30);
  BigComplex ref(ctx);
  double spread = 0, hdev = 0;
  for (int t = 0; t < 200; ++t) {
    std::complex<double> zc(U(rng), U(rng));
    if (std::abs(zc.imag()) < 1e-3) continue;
    BigComplex z(zc, ctx);
    BigComplex d = G.det_hat(z);
    if (t == 0) ref = d;
    spread = std::max(spread, abs(d - ref).to_double());
    if (t < 100) hdev = std::max(hdev, abs(eval_H(branches_at(z).zeta[0]) - G.N(z)[0][0]).to_double());
  }
  out.push_back(upper(S, "det_Nhat_constant", spread, 1e-15));
  // the constant itself, computed independently of the sample
  out.push_back(upper(S, "det_Nhat_is_i/4", abs(ref - i_unit(ctx) * 0.25).to_double(), 1e-15,
                      "det = " + ref.re.str(6) + " + " + ref.im.str(6) + "i"));
  double jb = 0, jt = 0;
  for (double x : {0.05, 0.5, 2.0, 5.0, 9.0, 11.0}) jb = std::max(jb, G.jump_residual_band(BigFloat(x, ctx)).to_double());
  for (double x : {-0.1, -1.0, -10.0, -100.0}) jt = std::max(jt, G.jump_residual_tail(BigFloat(x, ctx)).to_double());
  out.push_back(upper(S, "jump_band", jb, 1e-8));
  out.push_back(upper(S, "jump_tail", jt, 1e-8));
  out.push_back(upper(S, "H_equals_F1_over_r1", hdev, 1e-20));
  double decay = 0;
  for (double R : {1e4, 1e6}) {
    BigComplex z(std::polar(R, 0.7), ctx);
    decay = std::max(decay, G.infinity_residual(z).to_double() * std::sqrt(R));
  }
  out.push_back(upper(S, "normalization_at_infinity", decay, 1.0, "max sqrt|z| |N diag(1,A)^-1 - I|"));
  return out;
}

std::vector<Check> suite_outer(const RunConfig& cfg) {
  const std::string S = "outer";
  std::vector<Check> out;
  const auto& ns = cfg.n_list;
  const std::vector<std::complex<double>> zs{{15, 0}, {5, 5}, {-1, 1e-3}};
  std::vector<std::vector<double>> rel(ns.size(), std::vector<double>(zs.size()));
  std::vector<double> band(ns.size()), nth(ns.size());
  parallel_for(static_cast<int>(ns.size()), cfg.threads, [&](int i) {
    const PrecCtx c = cfg.ctx_for(ns[i]);
    TypeIISolution Q = compute_Q(ns[i], c);
    for (size_t k = 0; k < zs.size(); ++k) rel[i][k] = outer_asymptotics(Q, BigComplex(zs[k], c)).relerr;
    band[i] = band_asymptotics(Q, BigFloat(5.0, c)).scaled_error;
    nth[i] = nth_root_check(Q, BigComplex(5.0, 5.0, c));
  });
  for (size_t k = 0; k < zs.size(); ++k) {
    double lo = INFINITY, hi = 0;
    for (size_t i = 0; i < ns.size(); ++i) {
      double s = rel[i][k] * ns[i] * (std::abs(zs[k]) + 1);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    std::string tag = "z=" + fmt_double(zs[k].real()) + (zs[k].imag() != 0 ? "+" + fmt_double(zs[k].imag()) + "i" : "");
    out.push_back(upper(S, tag + "_scaled_relerr_spread", hi / lo, 3.0));
    if (ns.size() > 1)
      out.push_back(upper(S, tag + "_relerr_halved", rel.back()[k] / rel.front()[k], 0.5));
  }
  if (ns.size() > 1) {
    out.push_back(upper(S, "band_scaled_error_decreases", band.back() / band.front(), 1.0));
    out.push_back(upper(S, "nth_root_decreases", nth.back() / nth.front(), 1.0));
  }
  return out;
}

std::vector<Check> suite_kernel(const RunConfig& cfg) {
  const std::string S = "kernel";
  std::vector<Check> out;
  const auto& ns = cfg.n_list;
  std::vector<double> trace(ns.size()), dens(ns.size());
  parallel_for(static_cast<int>(ns.size()), cfg.threads, [&](int i) {
    KernelCD K(ns[i], cfg.ctx_for(ns[i]));
    trace[i] = K.trace_quadrature().to_double() / ns[i];
    DensityResult d = density_limit(K, 2.0);
    dens[i] = std::abs(d.kn_over_n - d.lambda1);
  });
  double te = 0;
  for (double t : trace) te = std::max(te, std::abs(t - 2));
  out.push_back(upper(S, "trace_over_n_is_2", te, 1e-8));
  if (ns.size() > 1) out.push_back(upper(S, "density_error_decreases", dens.back() / dens.front(), 1.0));
  double agree = 0;
  for (int n : {1, 2, 3, 4}) {
    KernelCD K(n, cfg.ctx());
    for (auto [x, y] : std::vector<std::pair<double, double>>{{0.5, 1.3}, {2.0, 2.7}, {6.0, 0.9}, {3.3, 8.1}}) {
      BigFloat X(x, cfg.ctx()), Y(y, cfg.ctx());
      BigFloat a = K.cd(X, Y), b = K.sum(X, Y), c = K.via_Y(X, Y);
      BigFloat scale = max(abs(a), BigFloat(1e-30, cfg.ctx()));
      agree = std::max({agree, (abs(a - b) / scale).to_double(), (abs(a - c) / scale).to_double(),
                        (abs(b - c) / scale).to_double()});
    }
  }
  out.push_back(upper(S, "three_kernel_formulas_agree", agree, 1e-12));
  const int nl = ns.back();
  KernelCD K(nl, cfg.ctx_for(nl));
  double se = 0;
  for (double d : {0.0, 0.5, 1.0}) se = std::max(se, sine_kernel_limit(K, 2.0, d / 2, -d / 2).abserr);
  out.push_back(upper(S, "sine_kernel_n=" + std::to_string(nl), se, 0.15));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"weights", "curve", "equilibrium", "mop", "parametrix", "outer", "kernel"};
  return names;
}

std::vector<Check> run_suite(const std::string& suite, const RunConfig& cfg) {
  if (suite == "all") {
    std::vector<Check> all;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, cfg);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  static const std::map<std::string, std::vector<Check> (*)(const RunConfig&)> table{
      {"weights", suite_weights}, {"curve", suite_curve},   {"equilibrium", suite_equilibrium},
      {"mop", suite_mop},         {"parametrix", suite_parametrix}, {"outer", suite_outer},
      {"kernel", suite_kernel}};
  auto it = table.find(suite);
  if (it == table.end()) throw ArgumentError("unknown suite '" + suite + "'");
  return it->second(cfg);
}

Json checks_to_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json o;
    o["suite"] = c.suite;
    o["check"] = c.name;
    o["pass"] = c.pass;
    o["value"] = fmt_double(c.value);
    o["threshold"] = fmt_double(c.threshold);
    if (!c.detail.empty()) o["detail"] = c.detail;
    arr.push_back(o);
  }
  return arr;
}

}  // namespace nikishin::cli
