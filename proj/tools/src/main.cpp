#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"
#include "nikishin/asymptotics.hpp"
#include "nikishin/curve.hpp"
#include "nikishin/equilibrium.hpp"
#include "nikishin/errors.hpp"
#include "nikishin/mop.hpp"
#include "nikishin/weights.hpp"
#include "output.hpp"
#include "suites.hpp"

using namespace nikishin;
using namespace nikishin::cli;

namespace {

std::string dec(const BigFloat& x) { return x.str(); }

void require(bool ok, const std::string& msg) {
  if (!ok) throw ArgumentError(msg);
}

void validate(const RunConfig& cfg) {
  require(cfg.precision_bits >= 64, "--precision must be at least 64 bits");
  require(!cfg.n_list.empty(), "--n list must be nonempty");
  for (int n : cfg.n_list) require(n >= 1, "every n must be >= 1");
  require(cfg.m1 >= 4 && cfg.m2 >= 4, "grid sizes must be >= 4");
  require(cfg.threads >= 1, "--threads must be >= 1");
}

// ---- moments

struct MomentsArgs {
  int j = 1, n = 1, k_max = 10;
};

int cmd_moments(const RunConfig& cfg, const MomentsArgs& a) {
  require(a.j == 1 || a.j == 2, "--j must be 1 or 2");
  require(a.n >= 1, "--n must be >= 1");
  require(a.k_max >= 0, "--k-max must be >= 0");
  MomentTable t = moments(a.j, a.n, a.k_max);
  Table tab{{"k", "moment", "decimal"}, {}};
  for (int k = 0; k <= a.k_max; ++k)
    tab.add({std::to_string(k), to_string(t.values[k]), dec(BigFloat(t.values[k], cfg.ctx()))});
  emit_table(cfg, "moments_j" + std::to_string(a.j) + "_n" + std::to_string(a.n), tab);
  return kOk;
}

// ---- mop

struct MopArgs {
  int n = 1;
  bool emit_zeros = false, det_check = false, plot = false;
};

int cmd_mop(const RunConfig& cfg, const MopArgs& a) {
  require(a.n >= 1, "--n must be >= 1");
  const PrecCtx ctx = cfg.ctx_for(a.n);
  TypeIISolution Q = compute_Q(a.n, ctx);
  const std::string stem = "mop_n" + std::to_string(a.n);
  Table coef{{"k", "coefficient"}, {}};
  for (size_t k = 0; k < Q.Q.coeffs().size(); ++k) coef.add({std::to_string(k), to_string(Q.Q.coeffs()[k])});
  emit_table(cfg, stem + "_coefficients", coef);
  Table h{{"j", "h_exact", "h_decimal"}, {}};
  for (int j = 0; j < 2; ++j) h.add({std::to_string(j + 1), to_string(Q.h_exact[j]), dec(Q.h[j])});
  emit_table(cfg, stem + "_h", h);
  if (a.emit_zeros) {
    Table z{{"index", "zero"}, {}};
    for (size_t k = 0; k < Q.zeros.size(); ++k) z.add({std::to_string(k + 1), dec(Q.zeros[k])});
    emit_table(cfg, stem + "_zeros", z);
  }
  if (a.det_check) {
    RHMatrixY Y(a.n, ctx);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> U(-8, 8);
    Table d{{"re_z", "im_z", "abs_detY_minus_1"}, {}};
    for (int t = 0; t < 10; ++t) {
      std::complex<double> z(U(rng), U(rng));
      d.add({fmt_double(z.real()), fmt_double(z.imag()),
             fmt_double(abs(det3(Y.eval(BigComplex(z, ctx))) - 1.0).to_double())});
    }
    emit_table(cfg, stem + "_detY", d);
  }
  if (a.plot) {
    // zero histogram against lambda_1'/2
    const double pp = branch_points(PrecCtx(128)).p_plus.to_double();
    const int bins = std::max(8, static_cast<int>(Q.zeros.size()) / 2);
    std::vector<int> cnt(bins);
    for (const auto& z : Q.zeros) cnt[std::clamp(static_cast<int>(z.to_double() / pp * bins), 0, bins - 1)]++;
    Series hist{"zeros of Q_n", {}, false}, dens{"lambda_1'/2", {}, false};
    for (int b = 0; b < bins; ++b) {
      double h = cnt[b] / (Q.zeros.size() * pp / bins);
      hist.pts.push_back({pp * b / bins, h});
      hist.pts.push_back({pp * (b + 1) / bins, h});
    }
    for (int k = 1; k < 200; ++k) {
      double x = pp * k / 200;
      dens.pts.push_back({x, lambda1_density_exact(BigFloat(x, PrecCtx(128))).to_double() / 2});
    }
    write_file(cfg, stem + "_zeros.svg",
               render_svg({"zero distribution, n = " + std::to_string(a.n), "x", "density", false, false, {hist, dens}}));
  }
  return kOk;
}

// ---- equilibrium

struct EqArgs {
  bool plot = false;
};

int cmd_equilibrium(const RunConfig& cfg, const EqArgs& a) {
  EquilibriumSolution sol;
  try {
    sol = solve_equilibrium({cfg.m1, cfg.m2, cfg.tol});
  } catch (const ConvergenceError& e) {
    std::cerr << "equilibrium: " << e.what() << " (worst residual " << e.worst << ")\n";
    return kNoConvergence;
  }
  Table l1{{"x", "lambda1_density"}, {}}, l2{{"x", "lambda2_density", "nu_density"}, {}};
  for (int k = 1; k < 200; ++k) {
    double x = sol.p_plus * k / 200;
    l1.add({fmt_double(x), fmt_double(sol.lambda1_density(x))});
  }
  for (int k = 0; k < 120; ++k) {
    double x = -std::pow(10.0, -3 + 6.0 * k / 119);
    l2.add({fmt_double(x), fmt_double(sol.lambda2_density(x)), fmt_double(sol.nu_density(x))});
  }
  emit_table(cfg, "equilibrium_lambda1", l1);
  emit_table(cfg, "equilibrium_lambda2", l2);
  SummaryGReport g = verify_summaryG(sol);
  Json j;
  j["precision"] = 53;
  j["m1"] = cfg.m1;
  j["m2"] = cfg.m2;
  j["mass1"] = fmt_double(sol.mass1);
  j["mass2"] = fmt_double(sol.mass2);
  j["omega"] = fmt_double(sol.omega);
  j["omega_closed_form"] = omega_exact(PrecCtx(128)).str(30);
  j["residual_sup"] = fmt_double(sol.residual_sup);
  j["condition"] = fmt_double(sol.condition);
  j["p_plus"] = branch_points(PrecCtx(128)).p_plus.str(30);
  j["p_minus"] = branch_points(PrecCtx(128)).p_minus.str(30);
  Json gj;
  gj["i_equality"] = fmt_double(g.i_equality);
  gj["i_margin"] = fmt_double(g.i_margin);
  gj["ii_equality"] = fmt_double(g.ii_equality);
  gj["ii_margin"] = fmt_double(g.ii_margin);
  gj["iii_equality"] = fmt_double(g.iii_equality);
  gj["iv_equality"] = fmt_double(g.iv_equality);
  gj["v_deviation"] = fmt_double(g.v_deviation);
  gj["v_max"] = fmt_double(g.v_max);
  gj["vi_margin"] = fmt_double(g.vi_margin);
  gj["violations"] = g.violations;
  j["conditions"] = gj;
  emit_json(cfg, "equilibrium_summary", j);
  if (a.plot) {
    Series s1{"LS solution", {}, false}, s2{"closed form", {}, false};
    for (int k = 1; k < 200; ++k) {
      double x = sol.p_plus * k / 200;
      s1.pts.push_back({x, sol.lambda1_density(x)});
      s2.pts.push_back({x, lambda1_density_exact(BigFloat(x, PrecCtx(128))).to_double()});
    }
    write_file(cfg, "equilibrium_lambda1.svg", render_svg({"lambda_1'", "x", "density", false, false, {s1, s2}}));
  }
  return kOk;
}

// ---- verify

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  std::vector<Check> checks = run_suite(suite, cfg);
  bool ok = true;
  for (const auto& c : checks) {
    if (!c.pass) {
      ok = false;
      std::cerr << "FAIL " << c.suite << "/" << c.name << ": " << c.value << " vs " << c.threshold
                << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    }
  }
  Json j;
  j["suite"] = suite;
  j["precision"] = cfg.precision_bits;
  j["pass"] = ok;
  j["checks"] = checks_to_json(checks);
  emit_json(cfg, "verify_" + suite, j);
  return ok ? kOk : kCheckFailed;
}

// ---- kernel

struct KernelArgs {
  int n = 16;
  double x_star = 2.0, window = 3.0;
  int points = 61;
};

int cmd_kernel(const RunConfig& cfg, const KernelArgs& a) {
  require(a.n >= 1, "--n must be >= 1");
  require(a.points >= 2, "--points must be >= 2");
  require(a.window > 0, "--window must be positive");
  const double pp = branch_points(PrecCtx(128)).p_plus.to_double();
  require(a.x_star > 0 && a.x_star < pp, "--x-star must lie in (0, p+)");
  const PrecCtx ctx = cfg.ctx_for(a.n);
  KernelCD K(a.n, ctx);
  const std::string stem = "kernel_n" + std::to_string(a.n);

  Table diag{{"x", "K_over_n", "lambda1_density"}, {}};
  Series sd{"K_n(x,x)/n", {}, false}, sl{"lambda_1'", {}, false};
  for (int k = 1; k < 120; ++k) {
    double x = (pp + 1) * k / 120;
    double v = K.diag(BigFloat(x, ctx)).to_double() / a.n;
    double l = x < pp ? lambda1_density_exact(BigFloat(x, ctx)).to_double() : 0.0;
    diag.add({fmt_double(x), fmt_double(v), fmt_double(l)});
    sd.pts.push_back({x, v});
    sl.pts.push_back({x, l});
  }
  emit_table(cfg, stem + "_diagonal", diag);

  Table sine{{"u_minus_v", "scaled_kernel", "raw_kernel", "sinc"}, {}};
  Series ss{"scaled K_n", {}, true}, sc{"sinc", {}, false};
  std::vector<SineResult> res(a.points);
  parallel_for(a.points, cfg.threads, [&](int k) {
    double d = -a.window + 2 * a.window * k / (a.points - 1);
    res[k] = sine_kernel_limit(K, a.x_star, d / 2, -d / 2);
  });
  for (int k = 0; k < a.points; ++k) {
    double d = -a.window + 2 * a.window * k / (a.points - 1);
    sine.add({fmt_double(d), fmt_double(res[k].scaled), fmt_double(res[k].raw), fmt_double(res[k].sinc)});
    ss.pts.push_back({d, res[k].scaled});
  }
  for (int k = 0; k <= 300; ++k) {
    double d = -a.window + 2 * a.window * k / 300;
    sc.pts.push_back({d, std::abs(d) < 1e-12 ? 1.0 : std::sin(M_PI * d) / (M_PI * d)});
  }
  emit_table(cfg, stem + "_sine", sine);

  Json j;
  j["precision"] = ctx.bits;
  j["n"] = a.n;
  j["x_star"] = fmt_double(a.x_star);
  j["trace"] = K.trace_quadrature().str(30);
  j["trace_expected"] = std::to_string(2 * a.n);
  emit_json(cfg, stem + "_summary", j);
  write_file(cfg, stem + "_diagonal.svg", render_svg({"kernel diagonal, n = " + std::to_string(a.n), "x", "density", false, false, {sd, sl}}));
  write_file(cfg, stem + "_sine.svg", render_svg({"bulk scaling at x* = " + fmt_double(a.x_star), "u - v", "kernel", false, false, {ss, sc}}));
  return kOk;
}

// ---- asymptotics

struct AsymArgs {
  std::string target = "outer";
  double x = 5.0;
};

int cmd_asymptotics(const RunConfig& cfg, const AsymArgs& a) {
  ConvergenceReport rep;
  const auto& ns = cfg.n_list;
  std::vector<std::vector<ConvergenceSample>> per(ns.size());
  const double pp = branch_points(PrecCtx(128)).p_plus.to_double();
  if (a.target == "outer") {
    rep.target = Target::Outer;
  } else if (a.target == "band") {
    rep.target = Target::BandTwoTerm;
  } else if (a.target == "density") {
    rep.target = Target::Density;
  } else if (a.target == "sine") {
    rep.target = Target::SineKernel;
  } else {
    throw ArgumentError("--target must be one of outer, band, density, sine");
  }
  if (rep.target != Target::Outer) require(a.x > 0 && a.x < pp, "--x must lie in (0, p+)");

  parallel_for(static_cast<int>(ns.size()), cfg.threads, [&](int i) {
    const int n = ns[i];
    const PrecCtx c = cfg.ctx_for(n);
    switch (rep.target) {
      case Target::Outer: {
        TypeIISolution Q = compute_Q(n, c);
        for (auto z : {std::complex<double>(15, 0), {5, 5}, {-1, 1e-3}})
          per[i].push_back({n, "z=" + fmt_double(z.real()) + "+" + fmt_double(z.imag()) + "i",
                            outer_asymptotics(Q, BigComplex(z, c)).relerr});
        break;
      }
      case Target::BandTwoTerm: {
        TypeIISolution Q = compute_Q(n, c);
        per[i].push_back({n, "x=" + fmt_double(a.x), band_asymptotics(Q, BigFloat(a.x, c)).scaled_error});
        break;
      }
      case Target::Density: {
        KernelCD K(n, c);
        DensityResult d = density_limit(K, a.x);
        per[i].push_back({n, "x=" + fmt_double(a.x), std::abs(d.kn_over_n - d.lambda1)});
        break;
      }
      case Target::SineKernel: {
        KernelCD K(n, c);
        for (double d : {0.0, 0.5, 1.0})
          per[i].push_back({n, "x*=" + fmt_double(a.x) + ",u-v=" + fmt_double(d),
                            sine_kernel_limit(K, a.x, d / 2, -d / 2).abserr});
        break;
      }
    }
  });
  for (auto& p : per) rep.samples.insert(rep.samples.end(), p.begin(), p.end());
  rep.fitted_rate = fit_rate(rep.samples);

  Table t{{"n", "location", "error"}, {}};
  std::map<std::string, Series> by_loc;
  for (const auto& s : rep.samples) {
    t.add({std::to_string(s.n), s.location, fmt_double(s.error)});
    auto& ser = by_loc[s.location];
    ser.label = s.location;
    ser.markers = true;
    ser.pts.push_back({static_cast<double>(s.n), s.error});
  }
  const std::string stem = "asymptotics_" + to_string(rep.target);
  emit_table(cfg, stem, t);
  Json j;
  j["target"] = to_string(rep.target);
  j["fitted_rate"] = fmt_double(rep.fitted_rate);
  j["n"] = ns;
  emit_json(cfg, stem + "_rate", j);
  PlotSpec spec{"convergence: " + to_string(rep.target), "n", "error", true, true, {}};
  for (auto& [k, s] : by_loc) spec.series.push_back(s);
  write_file(cfg, stem + ".svg", render_svg(spec));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite-Pade / multiple orthogonal polynomial toolkit for the hyperbolic Nikishin pair"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key = value file (flags override it)");
  app.option_defaults()->always_capture_default();

  RunConfig cfg;
  std::string format = "csv";
  unsigned precision = 0;
  app.add_option("--precision", precision, "working precision in bits (default: 256, raised with n)");
  app.add_option("--out", cfg.out_dir, "output directory");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", cfg.seed, "seed for randomized check points");
  app.add_option("--threads", cfg.threads, "worker threads");
  app.add_option("--m1", cfg.m1, "equilibrium grid size for lambda_1");
  app.add_option("--m2", cfg.m2, "equilibrium grid size for lambda_2");
  app.add_option("--tol", cfg.tol, "equilibrium tolerance");
  app.add_flag("--stdout", cfg.to_stdout, "write data to stdout instead of files");
  app.fallthrough();

  MomentsArgs ma;
  auto* moments_cmd = app.add_subcommand("moments", "exact moment tables");
  moments_cmd->add_option("--j", ma.j, "weight index (1 or 2)");
  moments_cmd->add_option("--n", ma.n, "rescaling index");
  moments_cmd->add_option("--k-max", ma.k_max, "largest moment index");

  MopArgs mo;
  auto* mop_cmd = app.add_subcommand("mop", "type II polynomial Q_n");
  mop_cmd->add_option("--n", mo.n, "index n (Q_n has degree 2n)");
  mop_cmd->add_flag("--emit-zeros", mo.emit_zeros, "write the zeros");
  mop_cmd->add_flag("--det-check", mo.det_check, "spot-check det Y = 1");
  mop_cmd->add_flag("--plot", mo.plot, "zero histogram against lambda_1'/2");

  EqArgs ea;
  auto* eq_cmd = app.add_subcommand("equilibrium", "vector equilibrium problem");
  eq_cmd->add_flag("--plot", ea.plot, "density plot");

  std::string suite = "all";
  std::vector<int> nlist;
  auto* verify_cmd = app.add_subcommand("verify", "invariant suites");
  verify_cmd->add_option("--suite", suite)->check(
      CLI::IsMember({"weights", "curve", "equilibrium", "mop", "parametrix", "outer", "kernel", "all"}));
  verify_cmd->add_option("--n", nlist, "comma separated n list")->delimiter(',');

  KernelArgs ka;
  auto* kernel_cmd = app.add_subcommand("kernel", "Christoffel-Darboux kernel tables");
  kernel_cmd->add_option("--n", ka.n, "kernel index (degree 2n ensemble)");
  kernel_cmd->add_option("--x-star", ka.x_star, "bulk point in (0, p+)");
  kernel_cmd->add_option("--window", ka.window, "half width in u - v");
  kernel_cmd->add_option("--points", ka.points, "samples of u - v in the sine table");

  AsymArgs aa;
  std::vector<int> nlist_a;
  auto* asym_cmd = app.add_subcommand("asymptotics", "convergence reports");
  asym_cmd->add_option("--target", aa.target, "outer, band, density or sine");
  asym_cmd->add_option("--n", nlist_a, "comma separated n list")->delimiter(',');
  asym_cmd->add_option("--x", aa.x, "band point for band/density/sine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (precision != 0) {
      cfg.precision_bits = precision;
      cfg.precision_given = true;
    }
    cfg.format = format == "json" ? Format::Json : Format::Csv;
    if (!nlist.empty()) cfg.n_list = nlist;
    if (!nlist_a.empty()) cfg.n_list = nlist_a;
    validate(cfg);

    if (*moments_cmd) return cmd_moments(cfg, ma);
    if (*mop_cmd) return cmd_mop(cfg, mo);
    if (*eq_cmd) return cmd_equilibrium(cfg, ea);
    if (*verify_cmd) return cmd_verify(cfg, suite);
    if (*kernel_cmd) return cmd_kernel(cfg, ka);
    if (*asym_cmd) return cmd_asymptotics(cfg, aa);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (worst residual " << e.worst << ")\n";
    return kNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
