// Acceptance run: one line per criterion.  Exit status is 0 when the set of
// failing criteria equals the --known-failures list (empty by default), so a
// documented, faithful failure does not mask regressions elsewhere.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "nikishin/asymptotics.hpp"
#include "nikishin/curve.hpp"
#include "nikishin/equilibrium.hpp"
#include "nikishin/errors.hpp"
#include "nikishin/mop.hpp"
#include "nikishin/weights.hpp"

using namespace nikishin;

namespace {

// tolerances
constexpr double kMomentRel = 1e-30;
constexpr double kQ1Zeros = 1e-40;
constexpr double kMass = 1e-8;
constexpr double kBandResidual = 1e-8;
constexpr double kSaturation = 1e-8;
constexpr double kOmegaRepro = 1e-6;
constexpr double kKsRatio = 0.5;
constexpr double kCurveResidual = 1e-30;
constexpr double kSeriesC = 1e2;
constexpr double kDetNhat = 1e-15;
constexpr double kJump = 1e-8;
constexpr double kHIdentity = 1e-20;
constexpr double kDetY = 1e-15;
constexpr double kKernelAgree = 1e-12;
constexpr double kOuterSpread = 3.0;
constexpr double kBandReal = 1e-20;
constexpr double kTrace = 1e-8;
constexpr double kSine = 0.15;

const PrecCtx kCtx(256);

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3g", v);
  return b;
}

Outcome c1_moments() {
  double worst = 0;
  for (int j : {1, 2})
    for (int n : {1, 2, 4})
      for (int k = 0; k <= 20; ++k) {
        BigFloat exact(moment(j, n, k), kCtx), quad = moment_quadrature(j, n, k, kCtx);
        worst = std::max(worst, (abs(exact - quad) / abs(quad)).to_double());
      }
  bool vals = moment(1, 1, 0) == Rational(1, 2) && moment(2, 1, 0) == Rational(1) && moment(2, 1, 2) == Rational(5, 16);
  return {worst < kMomentRel && vals, "max rel err " + sci(worst) + (vals ? ", exact values ok" : ", exact values WRONG")};
}

Outcome c2_q1() {
  TypeIISolution Q = compute_Q(1, kCtx);
  bool exact = Q.Q.coeffs() == RatVector{Rational(3, 8), Rational(-11, 4), Rational(1)};
  BigFloat s = sqrt(BigFloat(97L, kCtx));
  double e = std::max(abs(Q.zeros[0] - (11.0 - s) / 8.0).to_double(), abs(Q.zeros[1] - (11.0 + s) / 8.0).to_double());
  BigFloat pp = pow(2.0 / (sqrt(BigFloat(5L, kCtx)) - 1.0), 5);
  bool inside = Q.zeros[0] > 0.0 && Q.zeros[1] < pp;
  return {exact && e < kQ1Zeros && inside, std::string(exact ? "exact" : "NOT exact") + ", zero err " + sci(e) +
                                                ", p+ = " + pp.str(12)};
}

Outcome c3_zeros() {
  std::string bad;
  for (int n = 1; n <= 16; ++n) {
    PrecCtx c = precision_for(n);
    MomentData md = moment_data(n, 3 * n + 1);
    TypeIISolution Q = compute_Q(n, md, c);
    bool ok = static_cast<int>(Q.zeros.size()) == 2 * n && Q.zeros.front() > 0.0 && Q.max_zero_imag < 1e-30;
    for (size_t k = 1; ok && k < Q.zeros.size(); ++k) ok = Q.zeros[k] > Q.zeros[k - 1];
    for (int j : {1, 2})
      for (int k = 0; k < n; ++k) ok = ok && weighted_integral(md, Q.Q.poly(), j, k) == 0;
    if (!ok) bad += " n=" + std::to_string(n);
  }
  return {bad.empty(), bad.empty() ? "n = 1..16 real, simple, positive, exact orthogonality" : "failed:" + bad};
}

Outcome c4_equilibrium() {
  EquilibriumSolution sol = solve_equilibrium();
  double dm = std::max(std::abs(sol.mass1 - 2), std::abs(sol.mass2 - 1));
  // band residual on a fine grid, independent of the collocation nodes
  double lo = INFINITY, hi = -INFINITY;
  for (int k = 1; k < 200; ++k) {
    double r = sol.eq1_residual(sol.p_plus * k / 200.0);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  double band = std::max(std::abs(lo), std::abs(hi));
  double sat = 0;
  for (int k = 1; k < 20; ++k) {
    double x = sol.p_minus * k / 20.0;
    sat = std::max(sat, std::abs(sol.lambda2_density(x) - 1 / (2 * std::sqrt(-x))) * 2 * std::sqrt(-x));
  }
  int ineq_bad = 0;
  for (int k = 1; k <= 10; ++k) {
    if (!(sol.eq1_residual(sol.p_plus * (1 + 0.3 * k)) > 0)) ++ineq_bad;
    if (!(sol.eq2_value(sol.p_minus * k / 11.0) < 0)) ++ineq_bad;
  }
  auto om = omega_samples(sol, {1.0, 4.0, 9.0});
  double od = 0;
  for (double o : om) od = std::max(od, std::abs(o - sol.omega));
  bool ok = dm < kMass && band < kBandResidual && sat < kSaturation && ineq_bad == 0 && od < kOmegaRepro;
  return {ok, "mass err " + sci(dm) + ", band residual " + sci(band) + ", saturation " + sci(sat) + ", inequality violations " +
                  std::to_string(ineq_bad) + "/20, omega spread " + sci(od)};
}

Outcome c5_ks() {
  EquilibriumSolution sol = solve_equilibrium();
  double ks[3];
  int i = 0;
  for (int n : {4, 8, 16}) ks[i++] = ks_distance(compute_Q(n, precision_for(n)).zeros, sol);
  bool ok = ks[0] > ks[1] && ks[1] > ks[2] && ks[2] < kKsRatio * ks[0];
  return {ok, "KS(4,8,16) = " + sci(ks[0]) + ", " + sci(ks[1]) + ", " + sci(ks[2])};
}

Outcome c6_curve() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> lr(std::log(0.2), std::log(1e6)), th(-M_PI, M_PI);
  double cub = 0, vieta = 0;
  int done = 0;
  while (done < 10000) {
    std::complex<double> zc = std::polar(std::exp(lr(rng)), th(rng));
    if (std::abs(zc.imag()) < 1e-6 * std::abs(zc)) continue;
    BigComplex z(zc, kCtx);
    BranchTriple b = branches_at(z);
    BigFloat scale = abs(z) + 1.0;
    for (const auto& x : b.zeta) cub = std::max(cub, (abs(((z * x - z) * x + 1.0) * x + 1.0) / scale).to_double());
    const auto& s = b.zeta;
    vieta = std::max({vieta, abs(s[0] + s[1] + s[2] - 1.0).to_double(),
                      abs((s[0] * s[1] + s[0] * s[2] + s[1] * s[2]) * z - 1.0).to_double(),
                      abs(s[0] * s[1] * s[2] * z + 1.0).to_double()});
    ++done;
  }
  double ser = 0;
  for (int k = 0; k < 12; ++k) {
    BigComplex z(std::polar(1e6, -M_PI + 0.25 + 0.5 * k), kCtx);
    auto sr = branch_series(z);
    BranchTriple b = branches_at(z);
    for (int j = 0; j < 3; ++j) ser = std::max(ser, abs(b.zeta[j] - sr[j]).to_double());
  }
  BranchPoints bp = branch_points(kCtx);
  double fm = std::max(abs(forward_map(BigComplex(bp.q_plus)) - BigComplex(bp.p_plus)).to_double(),
                       abs(forward_map(BigComplex(bp.q_minus)) - BigComplex(bp.p_minus)).to_double());
  bool ok = cub < kCurveResidual && vieta < kCurveResidual && ser < kSeriesC * 1e-18 && fm < kCurveResidual;
  return {ok, "cubic " + sci(cub) + ", Vieta " + sci(vieta) + ", series " + sci(ser) + " (bound " + sci(kSeriesC * 1e-18) +
                  "), forward map " + sci(fm)};
}

Outcome c7_parametrix() {
  GlobalParametrix G(kCtx);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-30, 30);
  const BigComplex target = i_unit(kCtx) * -0.5;
  double dev = 0, hdev = 0;
  BigComplex first(kCtx);
  for (int t = 0; t < 200; ++t) {
    std::complex<double> zc(U(rng), U(rng));
    BigComplex z(zc, kCtx);
    BigComplex d = G.det_hat(z);
    if (t == 0) first = d;
    dev = std::max(dev, abs(d - target).to_double());
    if (t < 100) hdev = std::max(hdev, abs(eval_H(branches_at(z).zeta[0]) - G.N(z)[0][0]).to_double());
  }
  double jump = 0;
  for (int k = 1; k <= 20; ++k) {
    jump = std::max(jump, G.jump_residual_band(BigFloat(0.55 * k, kCtx)).to_double());
    jump = std::max(jump, G.jump_residual_tail(BigFloat(-0.1 * std::pow(1.4, k), kCtx)).to_double());
  }
  bool ok = dev < kDetNhat && jump < kJump && hdev < kHIdentity;
  return {ok, "det Nhat - (-i/2) up to " + sci(dev) + " (observed det = " + first.re.str(3) + " + " + first.im.str(6) +
                  "i), jumps " + sci(jump) + ", H vs F1/r1 " + sci(hdev)};
}

Outcome c8_rh() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> U(-10, 10);
  double det = 0;
  for (int n : {1, 2, 4}) {
    RHMatrixY Y(n, kCtx);
    for (int t = 0; t < 100; ++t) {
      BigComplex z(std::complex<double>(U(rng), U(rng)), kCtx);
      Matrix3 y = Y.eval(z);
      // scale by the size of the entries so that large |z| is not favoured
      BigFloat s(1L, kCtx);
      for (const auto& row : y)
        for (const auto& v : row) s = max(s, abs(v));
      det = std::max(det, (abs(det3(y) - 1.0) / s).to_double());
    }
  }
  double agree = 0;
  for (int n = 1; n <= 4; ++n) {
    KernelCD K(n, kCtx);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        if (a == b) continue;
        BigFloat x(0.3 + 1.7 * a, kCtx), y(0.45 + 1.7 * b, kCtx);
        BigFloat k1 = K.cd(x, y), k2 = K.sum(x, y), k3 = K.via_Y(x, y);
        BigFloat s = max(max(abs(k1), abs(k2)), BigFloat(1e-40, kCtx));
        agree = std::max({agree, (abs(k1 - k2) / s).to_double(), (abs(k1 - k3) / s).to_double(),
                          (abs(k2 - k3) / s).to_double()});
      }
  }
  return {det < kDetY && agree < kKernelAgree, "det Y dev " + sci(det) + ", kernel formulas " + sci(agree)};
}

Outcome c9_outer() {
  const int ns[3] = {4, 8, 16};
  const std::complex<double> zs[3] = {{15, 0}, {5, 5}, {-1, 1e-3}};
  double rel[3][3];
  for (int i = 0; i < 3; ++i) {
    PrecCtx c = precision_for(ns[i]);
    TypeIISolution Q = compute_Q(ns[i], c);
    for (int k = 0; k < 3; ++k) rel[i][k] = outer_asymptotics(Q, BigComplex(zs[k], c)).relerr;
  }
  bool ok = true;
  std::ostringstream os;
  for (int k = 0; k < 3; ++k) {
    double lo = INFINITY, hi = 0;
    for (int i = 0; i < 3; ++i) {
      double s = rel[i][k] * ns[i] * (std::abs(zs[k]) + 1);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    ok = ok && hi / lo <= kOuterSpread && rel[2][k] < rel[0][k] / 2;
    os << (k ? "; " : "") << "z" << k + 1 << " spread " << sci(hi / lo) << " ratio " << sci(rel[2][k] / rel[0][k]);
  }
  return {ok, os.str()};
}

Outcome c10_band() {
  PrecCtx c8 = precision_for(8), c16 = precision_for(16);
  TypeIISolution Q8 = compute_Q(8, c8), Q16 = compute_Q(16, c16);
  BandResult b8 = band_asymptotics(Q8, BigFloat(5.0, c8)), b16 = band_asymptotics(Q16, BigFloat(5.0, c16));
  double im = std::abs(b8.prediction.im.to_double());
  int changes = band_sign_changes(8, 1.0, 10.0, 900, c8);
  int zeros = 0;
  for (const auto& z : Q8.zeros) zeros += (z > 1.0 && z < 10.0);
  bool ok = im < kBandReal && std::abs(changes - zeros) <= 1 && b16.scaled_error < b8.scaled_error;
  return {ok, "Im " + sci(im) + ", sign changes " + std::to_string(changes) + " vs zeros " + std::to_string(zeros) +
                  ", scaled err " + sci(b8.scaled_error) + " -> " + sci(b16.scaled_error)};
}

Outcome c11_kernel() {
  double tr = 0;
  for (int n = 1; n <= 16; ++n) {
    KernelCD K(n, precision_for(n));
    tr = std::max(tr, std::abs(K.trace_quadrature().to_double() / n - 2));
  }
  KernelCD K8(8, precision_for(8)), K16(16, precision_for(16)), K24(24, precision_for(24));
  DensityResult d8 = density_limit(K8, 2.0), d16 = density_limit(K16, 2.0);
  double e8 = std::abs(d8.kn_over_n - d8.lambda1), e16 = std::abs(d16.kn_over_n - d16.lambda1);
  bool sine_ok = true;
  std::ostringstream os;
  for (double d : {0.0, 0.5, 1.0}) {
    SineResult s16 = sine_kernel_limit(K16, 2.0, d / 2, -d / 2), s24 = sine_kernel_limit(K24, 2.0, d / 2, -d / 2);
    sine_ok = sine_ok && s16.abserr < kSine && s24.abserr < s16.abserr;
    os << ", u-v=" << d << ": " << sci(s16.abserr) << " -> " << sci(s24.abserr);
  }
  bool ok = tr < kTrace && e16 < e8 && sine_ok;
  return {ok, "trace dev " + sci(tr) + ", density err " + sci(e8) + " -> " + sci(e16) + os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--known-failures" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string t; std::getline(ss, t, ',');)
        if (!t.empty()) known.insert(std::stoi(t));
    }
  }
  const std::function<Outcome()> criteria[] = {c1_moments, c2_q1,         c3_zeros, c4_equilibrium,
                                               c5_ks,      c6_curve,      c7_parametrix, c8_rh,
                                               c9_outer,   c10_band,      c11_kernel};
  std::set<int> failed;
  for (int i = 0; i < 11; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) failed.insert(i + 1);
    std::printf("criterion %2d: %s  %s  [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(), sec);
    std::fflush(stdout);
  }
  std::printf("%zu/11 passed\n", 11 - failed.size());
  if (failed != known) {
    std::printf("failing set differs from the documented known failures\n");
    return 1;
  }
  return 0;
}
