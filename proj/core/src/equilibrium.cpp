#include "nikishin/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "nikishin/quadrature.hpp"

namespace nikishin {

namespace {

using cd = std::complex<double>;

const double kPP = std::pow(2.0 / (std::sqrt(5.0) - 1.0), 5);
const double kPM = -std::pow((std::sqrt(5.0) - 1.0) / 2.0, 5);
const double kT = std::sqrt(kPP);
const double kTm = std::sqrt(-kPM);
constexpr double kTiny = 1e-300;

struct Rule {
  std::vector<double> x, w;
  void append(const Rule& o) {
    x.insert(x.end(), o.x.begin(), o.x.end());
    w.insert(w.end(), o.w.begin(), o.w.end());
  }
};

// Gauss-Legendre panels graded geometrically toward a, b and the midpoint.
Rule gp(double a, double b, double ratio = 0.15, double hmin = 1e-11) {
  const auto& gl = gauss_legendre_d(20);
  double mid = (a + b) / 2, h = mid - a;
  std::vector<double> p{a, b, mid};
  while (h > hmin) {
    h *= ratio;
    p.push_back(a + h);
    p.push_back(b - h);
  }
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  Rule r;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    double l = p[i], rr = p[i + 1];
    for (size_t k = 0; k < gl.nodes.size(); ++k) {
      r.x.push_back((rr - l) / 2 * gl.nodes[k] + (rr + l) / 2);
      r.w.push_back((rr - l) / 2 * gl.weights[k]);
    }
  }
  return r;
}

Rule graded(double a, double b, double s) {
  if (s <= a || s >= b) return gp(a, b);
  Rule r = gp(a, s);
  r.append(gp(s, b));
  return r;
}

void cheb(double u, int n, double* out) {
  if (n > 0) out[0] = 1;
  if (n > 1) out[1] = u;
  for (int k = 2; k < n; ++k) out[k] = 2 * u * out[k - 1] - out[k - 2];
}

double cheb_sum(double u, const std::vector<double>& c) {
  double b1 = 0, b2 = 0;
  for (size_t k = c.size(); k-- > 1;) {
    double b0 = 2 * u * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return c.empty() ? 0.0 : u * b1 - b2 + c[0];
}

double t_of(double y) { return kT * (1 - y * y); }
double tau_of(double y) { return kTm / (1 - y * y); }
double jac1(double y) { return 2 * kT * y; }
double jac2(double y) { return kTm * 2 * y / ((1 - y * y) * (1 - y * y)); }
double rho_fixed(double y) { return -(2 / M_PI) * std::log1p(-y * y); }
double k0(double y) { return (1 - y) * (1 - y); }

// P^{sigma restricted to [p-, 0]}(x)
double psig0(double x) {
  const double a = kTm;
  double I;
  if (x > 0) {
    double s = std::sqrt(x);
    I = a * std::log(x + a * a) - 2 * a + 2 * s * std::atan(a / s);
  } else if (x == 0) {
    I = a * std::log(a * a) - 2 * a;
  } else {
    double b = std::sqrt(-x);
    double e = a - b;
    I = (a + b) * std::log(a + b) + (e == 0 ? 0.0 : e * std::log(std::fabs(e))) - 2 * a;
  }
  return -I;
}

// int_0^a log(z + tau^2) d tau
cd sig0_log(cd z) {
  const double a = kTm;
  cd s = std::sqrt(z);
  return a * std::log(z + a * a) - 2 * a + 2.0 * s * std::atan(a / s);
}

// Potentials at x of every basis piece.
struct Row {
  Eigen::VectorXd b1, b2;
  double f1 = 0, k0 = 0, sig = 0;
};

Row potentials(double x, int n1, int n2) {
  Row row;
  row.b1 = Eigen::VectorXd::Zero(n1);
  row.b2 = Eigen::VectorXd::Zero(n2);
  std::vector<double> T(std::max(n1, n2));

  const bool band = x > 0 && x < kPP;
  const double ys = band ? std::sqrt(std::max(0.0, 1 - std::sqrt(x) / kT)) : -1.0;
  Rule r = graded(0, 1, ys);
  for (size_t q = 0; q < r.x.size(); ++q) {
    double y = r.x[q];
    // a node can round onto the singular point when it sits within an ulp of an end
    double L = band ? std::log(std::max(kTiny, kT * kT * std::fabs((y - ys) * (y + ys) * (2 - y * y - ys * ys))))
                    : std::log(std::max(kTiny, std::fabs(x - t_of(y) * t_of(y))));
    double f = -L * jac1(y) * r.w[q];
    cheb(2 * y - 1, n1, T.data());
    for (int k = 0; k < n1; ++k) row.b1[k] += f * y * T[k];
    row.f1 += f * rho_fixed(y);
  }

  const bool tail = x < kPM;
  const double ys2 = tail ? std::sqrt(std::max(0.0, 1 - kTm / std::sqrt(-x))) : -1.0;
  r = graded(0, 1, ys2);
  for (size_t q = 0; q < r.x.size(); ++q) {
    double y = r.x[q];
    double L;
    if (tail) {
      L = std::log(std::max(kTiny, kTm * kTm * std::fabs((y - ys2) * (y + ys2) * (2 - y * y - ys2 * ys2)))) -
          2 * std::log((1 - y * y) * (1 - ys2 * ys2));
    } else {
      double tau = tau_of(y);
      L = std::log(std::max(kTiny, std::fabs(x + tau * tau)));
    }
    double g = -L * jac2(y) * r.w[q];
    cheb(2 * y - 1, n2, T.data());
    for (int k = 0; k < n2; ++k) row.b2[k] += g * k0(y) * y * T[k];
    row.k0 += g * k0(y);
  }
  row.sig = psig0(x);
  return row;
}

Eigen::Map<const Eigen::VectorXd> as_vec(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

// ---------------------------------------------------------------------------

double EquilibriumSolution::rho(double y) const { return rho_fixed(y) + y * cheb_sum(2 * y - 1, c); }

double EquilibriumSolution::kappa_y(double y) const { return k0(y) * (1 + y * cheb_sum(2 * y - 1, d)); }

double EquilibriumSolution::lambda1_density(double x) const {
  if (x <= 0 || x >= p_plus) return 0.0;
  double t = std::sqrt(x);
  double y = std::sqrt(1 - t / kT);
  return rho(y) / (2 * t);
}

double EquilibriumSolution::kappa(double tau) const {
  if (tau < 0) throw DomainError("kappa: tau must be nonnegative");
  if (tau <= kTm) return 1.0;
  return kappa_y(std::sqrt(1 - kTm / tau));
}

double EquilibriumSolution::lambda2_density(double x) const {
  if (x >= 0) return 0.0;
  double tau = std::sqrt(-x);
  return kappa(tau) / (2 * tau);
}

double EquilibriumSolution::nu_density(double x) const {
  if (x >= 0) return 0.0;
  double tau = std::sqrt(-x);
  return (1 - kappa(tau)) / (2 * tau);
}

double EquilibriumSolution::potential(int j, double x) const {
  Row r = potentials(x, n1, n2);
  if (j == 1) return r.b1.dot(as_vec(c)) + r.f1;
  if (j == 2) return r.sig + r.k0 + r.b2.dot(as_vec(d));
  throw ArgumentError("potential: j must be 1 or 2");
}

double EquilibriumSolution::eq1_residual(double x) const {
  if (x < 0) throw DomainError("eq1_residual: x must be >= 0");
  Row r = potentials(x, n1, n2);
  double P1 = r.b1.dot(as_vec(c)) + r.f1, P2 = r.sig + r.k0 + r.b2.dot(as_vec(d));
  return 2 * P1 - P2 + M_PI * std::sqrt(x) - omega;
}

double EquilibriumSolution::eq2_value(double x) const {
  if (x > 0) throw DomainError("eq2_value: x must be <= 0");
  Row r = potentials(x, n1, n2);
  double P1 = r.b1.dot(as_vec(c)) + r.f1, P2 = r.sig + r.k0 + r.b2.dot(as_vec(d));
  return 2 * P2 - P1;
}

double EquilibriumSolution::mass1_above(double x) const {
  if (x >= p_plus) return 0.0;
  if (x < 0) return mass1;
  double y0 = std::sqrt(1 - std::sqrt(x) / kT);
  Rule r = gp(0, y0);
  double s = 0;
  for (size_t q = 0; q < r.x.size(); ++q) s += rho(r.x[q]) * jac1(r.x[q]) * r.w[q];
  return s;
}

double EquilibriumSolution::mass2_between(double x) const {
  if (x >= 0) return 0.0;
  double b = std::sqrt(-x);
  if (b <= kTm) return b;
  double yb = std::sqrt(1 - kTm / b);
  Rule r = gp(0, yb);
  double s = kTm;
  for (size_t q = 0; q < r.x.size(); ++q) s += kappa_y(r.x[q]) * jac2(r.x[q]) * r.w[q];
  return s;
}

double EquilibriumSolution::nu_mass_between(double x) const {
  if (x >= p_minus) return 0.0;
  double yb = std::sqrt(1 - kTm / std::sqrt(-x));
  Rule r = gp(0, yb);
  double s = 0;
  for (size_t q = 0; q < r.x.size(); ++q) s += (1 - kappa_y(r.x[q])) * jac2(r.x[q]) * r.w[q];
  return s;
}

std::complex<double> EquilibriumSolution::g(int j, cd z, Side side) const {
  if (j != 1 && j != 2) throw ArgumentError("g: j must be 1 or 2");
  const double sgn = side == Side::Minus ? -1.0 : 1.0;
  if (z.imag() == 0) {
    double x = z.real();
    if (j == 1) {
      if (x > p_plus) return -potential(1, x);
      if (side == Side::None) throw BranchError("g1: real z in (-inf, p+] requires a side");
      return cd(-potential(1, x), sgn * M_PI * mass1_above(x));
    }
    if (x >= 0) return -potential(2, x);
    if (side == Side::None) throw BranchError("g2: real z in (-inf, 0) requires a side");
    return cd(-potential(2, x), sgn * M_PI * mass2_between(x));
  }
  cd s = 0;
  if (j == 1) {
    double xr = z.real();
    double ys = (xr > 0 && xr < p_plus) ? std::sqrt(1 - std::sqrt(xr) / kT) : -1.0;
    Rule r = graded(0, 1, ys);
    for (size_t q = 0; q < r.x.size(); ++q) {
      double y = r.x[q], t = t_of(y);
      s += std::log(z - t * t) * rho(y) * jac1(y) * r.w[q];
    }
    return s;
  }
  double xr = z.real();
  double ys = xr < p_minus ? std::sqrt(1 - kTm / std::sqrt(-xr)) : -1.0;
  Rule r = graded(0, 1, ys);
  for (size_t q = 0; q < r.x.size(); ++q) {
    double y = r.x[q], tau = tau_of(y);
    s += std::log(z + tau * tau) * kappa_y(y) * jac2(y) * r.w[q];
  }
  return s + sig0_log(z);
}

// ---------------------------------------------------------------------------

EquilibriumSolution solve_equilibrium(const EquilibriumOptions& opt) {
  if (opt.m1 < 32 || opt.m2 < 32) throw ArgumentError("solve_equilibrium: grid sizes must be >= 32");
  const int n1 = opt.m1, n2 = opt.m2;
  const int M = 2 * (n1 + n2);
  const int ncol = n1 + n2 + 1;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * M + 2, ncol);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(2 * M + 2);

  for (int k = 0; k < M; ++k) {
    double y = 0.002 + 0.996 * (1 + std::cos(M_PI * (k + 0.5) / M)) / 2;
    double x = t_of(y) * t_of(y);
    Row r = potentials(x, n1, n2);
    A.block(k, 0, 1, n1) = 2 * r.b1.transpose();
    A.block(k, n1, 1, n2) = -r.b2.transpose();
    A(k, ncol - 1) = -1;
    b[k] = r.sig + r.k0 - M_PI * std::sqrt(x) - 2 * r.f1;

    x = -tau_of(y) * tau_of(y);
    r = potentials(x, n1, n2);
    A.block(M + k, 0, 1, n1) = -r.b1.transpose();
    A.block(M + k, n1, 1, n2) = 2 * r.b2.transpose();
    b[M + k] = -2 * r.sig - 2 * r.k0 + r.f1;
  }

  // mass rows, weighted
  const double mw = 10;
  Rule r = gp(0, 1);
  std::vector<double> T(std::max(n1, n2));
  double fm1 = 0, fm2 = 0;
  for (size_t q = 0; q < r.x.size(); ++q) {
    double y = r.x[q];
    cheb(2 * y - 1, n1, T.data());
    for (int k = 0; k < n1; ++k) A(2 * M, k) += mw * jac1(y) * r.w[q] * y * T[k];
    fm1 += jac1(y) * r.w[q] * rho_fixed(y);
    cheb(2 * y - 1, n2, T.data());
    for (int k = 0; k < n2; ++k) A(2 * M + 1, n1 + k) += mw * jac2(y) * r.w[q] * k0(y) * y * T[k];
    fm2 += jac2(y) * r.w[q] * k0(y);
  }
  b[2 * M] = mw * (2 - fm1);
  b[2 * M + 1] = mw * (1 - kTm - fm2);

  Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd sol = svd.solve(b);
  const auto& sv = svd.singularValues();

  EquilibriumSolution s;
  s.n1 = n1;
  s.n2 = n2;
  s.c.assign(sol.data(), sol.data() + n1);
  s.d.assign(sol.data() + n1, sol.data() + n1 + n2);
  s.omega = sol[ncol - 1];
  s.condition = sv[0] / sv[sv.size() - 1];
  s.p_plus = kPP;
  s.p_minus = kPM;
  Eigen::VectorXd res = A * sol - b;
  s.residual_sup = res.head(2 * M).cwiseAbs().maxCoeff();
  s.mass1 = (A(2 * M, Eigen::seqN(0, n1)).dot(sol.head(n1))) / mw + fm1;
  s.mass2 = kTm + fm2 + (A(2 * M + 1, Eigen::seqN(n1, n2)).dot(sol.segment(n1, n2))) / mw;

  const double worst = std::max({s.residual_sup, std::fabs(s.mass1 - 2), std::fabs(s.mass2 - 1)});
  if (worst > opt.tol) {
    char profile[160];
    std::snprintf(profile, sizeof profile, "solve_equilibrium: residual %.3e, mass errors %.3e, %.3e", s.residual_sup,
                  s.mass1 - 2, s.mass2 - 1);
    throw ConvergenceError(profile, worst);
  }
  return s;
}

std::vector<double> omega_samples(const EquilibriumSolution& sol, const std::vector<double>& xs) {
  std::vector<double> out;
  for (double x : xs) {
    if (x <= 0 || x >= sol.p_plus) throw DomainError("omega_samples: points must lie inside the band");
    out.push_back(2 * sol.potential(1, x) - sol.potential(2, x) + M_PI * std::sqrt(x));
  }
  return out;
}

cd eval_psi(const EquilibriumSolution& sol, cd z, Side side) {
  if (z.imag() == 0 && z.real() > 0 && z.real() < sol.p_plus) {
    if (side == Side::None) throw BranchError("eval_psi: band point requires a side");
    double m = sol.mass1_above(z.real());
    return cd(0, (side == Side::Plus ? -2 : 2) * M_PI * m);
  }
  cd root = std::sqrt(z);
  if (z.imag() == 0 && z.real() <= 0) {
    if (side == Side::None) throw BranchError("eval_psi: negative axis requires a side");
    root = cd(0, (side == Side::Plus ? 1 : -1) * std::sqrt(-z.real()));
  }
  return M_PI * root - 2.0 * sol.g(1, z, side) + sol.g(2, z, side) - sol.omega;
}

cd eval_psi_hat(const EquilibriumSolution& sol, double x) {
  if (x > sol.p_minus) throw DomainError("eval_psi_hat: x must be <= p-");
  return cd(0, -2 * M_PI * sol.nu_mass_between(x));
}

// ---------------------------------------------------------------------------

SummaryGReport verify_summaryG(const EquilibriumSolution& sol, double tol) {
  SummaryGReport rep;
  const double pp = sol.p_plus, pm = sol.p_minus;
  auto flag = [&](bool ok, const std::string& what) {
    if (!ok) rep.violations.push_back(what);
  };

  rep.i_margin = 1e300;
  for (int k = 1; k < 20; ++k) {
    double x = pp * k / 20.0;
    rep.i_equality = std::max(rep.i_equality, std::fabs(std::expm1(-sol.eq1_residual(x))));
  }
  for (double f : {1.02, 1.1, 1.5, 2.0, 5.0, 20.0}) {
    rep.i_margin = std::min(rep.i_margin, -std::expm1(-sol.eq1_residual(pp * f)));
  }
  flag(rep.i_equality < tol, "(i) equality on [0,p+]");
  flag(rep.i_margin > 0, "(i) inequality beyond p+");

  rep.ii_margin = 1e300;
  for (double f : {1.05, 1.5, 3.0, 10.0, 100.0, 1e4}) {
    rep.ii_equality = std::max(rep.ii_equality, std::fabs(std::expm1(-sol.eq2_value(pm * f))));
  }
  for (double f : {0.95, 0.8, 0.5, 0.2, 0.05, 0.0}) {
    rep.ii_margin = std::min(rep.ii_margin, std::expm1(-sol.eq2_value(pm * f)));
  }
  flag(rep.ii_equality < tol, "(ii) equality on (-inf,p-)");
  flag(rep.ii_margin > 0, "(ii) inequality on (p-,0]");

  for (double f : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
    double x = pm * f;
    cd lhs = std::exp(cd(0, 2 * M_PI * sol.mass2_between(x)));
    cd ups2 = std::exp(cd(0, 2 * M_PI * std::sqrt(-x)));
    rep.iii_equality = std::max(rep.iii_equality, std::abs(lhs - ups2));
  }
  flag(rep.iii_equality < tol, "(iii) jump of g2 on [p-,0]");

  for (double f : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    double x = pp * f, eps = 1e-9 * x;
    double jump = (sol.g(1, cd(x, eps)) - sol.g(1, cd(x, -eps))).imag();
    rep.iv_equality = std::max(rep.iv_equality, std::fabs(jump - 2 * M_PI * sol.mass1_above(x)));
  }
  flag(rep.iv_equality < 1e-5, "(iv) jump of g1 on the band");

  // (v): one-sided second-order difference in y of Re(2 g2 - g1 - 2 pi sqrt z)
  rep.v_max = -1e300;
  for (double x : {pm * 0.5, pm * 1.5, pm * 3.0, -1.0, -5.0, -50.0}) {
    auto F = [&](double y) {
      cd z(x, y);
      if (y == 0) return 2 * sol.g(2, z, Side::Plus).real() - sol.g(1, z, Side::Plus).real();
      return (2.0 * sol.g(2, z) - sol.g(1, z) - 2 * M_PI * std::sqrt(z)).real();
    };
    double h = 1e-4 * std::fabs(x);
    double der = (-3 * F(0) + 4 * F(h) - F(2 * h)) / (2 * h);
    double expect = 2 * M_PI * (sol.lambda2_density(x) - 1 / (2 * std::sqrt(-x)));
    double scale = M_PI / std::sqrt(-x);
    rep.v_deviation = std::max(rep.v_deviation, std::fabs(der - expect) / scale);
    rep.v_max = std::max(rep.v_max, expect);
  }
  flag(rep.v_deviation < 1e-3, "(v) normal derivative formula");
  flag(rep.v_max <= 1e-12, "(v) sign of the normal derivative");

  rep.vi_margin = 1e300;
  for (double f : {0.2, 0.4, 0.6, 0.8}) {
    for (double y : {-1e-4, 1e-4}) {
      cd z(pm * f, y);
      double v = (2.0 * sol.g(2, z) - sol.g(1, z) - 2 * M_PI * std::sqrt(z)).real();
      rep.vi_margin = std::min(rep.vi_margin, v);
    }
  }
  flag(rep.vi_margin > 0, "(vi) strict inequality near (p-,0)");
  return rep;
}

// ---------------------------------------------------------------------------

ObjectiveJ::ObjectiveJ(const EquilibriumSolution& sol) : n1_(sol.n1), n2_(sol.n2) {
  pieces_ = n1_ + n2_ + 3;
  const int P = pieces_;
  const int iF = n1_, iK = n1_ + 1 + n2_, iS = iK + 1;
  G_.assign(static_cast<size_t>(P) * P, 0.0);
  piece_mass_.assign(P, 0.0);
  piece_phi_.assign(P, 0.0);
  std::vector<double> T(std::max(n1_, n2_));

  auto pots = [&](double x) {
    Row r = potentials(x, n1_, n2_);
    std::vector<double> p(P);
    for (int k = 0; k < n1_; ++k) p[k] = r.b1[k];
    p[iF] = r.f1;
    for (int k = 0; k < n2_; ++k) p[iF + 1 + k] = r.b2[k];
    p[iK] = r.k0;
    p[iS] = r.sig;
    return p;
  };
  auto accumulate = [&](const std::vector<double>& pot, const std::vector<double>& dens) {
    for (int a = 0; a < P; ++a)
      for (int b = 0; b < P; ++b)
        if (dens[b] != 0) G_[static_cast<size_t>(a) * P + b] += pot[a] * dens[b];
  };

  Rule r = gp(0, 1);
  for (size_t q = 0; q < r.x.size(); ++q) {
    double y = r.x[q], wq = jac1(y) * r.w[q];
    std::vector<double> dens(P, 0.0);
    cheb(2 * y - 1, n1_, T.data());
    for (int k = 0; k < n1_; ++k) dens[k] = wq * y * T[k];
    dens[iF] = wq * rho_fixed(y);
    double t = t_of(y);
    for (int a = 0; a <= iF; ++a) {
      piece_mass_[a] += dens[a];
      piece_phi_[a] += dens[a] * M_PI * t;
    }
    accumulate(pots(t * t), dens);
  }
  for (size_t q = 0; q < r.x.size(); ++q) {
    double y = r.x[q], wq = jac2(y) * r.w[q];
    std::vector<double> dens(P, 0.0);
    cheb(2 * y - 1, n2_, T.data());
    for (int k = 0; k < n2_; ++k) dens[iF + 1 + k] = wq * k0(y) * y * T[k];
    dens[iK] = wq * k0(y);
    for (int a = iF + 1; a <= iK; ++a) piece_mass_[a] += dens[a];
    double tau = tau_of(y);
    accumulate(pots(-tau * tau), dens);
  }
  Rule rs = gp(0, kTm);
  for (size_t q = 0; q < rs.x.size(); ++q) {
    std::vector<double> dens(P, 0.0);
    dens[iS] = rs.w[q];
    piece_mass_[iS] += rs.w[q];
    accumulate(pots(-rs.x[q] * rs.x[q]), dens);
  }
  for (int a = 0; a < P; ++a)
    for (int b = 0; b < a; ++b) {
      double m = 0.5 * (G_[static_cast<size_t>(a) * P + b] + G_[static_cast<size_t>(b) * P + a]);
      G_[static_cast<size_t>(a) * P + b] = G_[static_cast<size_t>(b) * P + a] = m;
    }
}

double ObjectiveJ::operator()(const std::vector<double>& c, const std::vector<double>& d, double s) const {
  if (static_cast<int>(c.size()) != n1_ || static_cast<int>(d.size()) != n2_)
    throw ArgumentError("ObjectiveJ: coefficient vectors have the wrong size");
  if (!(s > 0)) throw ArgumentError("ObjectiveJ: kernel scale must be positive");
  const int P = pieces_;
  std::vector<double> al(P, 0.0), be(P, 0.0);
  for (int k = 0; k < n1_; ++k) al[k] = c[k];
  al[n1_] = 1;
  for (int k = 0; k < n2_; ++k) be[n1_ + 1 + k] = d[k];
  be[n1_ + 1 + n2_] = 1;
  be[n1_ + 2 + n2_] = 1;
  auto E = [&](const std::vector<double>& u, const std::vector<double>& v) {
    double e = 0;
    for (int a = 0; a < P; ++a)
      if (u[a] != 0)
        for (int b = 0; b < P; ++b) e += u[a] * G_[static_cast<size_t>(a) * P + b] * v[b];
    return e;
  };
  double m1 = 0, m2 = 0, phi = 0;
  for (int a = 0; a < P; ++a) {
    m1 += al[a] * piece_mass_[a];
    m2 += be[a] * piece_mass_[a];
    phi += al[a] * piece_phi_[a];
  }
  const double ls = std::log(s);
  return 2 * E(al, al) - 2 * E(al, be) + 2 * E(be, be) + 2 * phi - ls * (2 * m1 * m1 - 2 * m1 * m2 + 2 * m2 * m2);
}

std::pair<double, double> ObjectiveJ::masses(const std::vector<double>& c, const std::vector<double>& d) const {
  double m1 = piece_mass_[n1_], m2 = piece_mass_[n1_ + 1 + n2_] + piece_mass_[n1_ + 2 + n2_];
  for (int k = 0; k < n1_; ++k) m1 += c[k] * piece_mass_[k];
  for (int k = 0; k < n2_; ++k) m2 += d[k] * piece_mass_[n1_ + 1 + k];
  return {m1, m2};
}

void ObjectiveJ::check_admissible(const std::vector<double>& c, const std::vector<double>& d) const {
  EquilibriumSolution probe;
  probe.c = c;
  probe.d = d;
  for (int i = 1; i < 400; ++i) {
    double y = i / 400.0;
    if (probe.rho(y) < 0) throw DomainError("candidate lambda_1 density is negative");
    double k = probe.kappa_y(y);
    if (k < 0) throw DomainError("candidate lambda_2 density is negative");
    if (k > 1) throw DomainError("candidate violates the constraint lambda_2 <= sigma");
  }
}

std::vector<double> ObjectiveJ::mass_free_direction(const std::vector<double>& raw) const {
  if (static_cast<int>(raw.size()) != n1_ + n2_) throw ArgumentError("mass_free_direction: wrong size");
  std::vector<double> v = raw;
  auto project = [&](int off, int len, int piece_off) {
    double num = 0, den = 0;
    for (int k = 0; k < len; ++k) {
      num += v[off + k] * piece_mass_[piece_off + k];
      den += piece_mass_[piece_off + k] * piece_mass_[piece_off + k];
    }
    for (int k = 0; k < len; ++k) v[off + k] -= num / den * piece_mass_[piece_off + k];
  };
  project(0, n1_, 0);
  project(n1_, n2_, n1_ + 1);
  return v;
}

}  // namespace nikishin
