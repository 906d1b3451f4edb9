#pragma once

#include <complex>
#include <string>
#include <vector>

#include "nikishin/bigfloat.hpp"
#include "nikishin/matrix3.hpp"

namespace nikishin {

// Discretized solution of the constrained vector equilibrium problem with
// supports fixed at [0, p+] (lambda_1) and (-inf, 0] (lambda_2, saturating
// sigma on [p-, 0]).
//
// Variables: lambda_1 is stored as a density rho in t = sqrt x, with
// t = T(1 - y^2), T = sqrt p+; lambda_2 on (-inf, p-] as a density kappa in
// tau = sqrt|x| with tau = tau_- / (1 - y^2).  sigma has density 1 in tau.
//   rho(y)   = -(2/pi) log(1 - y^2) + y sum_k c_k T_k(2y - 1)
//   kappa(y) = (1-y)^2 + (1-y)^2 y sum_k d_k T_k(2y - 1)
// Everything here is double precision.
class EquilibriumSolution {
 public:
  int n1 = 0, n2 = 0;
  std::vector<double> c, d;
  double omega = 0;         // least-squares unknown
  double mass1 = 0, mass2 = 0;
  double residual_sup = 0;  // over the collocation rows of both equations
  double condition = 0;     // singular value ratio of the collocation matrix
  double p_plus = 0, p_minus = 0;

  double rho(double y) const;
  double kappa_y(double y) const;

  // lambda_1'(x) on (0, p+)
  double lambda1_density(double x) const;
  // density of lambda_2 in tau = sqrt|x|: 1 on [0, tau_-], kappa beyond
  double kappa(double tau) const;
  // lambda_2'(x), x < 0, and (sigma - lambda_2)'(x)
  double lambda2_density(double x) const;
  double nu_density(double x) const;

  // P^{lambda_j}(x) = -int log|x - t| d lambda_j(t), any real x
  double potential(int j, double x) const;
  // 2P1 - P2 + pi sqrt x - omega  (x >= 0)  and  2P2 - P1  (x <= 0)
  double eq1_residual(double x) const;
  double eq2_value(double x) const;

  // lambda_1([x, p+]) for x in [0, p+];  lambda_2([x, 0]) for x <= 0
  double mass1_above(double x) const;
  double mass2_between(double x) const;
  // (sigma - lambda_2)([x, p-]) for x <= p-
  double nu_mass_between(double x) const;

  // g_j(z) = int log(z - t) d lambda_j(t), principal log.  Real z on a
  // support requires a side.
  std::complex<double> g(int j, std::complex<double> z, Side side = Side::None) const;
};

struct EquilibriumOptions {
  int m1 = 48, m2 = 48;
  double tol = 1e-8;
};

// Throws ConvergenceError when the collocation residual or the mass errors
// exceed tol.
EquilibriumSolution solve_equilibrium(const EquilibriumOptions& opt = {});

// Direct evaluations of omega = 2P1 - P2 + pi sqrt x at interior band points.
std::vector<double> omega_samples(const EquilibriumSolution& sol, const std::vector<double>& xs);

// psi_{+-}(x) on (0, p+), psi from e^psi = upsilon exp(-2 g1 + g2 - omega)
// elsewhere, and psi-hat on (-inf, p-].
std::complex<double> eval_psi(const EquilibriumSolution& sol, std::complex<double> z, Side side = Side::None);
std::complex<double> eval_psi_hat(const EquilibriumSolution& sol, double x);

struct SummaryGReport {
  double i_equality = 0;     // max |exp(g1+ + g1- - g2 + omega)/upsilon - 1| on the band
  double i_margin = 0;       // min (1 - ratio) beyond p+ (should be > 0)
  double ii_equality = 0;    // max |exp(g2+ + g2- - g1) - 1| on (-inf, p-)
  double ii_margin = 0;      // min (value - 1) on (p-, 0] (should be > 0)
  double iii_equality = 0;   // max |exp(g2+ - g2-) - upsilon_+^2| on [p-, 0]
  double iv_equality = 0;    // max |Im(g1+ - g1-) - 2 pi lambda_1([x,p+])|
  double v_deviation = 0;    // max |finite-difference derivative - 2 pi (lambda_2' - sigma')|, relative
  double v_max = 0;          // largest derivative value on R_- (should be <= 0)
  double vi_margin = 0;      // min log|e^{2g2-g1} upsilon^-2| on the strip sample (should be > 0)
  std::vector<std::string> violations;
};
SummaryGReport verify_summaryG(const EquilibriumSolution& sol, double tol = 1e-6);

// J(mu) = int (W^mu + f) . d mu for mu = (lambda_1, lambda_2) parametrized by
// coefficient vectors (c, d) of the same basis as the solution.  kernel_scale
// s replaces log 1/|x-y| by log 1/(s|x-y|).
class ObjectiveJ {
 public:
  explicit ObjectiveJ(const EquilibriumSolution& sol);
  double operator()(const std::vector<double>& c, const std::vector<double>& d, double kernel_scale = 1.0) const;
  // masses of the candidate
  std::pair<double, double> masses(const std::vector<double>& c, const std::vector<double>& d) const;
  // throws DomainError if rho < 0, kappa < 0 or kappa > 1 on the check grid
  void check_admissible(const std::vector<double>& c, const std::vector<double>& d) const;
  // directions in coefficient space preserving both masses
  std::vector<double> mass_free_direction(const std::vector<double>& raw) const;
  int n1() const { return n1_; }
  int n2() const { return n2_; }

 private:
  int n1_, n2_;
  // pieces: basis1 (n1), fixed rho, basis2 (n2), fixed kappa, sigma on [p-, 0]
  int pieces_;
  std::vector<double> G_;  // G[a][b] = int P^{a} d(b), symmetrized
  std::vector<double> piece_mass_, piece_phi_;
};

// Closed-form (algebraic) description of the same solution, evaluated on the
// spectral curve at arbitrary precision.
BigComplex g1_exact(const BigComplex& z, Side side = Side::None);
// band points only (x in (0, p+)), where g2 is real
BigComplex g2_exact(const BigFloat& x);
BigFloat lambda1_density_exact(const BigFloat& x);
BigFloat kappa_exact(const BigFloat& tau);
BigFloat omega_exact(PrecCtx ctx);  // 6 - 2 log 2

}  // namespace nikishin
