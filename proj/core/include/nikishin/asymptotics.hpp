#pragma once

#include <string>
#include <vector>

#include "nikishin/curve.hpp"
#include "nikishin/equilibrium.hpp"
#include "nikishin/matrix3.hpp"
#include "nikishin/mop.hpp"

namespace nikishin {

// Global parametrix N = Nhat diag(1/f_1, 1/f_2, 1/f_3), Nhat_ij = F_i(zeta_j(z)).
// F_i(zeta) = P_i(zeta) / D(zeta)^{1/2} with D = zeta(zeta^2+zeta-1) and the
// square root continued along the branch-labelling path.
class GlobalParametrix {
 public:
  explicit GlobalParametrix(PrecCtx ctx) : ctx_(ctx) {}

  Matrix3 N(const BigComplex& z, Side side = Side::None) const;
  Matrix3 N_hat(const BigComplex& z, Side side = Side::None) const;
  std::array<BigComplex, 3> f(const BigComplex& z, Side side = Side::None) const;
  BigComplex det_hat(const BigComplex& z) const;

  // r_j(zeta) with principal roots (r_3 picks its sign from the half plane of zeta)
  static BigComplex r(int j, const BigComplex& zeta);
  // F_i given zeta and the continued D(zeta)^{1/2}
  static BigComplex F(int i, const BigComplex& zeta, const BigComplex& sqrtD);

  // max |N_+ - N_- J| on (0, p+) and on (-inf, p-)
  BigFloat jump_residual_band(const BigFloat& x) const;
  BigFloat jump_residual_tail(const BigFloat& x) const;
  // max |N(z) diag(1, A_L(z))^{-1} - I|
  BigFloat infinity_residual(const BigComplex& z) const;

  PrecCtx ctx() const { return ctx_; }

 private:
  PrecCtx ctx_;
};

struct OuterResult {
  BigComplex prediction, actual;
  double relerr = 0;
};
// Q_n(z) against e^{n g1(z)} H(zeta_1(z)) away from [0, p+].
OuterResult outer_asymptotics(const TypeIISolution& Q, const BigComplex& z);

struct BandResult {
  BigComplex prediction;  // imaginary part should vanish
  BigFloat actual;
  double scaled_error = 0;  // |Q - prediction| / (|e^{n g1+}| |H(zeta_1+)|)
};
// Two-term formula e^{n g1+} H(zeta_1+) + (1 - upsilon^{-4n}) e^{n g1-} H(zeta_1-).
BandResult band_asymptotics(const TypeIISolution& Q, const BigFloat& x);
// number of sign changes of the band prediction on a uniform grid over [a, b]
int band_sign_changes(int n, double a, double b, int samples, PrecCtx ctx);

struct DensityResult {
  double kn_over_n = 0, lambda1 = 0, relerr = 0;
};
DensityResult density_limit(const KernelCD& K, double x);

struct SineResult {
  double scaled = 0, sinc = 0, abserr = 0;
  double raw = 0;  // unsymmetrized (1/(n l)) K_n(x_n, y_n)
};
// (1/(n l)) K_n(x* + u/(n l), x* + v/(n l)), l = lambda_1'(x*).  K_n(x, y)
// carries a factor e^{n (G(y) - G(x))} with G = Re g1 that is O(1) on this
// scale and cancels in every correlation function, so `scaled` is the
// conjugation-free combination sign(K(x,y)) sqrt(K(x,y) K(y,x)).
SineResult sine_kernel_limit(const KernelCD& K, double x_star, double u, double v);

// |(1/n) log|Q_n(z)| + P^{lambda_1}(z)|
double nth_root_check(const TypeIISolution& Q, const BigComplex& z);

// Kolmogorov-Smirnov distance between the normalized zero counting measure
// and lambda_1 / 2.
double ks_distance(const std::vector<BigFloat>& zeros, const EquilibriumSolution& sol);

enum class Target { Outer, BandTwoTerm, Density, SineKernel };
std::string to_string(Target t);

struct ConvergenceSample {
  int n = 0;
  std::string location;
  double error = 0;
};

struct ConvergenceReport {
  Target target = Target::Outer;
  std::vector<ConvergenceSample> samples;
  double fitted_rate = 0;  // -slope of log(error) against log(n)
};
double fit_rate(const std::vector<ConvergenceSample>& samples);

// Working precision used for the n-th kernel and polynomial evaluations.
PrecCtx precision_for(int n, unsigned base_bits = 256);

}  // namespace nikishin
