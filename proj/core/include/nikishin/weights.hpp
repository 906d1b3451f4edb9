#pragma once

#include <vector>

#include "nikishin/bigfloat.hpp"
#include "nikishin/rational.hpp"

namespace nikishin {

// w_{1,n}(z) = 1/sinh(pi n sqrt z), w_{2,n}(z) = 1/(sqrt z cosh(pi n sqrt z)).
struct RescaledWeights {
  explicit RescaledWeights(int n);
  int n;
};

struct MomentTable {
  int n = 1;
  int j = 1;
  RatVector values;  // values[k] = int_0^inf x^k w_{j,n}(x) dx
};

// sigma_2 = (4/pi) sum_k delta_{-(2k+1)^2}; sigma_{2,n} has atoms -((2k+1)/(2n))^2.
// The mass factor is stored as mass_scale * pi^pi_exponent.
struct DiscreteMeasure {
  Rational mass_scale{4};
  int pi_exponent = -1;
  int n = 0;  // 0 for sigma_2 itself
  Rational atom(long k) const;
};

DiscreteMeasure sigma2();
DiscreteMeasure sigma2n(int n);

// Principal branch of sqrt; throws BranchError on the closed negative axis.
BigComplex eval_w(int j, int n, const BigComplex& z);
BigFloat eval_w(int j, int n, const BigFloat& x);
BigComplex eval_upsilon(const BigComplex& z);

struct RelationsWReport {
  BigFloat sum_identity;        // max over signs of |w1 +- sqrt(z) w2 - 4 u^{+-n}/(u^{2n}-u^{-2n})|
  BigFloat reciprocal_identity; // max over signs of |1/w1 +- 1/(sqrt(z) w2) -+ u^{+-n}|
};
RelationsWReport check_relationsW(int n, const BigComplex& z);

// Exact moments from the zeta/beta closed forms.
MomentTable moments(int j, int n, int k_max);
// Closed-form single moment (cached per j,k at n = 1, then scaled).
Rational moment(int j, int n, int k);
// Quadrature oracle for a single moment, computed at ctx precision.
BigFloat moment_quadrature(int j, int n, int k, PrecCtx ctx);

// |tanh(pi sqrt z / 2)/sqrt z - (4/pi) sum_{k<K} 1/(z+(2k+1)^2)|
BigFloat tanh_partial_fractions_check(const BigComplex& z, long K);

}  // namespace nikishin
