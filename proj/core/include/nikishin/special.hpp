#pragma once

#include "nikishin/rational.hpp"

namespace nikishin {

// B_m for even m >= 2
Rational bernoulli(int m);
// E_m for even m >= 0.
Rational euler_number(int m);
// zeta(s) / pi^s for even s >= 2
Rational zeta_even(int s);
// beta(s) / pi^s for odd s >= 1, beta the Dirichlet beta function
Rational beta_odd(int s);

}  // namespace nikishin
