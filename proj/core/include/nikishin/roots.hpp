#pragma once

#include <vector>

#include "nikishin/bigfloat.hpp"

namespace nikishin {

// All roots of sum_k coeffs[k] z^k by Aberth-Ehrlich simultaneous iteration.
// A double-precision pass seeds the working-precision pass.  Throws
// ConvergenceError (carrying the worst scaled residual) if the final residual
// test |p(z)| <= 2^{-bits/2} * sum |a_k||z|^k fails.
std::vector<BigComplex> roots_all(const std::vector<BigComplex>& coeffs, PrecCtx ctx, int max_iter = 400);

}  // namespace nikishin
