#pragma once

#include <array>

#include "nikishin/bigfloat.hpp"
#include "nikishin/matrix3.hpp"

namespace nikishin {

// z = (1+zeta)/(zeta^2 (1-zeta)), cleared: z zeta^3 - z zeta^2 + zeta + 1 = 0.
struct BranchTriple {
  BigComplex z;
  std::array<BigComplex, 3> zeta;
  // D(zeta_j)^{1/2}, D(zeta) = zeta(zeta^2+zeta-1), sign continued along the same path
  std::array<BigComplex, 3> sqrtD;
  bool certified = false;
  Side side = Side::None;
};

struct BranchPoints {
  BigFloat p_plus, p_minus, q_plus, q_minus;
};

BranchPoints branch_points(PrecCtx ctx);

BigComplex forward_map(const BigComplex& zeta);
// dz/dzeta = 2 zeta (zeta^2+zeta-1) / (zeta^3 (1-zeta)^2)
BigComplex forward_map_derivative(const BigComplex& zeta);

// Labeled roots at z.  On the cuts ([0,p+] for zeta_1,2 and (-inf,p-] for
// zeta_2,3) a side is required; the returned values are the boundary values.
BranchTriple branches_at(const BigComplex& z, Side side = Side::None);
inline BranchTriple branches_at(const BigFloat& x, Side side) { return branches_at(BigComplex(x), side); }

// Truncated large-z expansions of the three branches.
std::array<BigComplex, 3> branch_series(const BigComplex& z);

// H(zeta) = (zeta/sqrt 2) ((1+zeta)/(zeta^2+zeta-1))^{1/2}, H(1) = 1, cut (-inf, q+].
BigComplex eval_H(const BigComplex& zeta);

}  // namespace nikishin
