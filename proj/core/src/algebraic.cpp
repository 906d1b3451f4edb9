// Closed-form equilibrium quantities on the spectral curve.  With u = sqrt z and
// zeta_1 the first branch,
//   g1(z) = 2 Log(2 zeta_1/(1 - zeta_1)) - 2 i u Log((u zeta_1 + i)/(u zeta_1 - i)) - 4   (mod 2 pi i)
// and on the band g2 is the analogous expression in zeta_3.  The 2 pi i
// ambiguity is removed using the range of Im g_j = int arg(z - t) d lambda_j.

#include <cmath>

#include "nikishin/curve.hpp"
#include "nikishin/equilibrium.hpp"
#include "nikishin/roots.hpp"

namespace nikishin {

namespace {

// arg of a real number with the side deciding the sign of pi
BigFloat side_arg(const BigComplex& w, Side side) {
  if (w.im.is_zero() && w.re < 0.0) {
    BigFloat pi = const_pi(w.ctx());
    return side == Side::Minus ? -pi : pi;
  }
  return arg(w);
}

void fix_branch(BigComplex& v, const BigFloat& lo, const BigFloat& hi) {
  const PrecCtx ctx = v.ctx();
  BigFloat twopi = const_pi(ctx) * 2.0;
  BigFloat mid = (lo + hi) / 2.0;
  double k = std::round(((mid - v.im) / twopi).to_double());
  v.im += twopi * k;
}

}  // namespace

BigComplex g1_exact(const BigComplex& z, Side side) {
  const PrecCtx ctx = z.ctx();
  const BranchPoints bp = branch_points(ctx);
  const bool real = z.im.is_zero();
  if (real && z.re <= bp.p_plus && side == Side::None)
    throw BranchError("g1_exact: real z in (-inf, p+] requires a side");
  if (!real || z.re > bp.p_plus) side = real ? Side::None : side;

  BranchTriple br = branches_at(z, real ? (side == Side::None ? Side::Plus : side) : Side::None);
  const BigComplex& zeta = br.zeta[0];
  BigComplex u(ctx);
  if (real && z.re < 0.0) {
    BigFloat r = sqrt(-z.re);
    u = BigComplex(BigFloat(ctx), side == Side::Minus ? -r : r);
  } else {
    u = sqrt(z);
  }
  BigComplex I = i_unit(ctx);
  BigComplex W = u * zeta;
  BigComplex v = log(zeta * 2.0 / (1.0 - zeta)) * 2.0 - I * u * log((W + I) / (W - I)) * 2.0 - 4.0;
  fix_branch(v, side_arg(z, side) * 2.0, side_arg(z - bp.p_plus, side) * 2.0);
  return v;
}

BigComplex g2_exact(const BigFloat& x) {
  const PrecCtx ctx = x.ctx();
  const BranchPoints bp = branch_points(ctx);
  if (x <= 0.0 || x >= bp.p_plus) throw DomainError("g2_exact: x must lie in (0, p+)");
  BranchTriple br = branches_at(x, Side::Plus);
  const BigComplex& zeta = br.zeta[2];
  BigComplex u(sqrt(x));
  BigComplex I = i_unit(ctx);
  BigComplex W = u * zeta;
  BigComplex X2 = (W + I) / (W - I);
  const BigFloat pi = const_pi(ctx);
  BigComplex v = I * u * (log(-X2) - I * pi) * 2.0 - log(zeta * 2.0 / (1.0 - zeta)) * 2.0 - u * pi - 2.0 +
                 const_log2(ctx) * 2.0;
  fix_branch(v, BigFloat(ctx), BigFloat(ctx));
  return v;
}

BigFloat lambda1_density_exact(const BigFloat& x) {
  const PrecCtx ctx = x.ctx();
  const BranchPoints bp = branch_points(ctx);
  if (x <= 0.0 || x >= bp.p_plus) return BigFloat(ctx);
  BranchTriple br = branches_at(x, Side::Plus);
  BigFloat s = sqrt(x);
  BigComplex W = br.zeta[0] * s;
  BigComplex I = i_unit(ctx);
  return log(abs((W + I) / (W - I))) / (const_pi(ctx) * s);
}

BigFloat kappa_exact(const BigFloat& tau) {
  const PrecCtx ctx = tau.ctx();
  const BigFloat tm = sqrt(-branch_points(ctx).p_minus);
  if (tau < 0.0) throw DomainError("kappa_exact: tau must be nonnegative");
  if (tau <= tm) return BigFloat(1L, ctx);
  // V^3 - (3+u) V^2 + (4+2u) V - 2 with u = i tau; the root of smallest modulus
  BigComplex u(BigFloat(ctx), tau);
  std::vector<BigComplex> coeffs{BigComplex(BigFloat(-2L, ctx)), u * 2.0 + 4.0, -(u + 3.0),
                                 BigComplex(BigFloat(1L, ctx))};
  auto roots = roots_all(coeffs, ctx);
  size_t best = 0;
  for (size_t k = 1; k < roots.size(); ++k)
    if (abs(roots[k]) < abs(roots[best])) best = k;
  const BigComplex& V = roots[best];
  BigComplex I = i_unit(ctx);
  BigComplex iX = 1.0 + (I - 1.0) * V / (V - 1.0 - I);
  return -arg(iX) * 2.0 / const_pi(ctx);
}

BigFloat omega_exact(PrecCtx ctx) { return 6.0 - const_log2(ctx) * 2.0; }

}  // namespace nikishin
