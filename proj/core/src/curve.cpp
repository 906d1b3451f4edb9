#include "nikishin/curve.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace nikishin {

namespace {

using cd = std::complex<double>;

constexpr double kAnchor = 1e6;

cd cubic(cd z, cd x) { return ((z * x - z) * x + 1.0) * x + 1.0; }
cd cubic_prime(cd z, cd x) { return (3.0 * z * x - 2.0 * z) * x + 1.0; }
cd D(cd x) { return x * (x * x + x - 1.0); }

BigComplex cubic(const BigComplex& z, const BigComplex& x) { return ((z * x - z) * x + 1.0) * x + 1.0; }
BigComplex cubic_prime(const BigComplex& z, const BigComplex& x) {
  return (z * x * 3.0 - z * 2.0) * x + 1.0;
}

struct Track {
  std::array<cd, 3> r;
  std::array<cd, 3> s;  // D(r_j)^{1/2}
};

bool newton(cd z, cd& x) {
  for (int it = 0; it < 40; ++it) {
    cd dx = cubic(z, x) / cubic_prime(z, x);
    x -= dx;
    if (!std::isfinite(std::abs(x))) return false;
    if (std::abs(dx) <= 1e-14 * (1.0 + std::abs(x))) return true;
  }
  return false;
}

double gap(const std::array<cd, 3>& r) {
  return std::min({std::abs(r[0] - r[1]), std::abs(r[0] - r[2]), std::abs(r[1] - r[2])});
}

cd follow_sign(cd sp, cd prev) { return std::abs(sp - prev) <= std::abs(sp + prev) ? sp : -sp; }

bool step(cd z, const Track& old, Track& out) {
  const double g = gap(old.r);
  for (int j = 0; j < 3; ++j) {
    cd x = old.r[j];
    if (!newton(z, x)) return false;
    if (std::abs(x - old.r[j]) >= g / 4) return false;
    cd sp = std::sqrt(D(x));
    // the square root must move by less than its own size for the sign to be unambiguous
    if (std::min(std::abs(sp - old.s[j]), std::abs(sp + old.s[j])) > 0.25 * std::abs(old.s[j])) return false;
    out.r[j] = x;
    out.s[j] = follow_sign(sp, old.s[j]);
  }
  return gap(out.r) > 0;
}

void follow_segment(cd a, cd b, Track& st) {
  double t = 0, h = 1.0 / 16;
  while (t < 1) {
    double tn = std::min(1.0, t + h);
    Track nx;
    if (step(a + (b - a) * tn, st, nx)) {
      st = nx;
      t = tn;
      h = std::min(0.25, 2 * h);
    } else {
      h /= 2;
      if (h < 1e-14) throw BranchError("branches_at: continuation stalled (too close to a branch point?)");
    }
  }
}

// sqrt with its cut on the positive imaginary axis
cd sqrt_upcut(cd x) {
  double th = std::arg(x);
  if (th > M_PI / 2) th -= 2 * M_PI;
  return std::polar(std::sqrt(std::abs(x)), th / 2);
}

Track anchor(cd A) {
  cd w = 1.0 / std::sqrt(A);
  Track st;
  st.r[0] = 1.0 - 2.0 / A - 6.0 / (A * A);
  st.r[1] = w + 1.0 / A + 1.5 * w * w * w;
  st.r[2] = -w + 1.0 / A - 1.5 * w * w * w;
  for (auto& x : st.r)
    if (!newton(A, x)) throw BranchError("branches_at: anchor polish failed");
  st.s[0] = std::sqrt(D(st.r[0]));
  for (int j = 1; j < 3; ++j) st.s[j] = cd(0, -1) * sqrt_upcut(st.r[j]) * std::sqrt(1.0 - st.r[j] - st.r[j] * st.r[j]);
  return st;
}

Track follow(const std::vector<cd>& path) {
  Track st = anchor(path.front());
  for (size_t k = 1; k < path.size(); ++k) follow_segment(path[k - 1], path[k], st);
  return st;
}

}  // namespace

BranchPoints branch_points(PrecCtx ctx) {
  BigFloat s5 = sqrt(BigFloat(5L, ctx));
  BigFloat phi_inv = (s5 - 1.0) / 2.0;  // (sqrt5 - 1)/2
  BranchPoints bp{pow(1.0 / phi_inv, 5), -pow(phi_inv, 5), phi_inv, (-1.0 - s5) / 2.0};
  return bp;
}

BigComplex forward_map(const BigComplex& zeta) {
  BigFloat a = abs(zeta), b = abs(zeta - 1.0);
  if (a.is_zero() || b.is_zero()) throw DomainError("forward_map: pole at zeta = 0 or 1");
  return (zeta + 1.0) / (zeta * zeta * (1.0 - zeta));
}

BigComplex forward_map_derivative(const BigComplex& zeta) {
  BigFloat a = abs(zeta), b = abs(zeta - 1.0);
  if (a.is_zero() || b.is_zero()) throw DomainError("forward_map_derivative: pole at zeta = 0 or 1");
  BigComplex om = 1.0 - zeta;
  return (zeta * zeta + zeta - 1.0) * 2.0 / (pow(zeta, 3) * om * om);
}

std::array<BigComplex, 3> branch_series(const BigComplex& z) {
  BigComplex w = 1.0 / sqrt(z);
  BigComplex iz = 1.0 / z;
  BigComplex w3 = w * w * w, w5 = w3 * w * w;
  BigComplex even = iz + iz * iz * 3.0;
  BigComplex odd = w + w3 * 1.5 + w5 * (55.0 / 8.0);
  return {1.0 - iz * 2.0 - iz * iz * 6.0, even + odd, even - odd};
}

BranchTriple branches_at(const BigComplex& z, Side side) {
  const PrecCtx ctx = z.ctx();
  const BranchPoints bp = branch_points(ctx);
  const double prox = 10.0 * std::ldexp(1.0, -static_cast<int>(ctx.bits / 2));
  for (const BigFloat* p : {&bp.p_plus, &bp.p_minus}) {
    if (abs(z - *p) < prox) throw BranchError("branches_at: z is a branch point");
  }
  if (abs(z) < prox) throw BranchError("branches_at: z is a branch point");

  const bool real = z.im.is_zero();
  const bool on_cut = real && ((z.re >= 0.0 && z.re <= bp.p_plus) || z.re <= bp.p_minus);
  if (on_cut && side == Side::None) throw BranchError("branches_at: z on a cut requires a side");
  if (!on_cut) side = real ? side : Side::None;

  double sgn = z.im.sign() != 0 ? (z.im.sign() > 0 ? 1.0 : -1.0) : (side == Side::Minus ? -1.0 : 1.0);
  const cd zd = z.to_complex();
  cd target = zd;
  if (on_cut) target = cd(zd.real(), sgn * 1e-7 * std::max(1.0, std::abs(zd.real())));
  const double h1 = std::max(std::abs(zd.imag()), 1.0);

  Track t1 = follow({cd(0, sgn * kAnchor), cd(zd.real(), sgn * h1), target});
  Track t2 = follow({cd(kAnchor, 0), cd(kAnchor, sgn * 2 * h1), cd(zd.real(), sgn * 2 * h1), target});
  const double g = gap(t1.r);
  for (int j = 0; j < 3; ++j) {
    if (std::abs(t1.r[j] - t2.r[j]) > 1e-3 * g || std::abs(t1.s[j] - t2.s[j]) > 1e-3 * std::abs(t1.s[j]))
      throw BranchError("branches_at: continuation paths disagree; refine the path");
  }

  BranchTriple out{z, {BigComplex(ctx), BigComplex(ctx), BigComplex(ctx)},
                   {BigComplex(ctx), BigComplex(ctx), BigComplex(ctx)}, true, side};
  const BigFloat tol = ldexp_one(-static_cast<long>(ctx.bits) + 6, ctx);
  const BigFloat loose = ldexp_one(-static_cast<long>(ctx.bits) / 2, ctx);
  for (int j = 0; j < 3; ++j) {
    BigComplex x(t1.r[j], ctx);
    bool done = false;
    BigFloat prev_step(ctx);
    for (int it = 0; it < 200 && !done; ++it) {
      BigComplex dx = cubic(z, x) / cubic_prime(z, x);
      x -= dx;
      BigFloat step = abs(dx);
      // near a branch point the root is ill-conditioned and the step stalls at rounding level
      done = step <= tol * (1.0 + abs(x)) || (it > 0 && step <= loose * (1.0 + abs(x)) && step * 2.0 >= prev_step);
      prev_step = step;
    }
    if (!done) throw ConvergenceError("branches_at: Newton polish failed", std::abs(t1.r[j]));
    if (std::abs(x.to_complex() - t1.r[j]) > g / 4)
      throw BranchError("branches_at: polished root left its label");
    out.zeta[j] = x;
    BigComplex sp = sqrt(x * (x * x + x - 1.0));
    out.sqrtD[j] = std::abs(sp.to_complex() - t1.s[j]) <= std::abs(sp.to_complex() + t1.s[j]) ? sp : -sp;
  }
  return out;
}

BigComplex eval_H(const BigComplex& zeta) {
  const PrecCtx ctx = zeta.ctx();
  const BranchPoints bp = branch_points(ctx);
  if (abs(zeta.im) < 1e-10 && zeta.re <= bp.q_plus + 1e-10) throw BranchError("eval_H: zeta on the cut (-inf, q+]");
  // each factor uses the principal root; the product is analytic off (-inf,q-] u [-1,q+]
  BigComplex num = sqrt(zeta + 1.0);
  BigComplex den = sqrt(zeta - bp.q_plus) * sqrt(zeta - bp.q_minus);
  return zeta * num / (den * sqrt(BigFloat(2L, ctx)));
}

}  // namespace nikishin
