#include "nikishin/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "nikishin/errors.hpp"

namespace nikishin {

namespace {

// N_11 on the first sheet: H(zeta_1) with the square root carried by the branch triple
BigComplex first_entry(const BranchTriple& br) {
  return GlobalParametrix::F(0, br.zeta[0], br.sqrtD[0]) / GlobalParametrix::r(0, br.zeta[0]);
}

BigFloat sqrt_abs_real(const BigFloat& x) { return sqrt(abs(x)); }

}  // namespace

BigComplex GlobalParametrix::r(int j, const BigComplex& zeta) {
  BigComplex two_z = zeta * 2.0;
  switch (j) {
    case 0:
      return sqrt(two_z) / sqrt(zeta + 1.0);
    case 1:
      return sqrt(two_z) / sqrt(zeta + 1.0) / 4.0;
    case 2: {
      BigComplex v = 1.0 / (sqrt(two_z) * sqrt(1.0 - zeta));
      return zeta.im.signbit() ? v : -v;
    }
    default:
      throw DomainError("GlobalParametrix::r: index out of range");
  }
}

BigComplex GlobalParametrix::F(int i, const BigComplex& zeta, const BigComplex& sqrtD) {
  const PrecCtx ctx = zeta.ctx();
  const BigComplex c = i_unit(ctx) / pow(sqrt(BigFloat(2L, ctx)), 3);
  switch (i) {
    case 0:
      return zeta * zeta / sqrtD;
    case 1:
      return c * zeta * (zeta - 1.0) / sqrtD;
    case 2:
      return c * (zeta * zeta - 1.0) / sqrtD;
    default:
      throw DomainError("GlobalParametrix::F: index out of range");
  }
}

Matrix3 GlobalParametrix::N_hat(const BigComplex& z, Side side) const {
  BranchTriple br = branches_at(z, side);
  Matrix3 out = zeros3(ctx_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = F(i, br.zeta[j], br.sqrtD[j]);
  return out;
}

std::array<BigComplex, 3> GlobalParametrix::f(const BigComplex& z, Side side) const {
  BranchTriple br = branches_at(z, side);
  return {r(0, br.zeta[0]), r(1, br.zeta[1]), r(2, br.zeta[2])};
}

Matrix3 GlobalParametrix::N(const BigComplex& z, Side side) const {
  BranchTriple br = branches_at(z, side);
  Matrix3 out = zeros3(ctx_);
  for (int j = 0; j < 3; ++j) {
    BigComplex fj = r(j, br.zeta[j]);
    for (int i = 0; i < 3; ++i) out[i][j] = F(i, br.zeta[j], br.sqrtD[j]) / fj;
  }
  return out;
}

BigComplex GlobalParametrix::det_hat(const BigComplex& z) const { return det3(N_hat(z)); }

BigFloat GlobalParametrix::jump_residual_band(const BigFloat& x) const {
  const BranchPoints bp = branch_points(ctx_);
  if (x <= 0.0 || x >= bp.p_plus) throw DomainError("jump_residual_band: x must lie in (0, p+)");
  BigComplex z(x);
  Matrix3 Np = N(z, Side::Plus), Nm = N(z, Side::Minus);
  Matrix3 J = zeros3(ctx_);
  J[0][1] = BigComplex(BigFloat(4L, ctx_));
  J[1][0] = BigComplex(BigFloat(-0.25, ctx_));
  J[2][2] = BigComplex(BigFloat(1L, ctx_));
  return max_abs_diff(Np, mul3(Nm, J));
}

BigFloat GlobalParametrix::jump_residual_tail(const BigFloat& x) const {
  const BranchPoints bp = branch_points(ctx_);
  if (x >= bp.p_minus) throw DomainError("jump_residual_tail: x must lie in (-inf, p-)");
  BigComplex z(x);
  Matrix3 Np = N(z, Side::Plus), Nm = N(z, Side::Minus);
  BigComplex sp(BigFloat(ctx_), sqrt_abs_real(x));  // x_+^{1/2}
  Matrix3 J = zeros3(ctx_);
  J[0][0] = BigComplex(BigFloat(1L, ctx_));
  J[1][2] = -1.0 / (sp * 2.0);
  J[2][1] = sp * 2.0;
  return max_abs_diff(Np, mul3(Nm, J));
}

BigFloat GlobalParametrix::infinity_residual(const BigComplex& z) const {
  Matrix3 Nz = N(z);
  BigComplex s = sqrt(z);
  Matrix3 Ainv = zeros3(ctx_);
  Ainv[0][0] = BigComplex(BigFloat(1L, ctx_));
  Ainv[1][1] = BigComplex(BigFloat(0.5, ctx_));
  Ainv[1][2] = 1.0 / (s * 2.0);
  Ainv[2][1] = -s;
  Ainv[2][2] = BigComplex(BigFloat(1L, ctx_));
  return max_abs_diff(mul3(Nz, Ainv), identity3(ctx_));
}

OuterResult outer_asymptotics(const TypeIISolution& Q, const BigComplex& z) {
  const PrecCtx ctx = z.ctx();
  const BranchPoints bp = branch_points(ctx);
  if (z.im.is_zero() && z.re >= 0.0 && z.re <= bp.p_plus)
    throw DomainError("outer_asymptotics: z lies on the support [0, p+]");
  BranchTriple br = branches_at(z, z.im.is_zero() ? Side::Plus : Side::None);
  OuterResult out{BigComplex(ctx), BigComplex(ctx), 0};
  out.prediction = exp(g1_exact(z, z.im.is_zero() ? Side::Plus : Side::None) * static_cast<double>(Q.n)) *
                   first_entry(br);
  out.actual = eval_by_zeros(Q.zeros, z);
  out.relerr = abs(out.actual / out.prediction - 1.0).to_double();
  return out;
}

namespace {

struct BandPieces {
  BigComplex lead, second;  // e^{n g1+} H(zeta_1+), (1 - upsilon^{-4n}) e^{n g1-} H(zeta_1-)
};

BandPieces band_pieces(int n, const BigFloat& x) {
  const PrecCtx ctx = x.ctx();
  BigComplex z(x);
  BranchTriple bp = branches_at(z, Side::Plus), bm = branches_at(z, Side::Minus);
  BigComplex gp = g1_exact(z, Side::Plus), gm = g1_exact(z, Side::Minus);
  BigFloat ups4n = exp(-const_pi(ctx) * sqrt(x) * (4.0 * n));
  return {exp(gp * static_cast<double>(n)) * first_entry(bp),
          exp(gm * static_cast<double>(n)) * first_entry(bm) * (1.0 - ups4n)};
}

}  // namespace

BandResult band_asymptotics(const TypeIISolution& Q, const BigFloat& x) {
  const PrecCtx ctx = x.ctx();
  const BranchPoints bp = branch_points(ctx);
  if (x <= 0.0 || x >= bp.p_plus) throw DomainError("band_asymptotics: x must lie in (0, p+)");
  BandPieces p = band_pieces(Q.n, x);
  BandResult out{p.lead + p.second, eval_by_zeros(Q.zeros, x), 0};
  out.scaled_error = (abs(out.prediction - BigComplex(out.actual)) / abs(p.lead)).to_double();
  return out;
}

int band_sign_changes(int n, double a, double b, int samples, PrecCtx ctx) {
  if (samples < 2 || !(a < b)) throw DomainError("band_sign_changes: need samples >= 2 and a < b");
  int changes = 0, prev = 0;
  for (int k = 0; k < samples; ++k) {
    BigFloat x(a + (b - a) * k / (samples - 1), ctx);
    BandPieces p = band_pieces(n, x);
    int s = (p.lead + p.second).re.sign();
    if (s != 0 && prev != 0 && s != prev) ++changes;
    if (s != 0) prev = s;
  }
  return changes;
}

DensityResult density_limit(const KernelCD& K, double x) {
  BigFloat xb(x, K.ctx());
  DensityResult out;
  out.kn_over_n = K.diag(xb).to_double() / K.n();
  out.lambda1 = lambda1_density_exact(xb).to_double();
  out.relerr = std::abs(out.kn_over_n / out.lambda1 - 1.0);
  return out;
}

SineResult sine_kernel_limit(const KernelCD& K, double x_star, double u, double v) {
  const PrecCtx ctx = K.ctx();
  const double l = lambda1_density_exact(BigFloat(x_star, ctx)).to_double();
  if (!(l > 0)) throw DomainError("sine_kernel_limit: x* must be interior to the band");
  const double scale = K.n() * l;
  BigFloat xs = BigFloat(x_star, ctx) + u / scale;
  BigFloat ys = BigFloat(x_star, ctx) + v / scale;
  const double d = u - v;
  SineResult out;
  if (std::abs(d) < 1e-14) {
    out.raw = out.scaled = K.diag(xs).to_double() / scale;
  } else {
    BigFloat kxy = K.cd(xs, ys), kyx = K.cd(ys, xs);
    out.raw = kxy.to_double() / scale;
    BigFloat prod = kxy * kyx;
    double mag = prod.sign() > 0 ? sqrt(prod).to_double() / scale : 0.0;
    out.scaled = kxy.sign() < 0 ? -mag : mag;
  }
  out.sinc = std::abs(d) < 1e-14 ? 1.0 : std::sin(M_PI * d) / (M_PI * d);
  out.abserr = std::abs(out.scaled - out.sinc);
  return out;
}

double nth_root_check(const TypeIISolution& Q, const BigComplex& z) {
  const BranchPoints bp = branch_points(z.ctx());
  const bool on_real = z.im.is_zero();
  if (on_real && z.re >= 0.0 && z.re <= bp.p_plus) throw DomainError("nth_root_check: z lies on the support");
  BigComplex g = g1_exact(z, on_real && z.re < 0.0 ? Side::Plus : Side::None);
  BigFloat lq = log(abs(eval_by_zeros(Q.zeros, z))) / static_cast<double>(Q.n);
  return abs(lq - g.re).to_double();
}

double ks_distance(const std::vector<BigFloat>& zeros, const EquilibriumSolution& sol) {
  std::vector<double> xs;
  xs.reserve(zeros.size());
  for (const auto& z : zeros) xs.push_back(std::clamp(z.to_double(), 0.0, sol.p_plus));
  std::sort(xs.begin(), xs.end());
  const double N = static_cast<double>(xs.size());
  const double total = sol.mass1_above(0.0);
  double ks = 0;
  for (size_t k = 0; k < xs.size(); ++k) {
    double F = 1.0 - sol.mass1_above(xs[k]) / total;
    ks = std::max({ks, std::abs(k / N - F), std::abs((k + 1) / N - F)});
  }
  return ks;
}

std::string to_string(Target t) {
  switch (t) {
    case Target::Outer:
      return "outer";
    case Target::BandTwoTerm:
      return "band";
    case Target::Density:
      return "density";
    case Target::SineKernel:
      return "sine";
  }
  return "?";
}

double fit_rate(const std::vector<ConvergenceSample>& samples) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& s : samples) {
    if (!(s.error > 0) || s.n <= 0) continue;
    double lx = std::log(static_cast<double>(s.n)), ly = std::log(s.error);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m < 2) return 0;
  double den = m * sxx - sx * sx;
  if (den == 0) return 0;
  return -(m * sxy - sx * sy) / den;
}

PrecCtx precision_for(int n, unsigned base_bits) { return PrecCtx(base_bits + 48u * static_cast<unsigned>(std::max(n, 0))); }

}  // namespace nikishin
