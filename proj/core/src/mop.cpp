#include "nikishin/mop.hpp"

#include <algorithm>
#include <cmath>

#include "nikishin/quadrature.hpp"
#include "nikishin/roots.hpp"
#include "nikishin/weights.hpp"

namespace nikishin {

MomentData moment_data(int n, int k_max) {
  MomentData md;
  md.n = n;
  md.m1 = moments(1, n, k_max).values;
  md.m2 = moments(2, n, k_max).values;
  return md;
}

namespace {

void need_moments(const MomentData& md, int k) {
  if (static_cast<int>(md.m1.size()) <= k || static_cast<int>(md.m2.size()) <= k)
    throw ArgumentError("moment table too short: need index " + std::to_string(k));
}

double log_abs(const Rational& q) {
  if (q == 0) return -1e300;
  long e1, e2;
  double a = mpz_get_d_2exp(&e1, q.get_num_mpz_t());
  double b = mpz_get_d_2exp(&e2, q.get_den_mpz_t());
  return std::log(std::fabs(a / b)) + (e1 - e2) * std::log(2.0);
}

// smallest U with  deg*log U + logc - pi n U < -target
double tail_cutoff(int n, int deg, double logc, double target) {
  double U = 1.0;
  while (deg * std::log(U) + logc - M_PI * n * U > -target) U *= 1.1;
  return U;
}

}  // namespace

MonicPolynomial type_ii(const MomentData& md, int n1, int n2) {
  const int d = n1 + n2;
  if (n1 < 0 || n2 < 0 || d == 0) throw ArgumentError("type_ii: need a nonzero multi-index");
  need_moments(md, std::max(n1, n2) - 1 + d);
  RatMatrix A;
  RatVector b;
  for (int j = 1; j <= 2; ++j) {
    const int nj = j == 1 ? n1 : n2;
    for (int k = 0; k < nj; ++k) {
      RatVector row;
      for (int i = 0; i < d; ++i) row.push_back(md.m(j, k + i));
      A.push_back(std::move(row));
      b.push_back(-md.m(j, k + d));
    }
  }
  RatVector c;
  try {
    c = solve_linear_exact(A, b);
  } catch (const SingularMatrix& e) {
    throw SingularMatrix("type_ii: multi-index (" + std::to_string(n1) + "," + std::to_string(n2) +
                             ") is not normal",
                         e.rank);
  }
  c.push_back(Rational(1));
  return MonicPolynomial(c);
}

TypeIForm type_i(const MomentData& md, int n1, int n2) {
  const int d = n1 + n2;
  if (n1 < 0 || n2 < 0 || d == 0) throw ArgumentError("type_i: need a nonzero multi-index");
  need_moments(md, d - 1 + std::max(n1, n2) - 1);
  RatMatrix A;
  RatVector b;
  for (int k = 0; k < d; ++k) {
    RatVector row;
    for (int i = 0; i < n1; ++i) row.push_back(md.m(1, k + i));
    for (int i = 0; i < n2; ++i) row.push_back(md.m(2, k + i));
    A.push_back(std::move(row));
    b.push_back(Rational(k == d - 1 ? 1 : 0));
  }
  RatVector a;
  try {
    a = solve_linear_exact(A, b);
  } catch (const SingularMatrix& e) {
    throw SingularMatrix("type_i: multi-index (" + std::to_string(n1) + "," + std::to_string(n2) +
                             ") is not normal",
                         e.rank);
  }
  TypeIForm f;
  f.n1 = n1;
  f.n2 = n2;
  f.A1 = RatPoly(RatVector(a.begin(), a.begin() + n1));
  f.A2 = RatPoly(RatVector(a.begin() + n1, a.end()));
  return f;
}

Rational weighted_integral(const MomentData& md, const RatPoly& P, int j, int k) {
  Rational s(0);
  for (size_t i = 0; i < P.coeffs().size(); ++i) s += P[i] * md.m(j, k + static_cast<int>(i));
  return s;
}

Rational pair_integral(const MomentData& md, const RatPoly& P, const TypeIForm& R) {
  Rational s(0);
  for (size_t i = 0; i < P.coeffs().size(); ++i) {
    for (size_t a = 0; a < R.A1.coeffs().size(); ++a) s += P[i] * R.A1[a] * md.m(1, static_cast<int>(i + a));
    for (size_t a = 0; a < R.A2.coeffs().size(); ++a) s += P[i] * R.A2[a] * md.m(2, static_cast<int>(i + a));
  }
  return s;
}

Rational form_moment(const MomentData& md, const TypeIForm& R, int k) {
  return weighted_integral(md, R.A1, 1, k) + weighted_integral(md, R.A2, 2, k);
}

std::vector<BigFloat> real_zeros(const RatPoly& p, PrecCtx ctx, BigFloat* max_imag) {
  std::vector<BigComplex> c;
  for (const auto& q : p.coeffs()) c.emplace_back(BigFloat(q, ctx));
  auto r = roots_all(c, ctx);
  std::vector<BigFloat> out;
  BigFloat mi(ctx);
  for (auto& z : r) {
    out.push_back(z.re);
    mi = max(mi, abs(z.im));
  }
  std::sort(out.begin(), out.end(), [](const BigFloat& a, const BigFloat& b) { return a < b; });
  if (max_imag) *max_imag = mi;
  return out;
}

TypeIISolution compute_Q(int n, PrecCtx ctx) { return compute_Q(n, moment_data(n, 3 * n + 1), ctx); }

TypeIISolution compute_Q(int n, const MomentData& md, PrecCtx ctx) {
  if (n < 1) throw ArgumentError("compute_Q: n must be >= 1");
  TypeIISolution s{n, type_ii(md, n, n), {}, BigFloat(ctx), {}, {BigFloat(ctx), BigFloat(ctx)}};
  s.zeros = real_zeros(s.Q.poly(), ctx, &s.max_zero_imag);
  for (int j = 1; j <= 2; ++j) {
    s.h_exact[j - 1] = weighted_integral(md, s.Q.poly(), j, n);
    s.h[j - 1] = BigFloat(s.h_exact[j - 1], ctx);
  }
  return s;
}

TypeISolution compute_typeI(int n, const MomentData& md) {
  if (n < 1) throw ArgumentError("compute_typeI: n must be >= 1");
  return TypeISolution{n, type_i(md, n, n)};
}

BigFloat eval_form(const TypeIForm& R, int n, const BigFloat& x) {
  return R.A1(x) * eval_w(1, n, x) + R.A2(x) * eval_w(2, n, x);
}

BigFloat TypeISolution::eval(const BigFloat& x) const { return eval_form(form, n, x); }

BigFloat eval_by_zeros(const std::vector<BigFloat>& zeros, const BigFloat& x) {
  BigFloat r(1L, x.ctx());
  for (const auto& z : zeros) r *= x - z;
  return r;
}

BigComplex eval_by_zeros(const std::vector<BigFloat>& zeros, const BigComplex& z) {
  BigComplex r(BigFloat(1L, z.ctx()));
  for (const auto& x : zeros) r = r * (z - x);
  return r;
}

// ---------------------------------------------------------------------------

BigComplex cauchy_transform(const RatPoly& P, int j, int n, const BigComplex& z, Side side) {
  if (j != 1 && j != 2) throw ArgumentError("cauchy_transform: j must be 1 or 2");
  PrecCtx ctx = z.ctx();
  const bool on_cut = z.im.is_zero() && z.re >= 0.0;
  if (on_cut && side == Side::None)
    throw BranchError("cauchy_transform: z on [0, inf) requires a side");
  if (!on_cut && side != Side::None) side = Side::None;
  if (on_cut && z.re.is_zero()) throw BranchError("cauchy_transform: boundary value at 0 is unbounded");

  // In u = sqrt x the measure becomes g(u) du with g smooth on [0, inf).
  FloatPoly p(P, ctx);
  const BigFloat pin = const_pi(ctx) * static_cast<double>(n);
  auto g_real = [&](const BigFloat& u) {
    BigFloat v = p(u * u);
    if (j == 1) return u.is_zero() ? BigFloat(2.0, ctx) * v / pin : 2.0 * u * v / sinh(pin * u);
    return 2.0 * v / cosh(pin * u);
  };
  auto g_cplx = [&](const BigComplex& u) {
    BigComplex v = p(u * u);
    if (j == 1) return 2.0 * u * v / sinh(u * pin);
    return 2.0 * v / cosh(u * pin);
  };

  double logc = -1e300;
  for (const auto& c : P.coeffs()) logc = std::max(logc, log_abs(c));
  const double U = tail_cutoff(n, 2 * std::max(P.degree(), 0) + 2, logc + std::log(4.0 * (P.degree() + 1)),
                               ctx.bits * std::log(2.0) + 30.0);
  const double hp = 0.5 / n;
  const int panels = static_cast<int>(std::ceil(U / hp));
  std::vector<BigFloat> breaks;
  for (int k = 0; k <= panels; ++k) breaks.emplace_back(k * hp, ctx);
  const int npts = 56;

  BigComplex s(ctx);
  if (on_cut) {
    s = BigComplex(sqrt(z.re));
  } else {
    s = sqrt(z);
  }
  const bool subtract = on_cut || abs(s.im) < 0.5 / n;
  BigComplex I(ctx);
  if (!subtract) {
    I = integrate_panels(ComplexFn([&](const BigFloat& u) {
                           BigComplex d = BigComplex(u * u) - z;
                           return BigComplex(g_real(u)) / d;
                         }),
                         breaks, npts);
  } else {
    // h(u) = g(u)/(u+s);  int (h(u)-h(s))/(u-s) du + h(s) int du/(u-s)
    BigComplex hs = (on_cut ? BigComplex(g_real(s.re)) : g_cplx(s)) / (s * 2.0);
    I = integrate_panels(ComplexFn([&](const BigFloat& u) {
                           BigComplex hu = BigComplex(g_real(u)) / (u + s);
                           return (hu - hs) / (u - s);
                         }),
                         breaks, npts);
    BigFloat Ub = breaks.back();
    BigComplex L(ctx);
    if (on_cut) {
      L = BigComplex(log((Ub - s.re) / s.re), const_pi(ctx) * (side == Side::Plus ? 1.0 : -1.0));
    } else {
      L = log(Ub - s) - log(-s);
    }
    I += hs * L;
  }
  // divide by 2 pi i
  BigComplex twopii(BigFloat(ctx), 2.0 * const_pi(ctx));
  return I / twopii;
}

// ---------------------------------------------------------------------------

RHMatrixY::RHMatrixY(int n, PrecCtx ctx) : RHMatrixY(n, moment_data(n, 3 * n + 1), ctx) {}

RHMatrixY::RHMatrixY(int n, const MomentData& md, PrecCtx ctx)
    : n_(n), ctx_(ctx), d1_(ctx), d2_(ctx) {
  if (n < 1) throw ArgumentError("RHMatrixY: n must be >= 1");
  Q_ = type_ii(md, n, n).poly();
  Q1_ = type_ii(md, n - 1, n).poly();
  Q2_ = type_ii(md, n, n - 1).poly();
  // d_j^{-1} = (-1/2 pi i) int x^{n-1} P_{n-e_j} w_j
  Rational h1 = weighted_integral(md, Q1_, 1, n - 1);
  Rational h2 = weighted_integral(md, Q2_, 2, n - 1);
  BigComplex m2pii(BigFloat(ctx), -2.0 * const_pi(ctx));
  d1_ = m2pii / BigFloat(h1, ctx);
  d2_ = m2pii / BigFloat(h2, ctx);
}

Matrix3 RHMatrixY::assemble(const BigComplex& z, Side side) const {
  Matrix3 Y = zeros3(ctx_);
  const RatPoly* rows[3] = {&Q_, &Q1_, &Q2_};
  BigComplex scale[3] = {BigComplex(BigFloat(1L, ctx_)), d1_, d2_};
  for (int r = 0; r < 3; ++r) {
    Y[r][0] = scale[r] * (*rows[r])(z);
    Y[r][1] = scale[r] * cauchy_transform(*rows[r], 1, n_, z, side);
    Y[r][2] = scale[r] * cauchy_transform(*rows[r], 2, n_, z, side);
  }
  return Y;
}

Matrix3 RHMatrixY::eval(const BigComplex& z) const {
  if (z.ctx().bits != ctx_.bits) throw PrecisionMismatch("RHMatrixY::eval: precision mismatch");
  if (z.im.is_zero() && z.re >= 0.0) throw BranchError("RHMatrixY::eval: z on [0, inf) requires a side");
  return assemble(z, Side::None);
}

Matrix3 RHMatrixY::eval_boundary(const BigFloat& x, Side side) const {
  if (side == Side::None) throw BranchError("RHMatrixY::eval_boundary: side required");
  if (x <= 0.0) throw DomainError("RHMatrixY::eval_boundary: x must be positive");
  return assemble(BigComplex(x), side);
}

// ---------------------------------------------------------------------------

KernelCD::KernelCD(int n, PrecCtx ctx) : KernelCD(n, moment_data(n, 3 * n + 2), ctx) {}

KernelCD::KernelCD(int n, const MomentData& md, PrecCtx ctx) : n_(n), ctx_(ctx), md_(md) {
  if (n < 1) throw ArgumentError("KernelCD: n must be >= 1");
  P_ = type_ii(md, n, n).poly();
  P1_ = type_ii(md, n - 1, n).poly();
  P2_ = type_ii(md, n, n - 1).poly();
  R_ = type_i(md, n, n);
  R1_ = type_i(md, n + 1, n);
  R2_ = type_i(md, n, n + 1);
  // h_{n,j} / h_{n-e_j,j}
  c_[0] = weighted_integral(md, P_, 1, n) / weighted_integral(md, P1_, 1, n - 1);
  c_[1] = weighted_integral(md, P_, 2, n) / weighted_integral(md, P2_, 2, n - 1);

  // K(x,y) = sum_{i,j} [A^{-1}]_{j,i} x^{i-1} phi_j(y), A_{ij} = int x^{i-1} phi_j
  const int N = 2 * n;
  RatMatrix A(N, RatVector(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) A[i][j] = j < n ? md.m(1, i + j) : md.m(2, i + j - n);
  RatMatrix Ainv = inverse_exact(A);
  for (int j = 0; j < N; ++j) {
    RatVector c(N);
    for (int i = 0; i < N; ++i) c[i] = Ainv[j][i];
    sum_polys_.emplace_back(std::move(c));
  }
}

BigFloat KernelCD::form(const TypeIForm& R, const BigFloat& y) const { return eval_form(R, n_, y); }

BigFloat KernelCD::cd(const BigFloat& x, const BigFloat& y) const {
  if (x <= 0.0 || y <= 0.0) throw DomainError("KernelCD: arguments must be positive");
  if (x == y) return diag(x);
  BigFloat num = P_(x) * form(R_, y) - BigFloat(c_[0], ctx_) * P1_(x) * form(R1_, y) -
                 BigFloat(c_[1], ctx_) * P2_(x) * form(R2_, y);
  return num / (x - y);
}

BigFloat KernelCD::diag(const BigFloat& x) const {
  if (x <= 0.0) throw DomainError("KernelCD: arguments must be positive");
  return P_.derivative()(x) * form(R_, x) - BigFloat(c_[0], ctx_) * P1_.derivative()(x) * form(R1_, x) -
         BigFloat(c_[1], ctx_) * P2_.derivative()(x) * form(R2_, x);
}

BigFloat KernelCD::sum(const BigFloat& x, const BigFloat& y) const {
  if (x <= 0.0 || y <= 0.0) throw DomainError("KernelCD: arguments must be positive");
  BigFloat w1 = eval_w(1, n_, y), w2 = eval_w(2, n_, y);
  BigFloat total(ctx_), ypow(1L, ctx_);
  for (int j = 0; j < n_; ++j) {
    total += sum_polys_[j](x) * ypow * w1;
    total += sum_polys_[j + n_](x) * ypow * w2;
    ypow *= y;
  }
  return total;
}

BigFloat KernelCD::via_Y(const BigFloat& x, const BigFloat& y) const {
  if (x <= 0.0 || y <= 0.0) throw DomainError("KernelCD: arguments must be positive");
  if (!Y_) Y_ = std::make_unique<RHMatrixY>(n_, md_, ctx_);
  Matrix3 Yinv = inverse3(Y_->eval_boundary(y, Side::Plus));
  BigComplex col[3] = {BigComplex(Y_->Q()(x)), Y_->d(1) * Y_->Q1()(x), Y_->d(2) * Y_->Q2()(x)};
  BigComplex row[3] = {BigComplex(ctx_), BigComplex(eval_w(1, n_, y)), BigComplex(eval_w(2, n_, y))};
  BigComplex acc(ctx_);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) acc += row[a] * Yinv[a][b] * col[b];
  BigComplex den(BigFloat(ctx_), 2.0 * const_pi(ctx_) * (x - y));
  return (acc / den).re;
}

BigFloat KernelCD::trace_quadrature() const {
  // x = u^2; diag(u^2) 2u is bounded at u = 0
  double logc = 0.0;
  for (const auto* p : {&P_, &P1_, &P2_})
    for (const auto& c : p->coeffs()) logc = std::max(logc, log_abs(c));
  double loga = 0.0;
  for (const auto* f : {&R_, &R1_, &R2_}) {
    for (const auto& c : f->A1.coeffs()) loga = std::max(loga, log_abs(c));
    for (const auto& c : f->A2.coeffs()) loga = std::max(loga, log_abs(c));
  }
  const double U = tail_cutoff(n_, 2 * (3 * n_ + 2), logc + loga + std::log(16.0 * n_ * n_), 60.0);
  const double hp = 0.5 / n_;
  const int panels = static_cast<int>(std::ceil(U / hp));
  std::vector<BigFloat> breaks;
  for (int k = 0; k <= panels; ++k) breaks.emplace_back(k * hp, ctx_);
  return integrate_panels(RealFn([&](const BigFloat& u) { return diag(u * u) * u * 2.0; }), breaks, 40);
}

}  // namespace nikishin
