#include "nikishin/weights.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "nikishin/quadrature.hpp"
#include "nikishin/special.hpp"

namespace nikishin {

RescaledWeights::RescaledWeights(int n_) : n(n_) {
  if (n < 1) throw ArgumentError("RescaledWeights: n must be >= 1");
}

Rational DiscreteMeasure::atom(long k) const {
  Rational c(2 * k + 1);
  if (n > 0) c /= Rational(2 * n);
  return -c * c;
}

DiscreteMeasure sigma2() { return DiscreteMeasure{}; }

DiscreteMeasure sigma2n(int n) {
  if (n < 1) throw ArgumentError("sigma2n: n must be >= 1");
  DiscreteMeasure m;
  m.n = n;
  return m;
}

namespace {

void check_off_cut(const BigComplex& z, const char* who) {
  if (z.im.is_zero() && z.re <= 0.0)
    throw BranchError(std::string(who) + ": argument on the cut (-inf, 0]");
}

}  // namespace

BigComplex eval_w(int j, int n, const BigComplex& z) {
  if (j != 1 && j != 2) throw ArgumentError("eval_w: j must be 1 or 2");
  if (n < 1) throw ArgumentError("eval_w: n must be >= 1");
  check_off_cut(z, "eval_w");
  PrecCtx ctx = z.ctx();
  BigComplex u = sqrt(z);
  BigComplex a = u * (const_pi(ctx) * static_cast<double>(n));
  BigComplex one(BigFloat(1L, ctx));
  if (j == 1) return one / sinh(a);
  return one / (u * cosh(a));
}

BigFloat eval_w(int j, int n, const BigFloat& x) {
  if (j != 1 && j != 2) throw ArgumentError("eval_w: j must be 1 or 2");
  if (x <= 0.0) throw BranchError("eval_w: argument on the cut (-inf, 0]");
  BigFloat u = sqrt(x);
  BigFloat a = u * const_pi(x.ctx()) * static_cast<double>(n);
  if (j == 1) return 1.0 / sinh(a);
  return 1.0 / (u * cosh(a));
}

BigComplex eval_upsilon(const BigComplex& z) {
  check_off_cut(z, "eval_upsilon");
  return exp(sqrt(z) * const_pi(z.ctx()));
}

RelationsWReport check_relationsW(int n, const BigComplex& z) {
  PrecCtx ctx = z.ctx();
  BigComplex u = sqrt(z);
  BigComplex w1 = eval_w(1, n, z), w2 = eval_w(2, n, z);
  BigComplex ups = eval_upsilon(z);
  BigComplex up = pow(ups, n), um = pow(ups, -n);
  BigComplex den = up * up - um * um;
  BigComplex one(BigFloat(1L, ctx));
  RelationsWReport r{BigFloat(ctx), BigFloat(ctx)};
  BigComplex uw2 = u * w2;
  r.sum_identity = max(abs(w1 + uw2 - 4.0 * up / den), abs(w1 - uw2 - 4.0 * um / den));
  r.reciprocal_identity = max(abs(one / w1 + one / uw2 - up), abs(one / w1 - one / uw2 + um));
  return r;
}

namespace {

std::mutex g_mutex;
std::map<std::pair<int, int>, Rational> g_unit;  // (j, k) -> moment at n = 1

Rational unit_moment(int j, int k) {
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_unit.find({j, k});
    if (it != g_unit.end()) return it->second;
  }
  Rational v;
  if (j == 1) {
    // 4 (2k+1)! (1 - 2^{-(2k+2)}) zeta(2k+2)/pi^{2k+2}
    Rational f(factorial(static_cast<unsigned long>(2 * k + 1)));
    Rational odd = 1 - Rational(1, mpz_class(1) << (2 * k + 2));
    v = 4 * f * odd * zeta_even(2 * k + 2);
  } else {
    // 4 (2k)! beta(2k+1)/pi^{2k+1}
    v = 4 * Rational(factorial(static_cast<unsigned long>(2 * k))) * beta_odd(2 * k + 1);
  }
  std::lock_guard<std::mutex> lock(g_mutex);
  g_unit[{j, k}] = v;
  return v;
}

}  // namespace

Rational moment(int j, int n, int k) {
  if (j != 1 && j != 2) throw ArgumentError("moment: j must be 1 or 2");
  if (n < 1 || k < 0) throw ArgumentError("moment: need n >= 1 and k >= 0");
  // x = (u/(pi n))^2 scaling: n^{-(2k+2)} for j = 1, n^{-(2k+1)} for j = 2
  long e = j == 1 ? 2 * k + 2 : 2 * k + 1;
  return unit_moment(j, k) / rational_pow(Rational(n), e);
}

MomentTable moments(int j, int n, int k_max) {
  if (k_max < 0) throw ArgumentError("moments: k_max must be >= 0");
  MomentTable t;
  t.n = n;
  t.j = j;
  for (int k = 0; k <= k_max; ++k) t.values.push_back(moment(j, n, k));
  return t;
}

BigFloat moment_quadrature(int j, int n, int k, PrecCtx ctx) {
  // With x = u^2 both integrands are smooth on [0, inf):
  //   j=1: 2 u^{2k+1}/sinh(pi n u),  j=2: 2 u^{2k}/cosh(pi n u)
  // Panels of width 1/(2n) keep the poles at u = i m/n a fixed relative
  // distance away; the tail is cut where u^{2k+1} e^{-pi n u} < 2^{-bits}.
  PrecCtx wctx(ctx.bits + 32);
  const double target = ctx.bits * std::log(2.0) + 20.0;
  double U = 1.0;
  while ((2.0 * k + 1.0) * std::log(U) - M_PI * n * U + std::log(4.0) > -target) U *= 1.25;
  const double h = 0.5 / n;
  const int panels = static_cast<int>(std::ceil(U / h));
  BigFloat pin = const_pi(wctx) * static_cast<double>(n);
  RealFn f = [&](const BigFloat& u) {
    BigFloat p = pow(u, 2L * k);
    if (j == 1) {
      if (u.is_zero()) return k == 0 ? BigFloat(2.0, wctx) / pin : BigFloat(wctx);
      return 2.0 * p * u / sinh(pin * u);
    }
    return 2.0 * p / cosh(pin * u);
  };
  // adaptive check on each panel: compare against a split panel
  BigFloat total(wctx);
  BigFloat tol = ldexp_one(-static_cast<long>(ctx.bits) - 8, wctx);
  for (int p = 0; p < panels; ++p) {
    BigFloat a(p * h, wctx), b((p + 1) * h, wctx);
    total += integrate_adaptive(f, a, b, tol, 32, 8);
  }
  BigFloat r(ctx);
  mpfr_set(r.get(), total.get(), MPFR_RNDN);
  return r;
}

BigFloat tanh_partial_fractions_check(const BigComplex& z, long K) {
  PrecCtx ctx = z.ctx();
  for (long k = 0; k < K + 2; ++k) {
    BigComplex d = z + static_cast<double>((2 * k + 1) * (2 * k + 1));
    if (abs(d) < 1e-6) throw DomainError("tanh_partial_fractions_check: z within 1e-6 of an atom");
    if (d.re > 1e12) break;
  }
  BigComplex lhs(ctx);
  if (abs(z) < 1e-30) {
    lhs = BigComplex(const_pi(ctx) / 2.0);  // limit of tanh(pi u/2)/u at u = 0
  } else {
    BigComplex u = sqrt(z);
    lhs = tanh(u * (const_pi(ctx) / 2.0)) / u;
  }
  BigComplex s(ctx);
  BigComplex one(BigFloat(1L, ctx));
  for (long k = 0; k < K; ++k) {
    BigFloat c(static_cast<double>(2 * k + 1), ctx);
    s += one / (z + c * c);
  }
  s *= BigFloat(4L, ctx) / const_pi(ctx);
  return abs(lhs - s);
}

}  // namespace nikishin
