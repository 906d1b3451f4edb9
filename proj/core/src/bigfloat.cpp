#include "nikishin/bigfloat.hpp"

#include <cmath>
#include <ostream>
#include <vector>

namespace nikishin {

double PrecCtx::eps() const { return std::ldexp(1.0, -static_cast<int>(bits)); }

BigFloat::BigFloat(PrecCtx ctx) {
  mpfr_init2(v_, ctx.bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, PrecCtx ctx) {
  mpfr_init2(v_, ctx.bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(double v, PrecCtx ctx) {
  mpfr_init2(v_, ctx.bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& q, PrecCtx ctx) {
  mpfr_init2(v_, ctx.bits);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& z, PrecCtx ctx) {
  mpfr_init2(v_, ctx.bits);
  mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

BigFloat BigFloat::from_string(const std::string& s, PrecCtx ctx) {
  BigFloat r(ctx);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw ArgumentError("BigFloat: cannot parse '" + s + "'");
  return r;
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (digits <= 0) digits = static_cast<int>(std::ceil(bits() * 0.30103)) + 1;
  std::vector<char> buf(static_cast<size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

void BigFloat::check(const BigFloat& o) const {
  if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_))
    throw PrecisionMismatch("BigFloat: operands carry different precision contexts (" +
                            std::to_string(bits()) + " vs " + std::to_string(o.bits()) + " bits)");
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  check(o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  check(o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  check(o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  check(o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator+=(double o) {
  mpfr_add_d(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(double o) {
  mpfr_sub_d(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(double o) {
  mpfr_mul_d(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(double o) {
  mpfr_div_d(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
BigFloat operator+(BigFloat a, double b) { return a += b; }
BigFloat operator-(BigFloat a, double b) { return a -= b; }
BigFloat operator*(BigFloat a, double b) { return a *= b; }
BigFloat operator/(BigFloat a, double b) { return a /= b; }
BigFloat operator+(double a, BigFloat b) { return b += a; }
BigFloat operator-(double a, const BigFloat& b) {
  BigFloat r(b.ctx());
  mpfr_d_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}
BigFloat operator*(double a, BigFloat b) { return b *= a; }
BigFloat operator/(double a, const BigFloat& b) {
  BigFloat r(b.ctx());
  mpfr_d_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.get(), b.get()); }
int cmp(const BigFloat& a, double b) { return mpfr_cmp_d(a.get(), b); }

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
  auto p = os.precision();
  return os << x.str(p > 0 ? static_cast<int>(p) : 0);
}

namespace {
template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
BigFloat unary(const BigFloat& x) {
  BigFloat r(x.ctx());
  F(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace

BigFloat abs(const BigFloat& x) { return unary<mpfr_abs>(x); }
BigFloat sqrt(const BigFloat& x) { return unary<mpfr_sqrt>(x); }
BigFloat exp(const BigFloat& x) { return unary<mpfr_exp>(x); }
BigFloat expm1(const BigFloat& x) { return unary<mpfr_expm1>(x); }
BigFloat log(const BigFloat& x) { return unary<mpfr_log>(x); }
BigFloat log1p(const BigFloat& x) { return unary<mpfr_log1p>(x); }
BigFloat sin(const BigFloat& x) { return unary<mpfr_sin>(x); }
BigFloat cos(const BigFloat& x) { return unary<mpfr_cos>(x); }
BigFloat tan(const BigFloat& x) { return unary<mpfr_tan>(x); }
BigFloat atan(const BigFloat& x) { return unary<mpfr_atan>(x); }
BigFloat sinh(const BigFloat& x) { return unary<mpfr_sinh>(x); }
BigFloat cosh(const BigFloat& x) { return unary<mpfr_cosh>(x); }
BigFloat tanh(const BigFloat& x) { return unary<mpfr_tanh>(x); }

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  if (y.bits() != x.bits()) throw PrecisionMismatch("atan2: precision mismatch");
  BigFloat r(x.ctx());
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long k) {
  BigFloat r(x.ctx());
  mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  if (y.bits() != x.bits()) throw PrecisionMismatch("pow: precision mismatch");
  BigFloat r(x.ctx());
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  if (y.bits() != x.bits()) throw PrecisionMismatch("hypot: precision mismatch");
  BigFloat r(x.ctx());
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat min(const BigFloat& a, const BigFloat& b) { return a < b ? a : b; }
BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat const_pi(PrecCtx ctx) {
  BigFloat r(ctx);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigFloat const_log2(PrecCtx ctx) {
  BigFloat r(ctx);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

BigFloat ldexp_one(long e, PrecCtx ctx) {
  BigFloat r(1L, ctx);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------

BigComplex::BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {
  if (re.bits() != im.bits()) throw PrecisionMismatch("BigComplex: parts differ in precision");
}

BigComplex::BigComplex(BigFloat r) : re(std::move(r)), im(re.ctx()) {}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
BigComplex& BigComplex::operator*=(const BigComplex& o) { return *this = *this * o; }
BigComplex& BigComplex::operator/=(const BigComplex& o) { return *this = *this / o; }
BigComplex& BigComplex::operator*=(const BigFloat& o) {
  re *= o;
  im *= o;
  return *this;
}
BigComplex& BigComplex::operator/=(const BigFloat& o) {
  re /= o;
  im /= o;
  return *this;
}
BigComplex& BigComplex::operator*=(double o) {
  re *= o;
  im *= o;
  return *this;
}

BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  // scaled division to avoid spurious overflow in |b|^2
  if (abs(b.re) >= abs(b.im)) {
    BigFloat r = b.im / b.re;
    BigFloat d = b.re + b.im * r;
    return BigComplex((a.re + a.im * r) / d, (a.im - a.re * r) / d);
  }
  BigFloat r = b.re / b.im;
  BigFloat d = b.re * r + b.im;
  return BigComplex((a.re * r + a.im) / d, (a.im * r - a.re) / d);
}
BigComplex operator+(BigComplex a, const BigFloat& b) {
  a.re += b;
  return a;
}
BigComplex operator-(BigComplex a, const BigFloat& b) {
  a.re -= b;
  return a;
}
BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }
BigComplex operator/(BigComplex a, const BigFloat& b) { return a /= b; }
BigComplex operator+(const BigFloat& a, BigComplex b) {
  b.re += a;
  return b;
}
BigComplex operator-(const BigFloat& a, const BigComplex& b) { return BigComplex(a - b.re, -b.im); }
BigComplex operator*(const BigFloat& a, BigComplex b) { return b *= a; }
BigComplex operator/(const BigFloat& a, const BigComplex& b) { return BigComplex(a) / b; }
BigComplex operator+(BigComplex a, double b) {
  a.re += b;
  return a;
}
BigComplex operator-(BigComplex a, double b) {
  a.re -= b;
  return a;
}
BigComplex operator*(BigComplex a, double b) { return a *= b; }
BigComplex operator/(BigComplex a, double b) {
  a.re /= b;
  a.im /= b;
  return a;
}
BigComplex operator+(double a, BigComplex b) {
  b.re += a;
  return b;
}
BigComplex operator-(double a, const BigComplex& b) { return BigComplex(a - b.re, -b.im); }
BigComplex operator*(double a, BigComplex b) { return b *= a; }
BigComplex operator/(double a, const BigComplex& b) { return BigComplex(BigFloat(a, b.ctx())) / b; }

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
  return os << "(" << z.re << "," << z.im << ")";
}

BigComplex conj(const BigComplex& z) { return BigComplex(z.re, -z.im); }
BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }
BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex sqrt(const BigComplex& z) {
  PrecCtx ctx = z.ctx();
  if (z.re.is_zero() && z.im.is_zero()) return BigComplex(ctx);
  BigFloat r = abs(z);
  if (z.re.sign() >= 0) {
    BigFloat a = sqrt((r + z.re) / 2.0);
    return BigComplex(a, z.im / (2.0 * a));
  }
  BigFloat b = sqrt((r - z.re) / 2.0);
  if (z.im.signbit()) b = -b;
  return BigComplex(z.im / (2.0 * b), b);
}

BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.re);
  return BigComplex(m * cos(z.im), m * sin(z.im));
}

BigComplex log(const BigComplex& z) { return BigComplex(log(abs(z)), arg(z)); }

BigComplex sinh(const BigComplex& z) {
  return BigComplex(sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im));
}

BigComplex cosh(const BigComplex& z) {
  return BigComplex(cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im));
}

BigComplex tanh(const BigComplex& z) { return sinh(z) / cosh(z); }

BigComplex pow(const BigComplex& z, long k) {
  if (k < 0) return BigComplex(BigFloat(1L, z.ctx())) / pow(z, -k);
  BigComplex r(BigFloat(1L, z.ctx()));
  BigComplex b = z;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

BigComplex polar(const BigFloat& r, const BigFloat& theta) {
  return BigComplex(r * cos(theta), r * sin(theta));
}

BigComplex i_unit(PrecCtx ctx) { return BigComplex(BigFloat(ctx), BigFloat(1L, ctx)); }

}  // namespace nikishin
