#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

#include "nikishin/errors.hpp"

namespace nikishin {

struct PrecCtx {
  unsigned bits = 256;

  PrecCtx() = default;
  explicit PrecCtx(unsigned b) : bits(b) {
    if (b < 64) throw ArgumentError("PrecCtx: precision must be at least 64 bits");
  }
  PrecCtx doubled() const { return PrecCtx(bits * 2); }
  // 2^-bits as a double (underflows to 0 for very high precision, which is fine for tolerances)
  double eps() const;
  bool operator==(const PrecCtx&) const = default;
};

// RAII wrapper over mpfr_t.  The precision of a value is its context; binary
// operations between values of different precision throw PrecisionMismatch.
class BigFloat {
 public:
  explicit BigFloat(PrecCtx ctx = PrecCtx{});
  BigFloat(long v, PrecCtx ctx);
  BigFloat(int v, PrecCtx ctx) : BigFloat(static_cast<long>(v), ctx) {}
  BigFloat(double v, PrecCtx ctx);
  BigFloat(const mpq_class& q, PrecCtx ctx);
  BigFloat(const mpz_class& z, PrecCtx ctx);
  static BigFloat from_string(const std::string& s, PrecCtx ctx);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  PrecCtx ctx() const { return PrecCtx(bits()); }
  unsigned bits() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  // digits == 0 picks enough digits to round-trip at this precision
  std::string str(int digits = 0) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool signbit() const { return mpfr_signbit(v_) != 0; }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat& operator+=(double o);
  BigFloat& operator-=(double o);
  BigFloat& operator*=(double o);
  BigFloat& operator/=(double o);
  BigFloat operator-() const;

 private:
  void check(const BigFloat& o) const;
  mpfr_t v_;
};

BigFloat operator+(BigFloat a, const BigFloat& b);
BigFloat operator-(BigFloat a, const BigFloat& b);
BigFloat operator*(BigFloat a, const BigFloat& b);
BigFloat operator/(BigFloat a, const BigFloat& b);
BigFloat operator+(BigFloat a, double b);
BigFloat operator-(BigFloat a, double b);
BigFloat operator*(BigFloat a, double b);
BigFloat operator/(BigFloat a, double b);
BigFloat operator+(double a, BigFloat b);
BigFloat operator-(double a, const BigFloat& b);
BigFloat operator*(double a, BigFloat b);
BigFloat operator/(double a, const BigFloat& b);

int cmp(const BigFloat& a, const BigFloat& b);
int cmp(const BigFloat& a, double b);
inline bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
inline bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }
inline bool operator<(const BigFloat& a, double b) { return cmp(a, b) < 0; }
inline bool operator>(const BigFloat& a, double b) { return cmp(a, b) > 0; }
inline bool operator<=(const BigFloat& a, double b) { return cmp(a, b) <= 0; }
inline bool operator>=(const BigFloat& a, double b) { return cmp(a, b) >= 0; }

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat expm1(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat tan(const BigFloat& x);
BigFloat atan(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat tanh(const BigFloat& x);
BigFloat pow(const BigFloat& x, long k);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat const_pi(PrecCtx ctx);
BigFloat const_log2(PrecCtx ctx);
// 2^e at the given precision
BigFloat ldexp_one(long e, PrecCtx ctx);

class BigComplex {
 public:
  explicit BigComplex(PrecCtx ctx = PrecCtx{}) : re(ctx), im(ctx) {}
  BigComplex(BigFloat r, BigFloat i);
  explicit BigComplex(BigFloat r);
  BigComplex(double r, double i, PrecCtx ctx) : re(r, ctx), im(i, ctx) {}
  BigComplex(std::complex<double> z, PrecCtx ctx) : re(z.real(), ctx), im(z.imag(), ctx) {}

  PrecCtx ctx() const { return re.ctx(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& o);
  BigComplex& operator/=(const BigFloat& o);
  BigComplex& operator*=(double o);
  BigComplex operator-() const { return BigComplex(-re, -im); }

  BigFloat re;
  BigFloat im;
};

BigComplex operator+(BigComplex a, const BigComplex& b);
BigComplex operator-(BigComplex a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator+(BigComplex a, const BigFloat& b);
BigComplex operator-(BigComplex a, const BigFloat& b);
BigComplex operator*(BigComplex a, const BigFloat& b);
BigComplex operator/(BigComplex a, const BigFloat& b);
BigComplex operator+(const BigFloat& a, BigComplex b);
BigComplex operator-(const BigFloat& a, const BigComplex& b);
BigComplex operator*(const BigFloat& a, BigComplex b);
BigComplex operator/(const BigFloat& a, const BigComplex& b);
BigComplex operator+(BigComplex a, double b);
BigComplex operator-(BigComplex a, double b);
BigComplex operator*(BigComplex a, double b);
BigComplex operator/(BigComplex a, double b);
BigComplex operator+(double a, BigComplex b);
BigComplex operator-(double a, const BigComplex& b);
BigComplex operator*(double a, BigComplex b);
BigComplex operator/(double a, const BigComplex& b);

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

BigComplex conj(const BigComplex& z);
BigFloat abs(const BigComplex& z);
BigFloat norm(const BigComplex& z);
// principal argument in (-pi, pi]; honours the sign of a zero imaginary part
BigFloat arg(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);
BigComplex sinh(const BigComplex& z);
BigComplex cosh(const BigComplex& z);
BigComplex tanh(const BigComplex& z);
BigComplex pow(const BigComplex& z, long k);
BigComplex polar(const BigFloat& r, const BigFloat& theta);
BigComplex i_unit(PrecCtx ctx);

}  // namespace nikishin
