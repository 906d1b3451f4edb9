#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "nikishin/bigfloat.hpp"

namespace nikishin {

// mpq_class is kept canonical (lowest terms, positive denominator) by every
// gmpxx operation we use.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

std::string to_string(const Rational& q);
Rational rational_from_string(const std::string& s);
Rational rational_pow(const Rational& q, long k);
mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

// Polynomial with rational coefficients, lowest degree first.  Trailing zero
// coefficients are trimmed; the zero polynomial has an empty list.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(RatVector coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const RatVector& coeffs() const { return c_; }
  const Rational& operator[](size_t k) const { return c_[k]; }
  bool is_zero() const { return c_.empty(); }

  Rational operator()(const Rational& x) const;
  BigFloat operator()(const BigFloat& x) const;
  BigComplex operator()(const BigComplex& x) const;

  RatPoly derivative() const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly scaled(const Rational& s) const;

 private:
  void trim();
  RatVector c_;
};

// Polynomial whose leading coefficient is exactly 1.
class MonicPolynomial {
 public:
  MonicPolynomial() : p_(RatVector{Rational(1)}) {}
  explicit MonicPolynomial(RatVector coeffs);
  explicit MonicPolynomial(const RatPoly& p);

  int degree() const { return p_.degree(); }
  const RatVector& coeffs() const { return p_.coeffs(); }
  const RatPoly& poly() const { return p_; }

  template <class T>
  auto operator()(const T& x) const { return p_(x); }

 private:
  RatPoly p_;
};

// Floating copy of a rational polynomial at a fixed precision, for repeated
// evaluation without re-rounding the coefficients every time.
class FloatPoly {
 public:
  FloatPoly(const RatPoly& p, PrecCtx ctx);
  BigFloat operator()(const BigFloat& x) const;
  BigComplex operator()(const BigComplex& x) const;
  // value and derivative in one Horner pass
  void eval_with_derivative(const BigFloat& x, BigFloat& value, BigFloat& deriv) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  PrecCtx ctx() const { return ctx_; }

 private:
  std::vector<BigFloat> c_;
  PrecCtx ctx_;
};

// Exact solve by fraction-free (Bareiss) elimination on the row-scaled integer
// system.  Throws SingularMatrix carrying the rank found.
RatVector solve_linear_exact(const RatMatrix& A, const RatVector& b);
RatMatrix inverse_exact(const RatMatrix& A);
int rank_exact(const RatMatrix& A);
RatVector mat_vec(const RatMatrix& A, const RatVector& x);

}  // namespace nikishin
