#pragma once

#include <array>
#include <memory>
#include <vector>

#include "nikishin/matrix3.hpp"
#include "nikishin/rational.hpp"

namespace nikishin {

// Moments of w_{1,n}, w_{2,n} for k = 0..k_max (exact).
struct MomentData {
  int n = 1;
  RatVector m1, m2;
  const Rational& m(int j, int k) const { return j == 1 ? m1.at(k) : m2.at(k); }
};
MomentData moment_data(int n, int k_max);

// Monic P of degree n1+n2 with int x^k P w_j = 0 for k < n_j (weights of `md`).
MonicPolynomial type_ii(const MomentData& md, int n1, int n2);

// Linear form R = A1 w1 + A2 w2, deg A_j <= n_j - 1, int x^k R = 0 for
// k <= n1+n2-2 and = 1 for k = n1+n2-1.
struct TypeIForm {
  int n1 = 0, n2 = 0;
  RatPoly A1, A2;
};
TypeIForm type_i(const MomentData& md, int n1, int n2);

// int x^k P(x) w_j(x) dx, exactly
Rational weighted_integral(const MomentData& md, const RatPoly& P, int j, int k);
// int P(x) R(x) dx, exactly
Rational pair_integral(const MomentData& md, const RatPoly& P, const TypeIForm& R);
// int x^k R(x) dx, exactly
Rational form_moment(const MomentData& md, const TypeIForm& R, int k);

struct TypeIISolution {
  int n = 1;
  MonicPolynomial Q;
  std::vector<BigFloat> zeros;       // ascending real parts
  BigFloat max_zero_imag;            // largest |Im| reported by the root finder
  std::array<Rational, 2> h_exact;   // h_j = int Q x^n w_{j,n}
  std::array<BigFloat, 2> h;
};

struct TypeISolution {
  int n = 1;
  TypeIForm form;
  BigFloat eval(const BigFloat& x) const;
};

TypeIISolution compute_Q(int n, PrecCtx ctx);
TypeIISolution compute_Q(int n, const MomentData& md, PrecCtx ctx);
TypeISolution compute_typeI(int n, const MomentData& md);

// Zeros of a rational polynomial (real parts, ascending) plus max |Im|.
std::vector<BigFloat> real_zeros(const RatPoly& p, PrecCtx ctx, BigFloat* max_imag = nullptr);

// (1/2 pi i) int_0^inf P(x) w_{j,n}(x) dx / (x - z).  For z on (0, inf) a side
// is required and the Sokhotski-Plemelj boundary value is returned.
BigComplex cauchy_transform(const RatPoly& P, int j, int n, const BigComplex& z, Side side = Side::None);

BigFloat eval_form(const TypeIForm& R, int n, const BigFloat& x);

// Solution of the rescaled 3x3 Riemann-Hilbert problem for index (n, n).
class RHMatrixY {
 public:
  RHMatrixY(int n, PrecCtx ctx);
  RHMatrixY(int n, const MomentData& md, PrecCtx ctx);

  Matrix3 eval(const BigComplex& z) const;
  Matrix3 eval_boundary(const BigFloat& x, Side side) const;
  int n() const { return n_; }
  const RatPoly& Q() const { return Q_; }
  const RatPoly& Q1() const { return Q1_; }  // index (n-1, n)
  const RatPoly& Q2() const { return Q2_; }  // index (n, n-1)
  const BigComplex& d(int j) const { return j == 1 ? d1_ : d2_; }

 private:
  Matrix3 assemble(const BigComplex& z, Side side) const;
  int n_;
  PrecCtx ctx_;
  RatPoly Q_, Q1_, Q2_;
  BigComplex d1_, d2_;
};

// Christoffel-Darboux kernel of the (n, n) ensemble with weights w_{1,n}, w_{2,n}.
// Three independent constructions are provided for cross-checking.
class KernelCD {
 public:
  KernelCD(int n, PrecCtx ctx);
  KernelCD(int n, const MomentData& md, PrecCtx ctx);

  // (x-y) K = P(x) R(y) - sum_j h_{n,j}/h_{n-e_j,j} P_{n-e_j}(x) R_{n+e_j}(y)
  BigFloat cd(const BigFloat& x, const BigFloat& y) const;
  // confluent limit of cd at y = x
  BigFloat diag(const BigFloat& x) const;
  // biorthogonal double sum with the inverse moment matrix
  BigFloat sum(const BigFloat& x, const BigFloat& y) const;
  // through Y_+^{-1}(y) Y_+(x)
  BigFloat via_Y(const BigFloat& x, const BigFloat& y) const;
  // int_0^inf K(x,x) dx by quadrature of diag()
  BigFloat trace_quadrature() const;

  int n() const { return n_; }
  PrecCtx ctx() const { return ctx_; }
  const std::array<Rational, 2>& cd_coefficients() const { return c_; }

 private:
  BigFloat form(const TypeIForm& R, const BigFloat& y) const;
  int n_;
  PrecCtx ctx_;
  MomentData md_;
  RatPoly P_, P1_, P2_;
  TypeIForm R_, R1_, R2_;
  std::array<Rational, 2> c_;
  std::vector<RatPoly> sum_polys_;  // pi_j with K = sum_j pi_j(x) phi_j(y)
  mutable std::unique_ptr<RHMatrixY> Y_;
};

// Rescaled Q_n evaluated through its zeros (stable for large n).
BigFloat eval_by_zeros(const std::vector<BigFloat>& zeros, const BigFloat& x);
BigComplex eval_by_zeros(const std::vector<BigFloat>& zeros, const BigComplex& z);

}  // namespace nikishin
