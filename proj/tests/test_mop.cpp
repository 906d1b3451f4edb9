#include <cmath>
#include <random>

#include "doctest.h"
#include "nikishin/curve.hpp"
#include "nikishin/errors.hpp"
#include "nikishin/mop.hpp"
#include "nikishin/quadrature.hpp"
#include "nikishin/weights.hpp"

using namespace nikishin;

namespace {

const PrecCtx ctx(256);

// int_0^inf f(x) w_{j,1}(x) dx by x = u^2 on fixed panels (independent of the library's moment path)
BigComplex weighted_quad(int j, const std::function<BigComplex(const BigFloat&)>& f) {
  ComplexFn g = [&](const BigFloat& u) {
    BigFloat pi = const_pi(u.ctx());
    BigFloat x = u * u;
    BigFloat jac;
    if (j == 1)
      jac = u.is_zero() ? 2.0 / pi : 2.0 * u / sinh(pi * u);
    else
      jac = 2.0 / cosh(pi * u);
    return f(x) * jac;
  };
  std::vector<BigFloat> br;
  for (int p = 0; p <= 240; ++p) br.emplace_back(0.25 * p, ctx);
  return integrate_panels(g, br, 40);
}

}  // namespace

TEST_SUITE("mop") {
  TEST_CASE("Q_1") {
    TypeIISolution Q = compute_Q(1, ctx);
    CHECK(Q.Q.coeffs() == RatVector{Rational(3, 8), Rational(-11, 4), Rational(1)});
    BigFloat s = sqrt(BigFloat(97L, ctx));
    CHECK(abs(Q.zeros[0] - (11.0 - s) / 8.0).to_double() < 1e-70);
    CHECK(abs(Q.zeros[1] - (11.0 + s) / 8.0).to_double() < 1e-70);
    CHECK(Q.zeros[0].to_double() == doctest::Approx(0.1438928).epsilon(1e-6));
    // orthogonality by quadrature, not through the moment table
    for (int j : {1, 2}) {
      BigComplex r = weighted_quad(j, [&](const BigFloat& x) { return BigComplex(Q.Q(x)); });
      CHECK(abs(r).to_double() < 1e-30);
    }
  }

  TEST_CASE("exact orthogonality and zero location") {
    const double pp = branch_points(ctx).p_plus.to_double();
    double prev_excess = INFINITY;
    for (int n : {2, 4, 8, 16}) {
      MomentData md = moment_data(n, 3 * n + 1);
      TypeIISolution Q = compute_Q(n, md, PrecCtx(256 + 48 * n));
      for (int j : {1, 2})
        for (int k = 0; k < n; ++k) CHECK(weighted_integral(md, Q.Q.poly(), j, k) == 0);
      REQUIRE(Q.zeros.size() == static_cast<size_t>(2 * n));
      CHECK(Q.zeros.front() > 0.0);
      if (n == 4) CHECK(Q.zeros.back() < 12.0);
      double excess = std::max(0.0, Q.zeros.back().to_double() - pp);
      CHECK(excess <= prev_excess);
      prev_excess = excess;
    }
  }

  TEST_CASE("neighbour zeros interlace") {
    for (int n = 2; n <= 6; ++n) {
      MomentData md = moment_data(n, 3 * n + 1);
      RatPoly P = type_ii(md, n - 1, n).poly();
      auto a = compute_Q(n, md, ctx).zeros;
      auto b = real_zeros(P, ctx);
      REQUIRE(b.size() + 1 == a.size());
      for (size_t k = 0; k < b.size(); ++k) {
        CHECK(a[k] < b[k]);
        CHECK(b[k] < a[k + 1]);
      }
    }
  }

  TEST_CASE("type I forms") {
    MomentData md = moment_data(1, 6);
    TypeISolution R = compute_typeI(1, md);
    CHECK(R.form.A1.degree() <= 0);
    CHECK(R.form.A2.degree() <= 0);
    CHECK(form_moment(md, R.form, 0) == 0);
    CHECK(form_moment(md, R.form, 1) == 1);
    BigFloat a1(R.form.A1.is_zero() ? Rational(0) : R.form.A1[0], ctx);
    BigFloat a2(R.form.A2.is_zero() ? Rational(0) : R.form.A2[0], ctx);
    for (int k : {0, 1}) {
      BigComplex i1 = weighted_quad(1, [&](const BigFloat& x) { return BigComplex(pow(x, k)); });
      BigComplex i2 = weighted_quad(2, [&](const BigFloat& x) { return BigComplex(pow(x, k)); });
      BigFloat v = (a1 * i1.re + a2 * i2.re) - static_cast<double>(k);
      CHECK(abs(v).to_double() < 1e-30);
    }
    // biorthogonality: the (3,3) form annihilates Q_1 and Q_2
    MomentData m3 = moment_data(3, 12);
    TypeISolution R3 = compute_typeI(3, m3);
    for (int n : {1, 2}) CHECK(pair_integral(m3, type_ii(m3, n, n).poly(), R3.form) == 0);
    CHECK(form_moment(m3, R3.form, 5) == 1);
  }

  TEST_CASE("cauchy transform") {
    TypeIISolution Q = compute_Q(1, ctx);
    BigComplex z(-10.0, 0.0, ctx);
    BigComplex twopii = i_unit(ctx) * (const_pi(ctx) * 2.0);
    BigComplex direct = weighted_quad(1, [&](const BigFloat& x) { return BigComplex(Q.Q(x)) / (BigComplex(x) - z); }) / twopii;
    CHECK(abs(cauchy_transform(Q.Q.poly(), 1, 1, z) - direct).to_double() < 1e-20);
    BigComplex w(3.0, 2.0, ctx);
    BigComplex d2 = weighted_quad(2, [&](const BigFloat& x) { return BigComplex(Q.Q(x)) / (BigComplex(x) - w); }) / twopii;
    CHECK(abs(cauchy_transform(Q.Q.poly(), 2, 1, w) - d2).to_double() < 1e-20);
    // Plemelj jump at x = 1
    BigFloat x(1L, ctx);
    BigComplex jump = cauchy_transform(Q.Q.poly(), 1, 1, BigComplex(x), Side::Plus) -
                      cauchy_transform(Q.Q.poly(), 1, 1, BigComplex(x), Side::Minus);
    CHECK(abs(jump - BigComplex(Q.Q(x) * eval_w(1, 1, x))).to_double() < 1e-20);
    CHECK_THROWS_AS(cauchy_transform(Q.Q.poly(), 1, 1, BigComplex(x)), BranchError);
    // decay like z^{-n-1} times the first nonvanishing moment
    BigComplex Z(1e5, 1e5, ctx);
    BigComplex far = cauchy_transform(Q.Q.poly(), 1, 1, Z);
    Rational h = weighted_integral(moment_data(1, 6), Q.Q.poly(), 1, 1);
    BigComplex lead = -BigComplex(BigFloat(h, ctx)) / (Z * Z) / twopii;
    CHECK((abs(far - lead) / abs(lead)).to_double() < 1e-4);
  }

  TEST_CASE("Y matrix") {
    RHMatrixY Y(2, ctx);
    CHECK(abs(det3(Y.eval(BigComplex(2.0, 3.0, ctx))) - 1.0).to_double() < 1e-20);
    // Y diag(z^{-2n}, z^n, z^n) = I + O(1/z)
    double err[2];
    for (int k = 0; k < 2; ++k) {
      BigComplex z(std::polar(k == 0 ? 1e4 : 1e6, 0.8), ctx);
      Matrix3 y = Y.eval(z);
      BigComplex s[3] = {pow(z, -4), pow(z, 2), pow(z, 2)};
      err[k] = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) err[k] = std::max(err[k], abs(y[i][j] * s[j] - (i == j ? 1.0 : 0.0)).to_double());
    }
    CHECK(err[1] < 0.02);
    CHECK(err[0] / err[1] > 50);
    // the first column is polynomial: no jump, real first entry
    BigFloat x(2.0, ctx);
    Matrix3 bp = Y.eval_boundary(x, Side::Plus), bm = Y.eval_boundary(x, Side::Minus);
    CHECK(bp[0][0].im.is_zero());
    for (int i = 0; i < 3; ++i) CHECK(abs(bp[i][0] - bm[i][0]).to_double() < 1e-40);
  }

  TEST_CASE("kernel") {
    // n = 1: K(x,y) = sum_{i,j} [A^{-1}]_{ji} x^{i-1} w_j(y), A_ij = int x^{i-1} w_j
    RatMatrix A{{moment(1, 1, 0), moment(2, 1, 0)}, {moment(1, 1, 1), moment(2, 1, 1)}};
    RatMatrix Ai = inverse_exact(A);
    KernelCD K1(1, ctx);
    for (auto [x, y] : {std::pair{0.7, 1.9}, {3.0, 0.4}}) {
      BigFloat X(x, ctx), Yv(y, ctx);
      BigFloat k(ctx);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) k += BigFloat(Ai[j][i], ctx) * pow(X, i) * eval_w(j + 1, 1, Yv);
      CHECK((abs(K1.cd(X, Yv) - k) / abs(k)).to_double() < 1e-40);
    }
    KernelCD K2(2, ctx);
    CHECK(abs(K2.cd(BigFloat(1L, ctx), BigFloat(2L, ctx)) - K2.via_Y(BigFloat(1L, ctx), BigFloat(2L, ctx))).to_double() <
          1e-15);
    CHECK(std::abs(K2.trace_quadrature().to_double() - 4) < 1e-8);
    // reproducing: int K(x, t) Q(t)... the diagonal is the confluent limit of cd
    BigFloat x(2.5, ctx), h(1e-30, ctx);
    CHECK((abs(K2.cd(x + h, x) - K2.diag(x)) / K2.diag(x)).to_double() < 1e-20);
  }
}
