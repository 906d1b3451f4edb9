#include <cmath>

#include "doctest.h"
#include "nikishin/errors.hpp"
#include "nikishin/quadrature.hpp"
#include "nikishin/weights.hpp"

using namespace nikishin;

namespace {
const PrecCtx ctx(256);
}

TEST_SUITE("weights") {
  TEST_CASE("weight values") {
    BigFloat pi = const_pi(ctx);
    CHECK(abs(eval_w(1, 1, BigFloat(1L, ctx)) - 1.0 / sinh(pi)).to_double() < 1e-70);
    CHECK(abs(eval_w(2, 1, BigFloat(1L, ctx)) - 1.0 / cosh(pi)).to_double() < 1e-70);
    CHECK(eval_w(1, 1, BigFloat(1L, ctx)).to_double() == doctest::Approx(0.086589).epsilon(1e-5));
    CHECK(eval_w(2, 1, BigFloat(1L, ctx)).to_double() == doctest::Approx(0.086267).epsilon(1e-5));
    CHECK(abs(eval_w(2, 2, BigFloat(4L, ctx)) - 1.0 / (2.0 * cosh(pi * 4.0))).to_double() < 1e-80);
    // complex argument agrees with the real one on the positive axis
    BigComplex wz = eval_w(1, 3, BigComplex(BigFloat(2.5, ctx)));
    CHECK(abs(wz - BigComplex(eval_w(1, 3, BigFloat(2.5, ctx)))).to_double() < 1e-70);
    CHECK_THROWS_AS(eval_w(1, 1, BigComplex(BigFloat(-1.0, ctx))), BranchError);
  }

  TEST_CASE("upsilon") {
    BigFloat pi = const_pi(ctx);
    CHECK(abs(eval_upsilon(BigComplex(BigFloat(1L, ctx))) - BigComplex(exp(pi))).to_double() < 1e-70);
    CHECK(abs(eval_upsilon(BigComplex(BigFloat(4L, ctx))) - BigComplex(exp(pi * 2.0))).to_double() < 1e-65);
    // boundary values on the negative axis multiply to 1
    BigComplex up = eval_upsilon(BigComplex(-1.0, 1e-60, ctx)), dn = eval_upsilon(BigComplex(-1.0, -1e-60, ctx));
    CHECK(abs(up * dn - 1.0).to_double() < 1e-50);
    CHECK(abs(abs(up) - 1.0).to_double() < 1e-50);
  }

  TEST_CASE("weight relations") {
    for (auto [n, z] : {std::pair{1, BigComplex(2.0, 1.0, ctx)}, {4, BigComplex(0.5, 0.0, ctx)},
                        {2, BigComplex(-3.0, 0.01, ctx)}}) {
      RelationsWReport r = check_relationsW(n, z);
      CHECK(r.sum_identity.to_double() < 1e-60);
      CHECK(r.reciprocal_identity.to_double() < 1e-60);
    }
  }

  TEST_CASE("low moments") {
    CHECK(moment(1, 1, 0) == Rational(1, 2));
    CHECK(moment(2, 1, 0) == Rational(1));
    CHECK(moment(1, 1, 1) == Rational(1, 4));
    CHECK(moment(1, 1, 2) == Rational(1, 2));
    CHECK(moment(2, 1, 1) == Rational(1, 4));
    CHECK(moment(2, 1, 2) == Rational(5, 16));
    MomentTable t = moments(2, 3, 6);
    REQUIRE(t.values.size() == 7);
    for (int k = 0; k <= 6; ++k) CHECK(t.values[k] * rational_pow(Rational(3), 2 * k + 1) == moment(2, 1, k));
    CHECK_THROWS_AS(moments(3, 1, 4), ArgumentError);
  }

  TEST_CASE("moments against independent quadrature") {
    // x = u^2 on a fixed Gauss-Legendre panel grid, separate from the library oracle
    for (int j : {1, 2})
      for (int k : {0, 3, 7}) {
        RealFn f = [&](const BigFloat& u) {
          BigFloat pi = const_pi(u.ctx());
          if (j == 1) {
            if (u.is_zero()) return k == 0 ? 2.0 / pi : BigFloat(u.ctx());
            return 2.0 * pow(u, 2 * k + 1) / sinh(pi * u);
          }
          return 2.0 * pow(u, 2 * k) / cosh(pi * u);
        };
        std::vector<BigFloat> br;
        for (int p = 0; p <= 240; ++p) br.emplace_back(0.25 * p, ctx);
        BigFloat q = integrate_panels(f, br, 40);
        BigFloat m(moment(j, 1, k), ctx);
        CHECK((abs(q - m) / m).to_double() < 1e-40);
      }
  }

  TEST_CASE("tanh partial fractions") {
    BigComplex z(BigFloat(1L, ctx));
    double r1 = tanh_partial_fractions_check(z, 1000).to_double();
    double r2 = tanh_partial_fractions_check(z, 10000).to_double();
    CHECK(r1 < 1e-3);
    CHECK(r2 < r1 / 5);
    double r4 = tanh_partial_fractions_check(BigComplex(BigFloat(4L, ctx)), 10000).to_double();
    CHECK(r4 < 1e-4);
    CHECK(tanh_partial_fractions_check(BigComplex(ctx), 10000).to_double() < 1e-4);
  }

  TEST_CASE("discrete measure") {
    DiscreteMeasure s = sigma2(), sn = sigma2n(3);
    CHECK(s.atom(0) == Rational(-1));
    CHECK(s.atom(2) == Rational(-25));
    CHECK(sn.atom(1) == Rational(-1, 4));
  }
}
