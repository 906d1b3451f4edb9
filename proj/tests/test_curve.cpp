#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "nikishin/curve.hpp"
#include "nikishin/errors.hpp"

using namespace nikishin;

namespace {
const PrecCtx ctx(256);
BigComplex C(double re, double im) { return BigComplex(re, im, ctx); }
}  // namespace

TEST_SUITE("curve") {
  TEST_CASE("branch points") {
    BranchPoints bp = branch_points(ctx);
    CHECK(bp.p_plus.to_double() == doctest::Approx(11.09016994).epsilon(1e-9));
    CHECK(bp.p_minus.to_double() == doctest::Approx(-0.09016994).epsilon(1e-7));
    // p+ = (2/(sqrt5 - 1))^5
    CHECK(abs(bp.p_plus - pow(2.0 / (sqrt(BigFloat(5L, ctx)) - 1.0), 5)).to_double() < 1e-70);
    CHECK(abs(forward_map(BigComplex(bp.q_plus)) - BigComplex(bp.p_plus)).to_double() < 1e-70);
    CHECK(abs(forward_map(BigComplex(bp.q_minus)) - BigComplex(bp.p_minus)).to_double() < 1e-70);
    CHECK(abs(forward_map(C(-1, 0))).to_double() < 1e-70);
  }

  TEST_CASE("forward map derivative") {
    BranchPoints bp = branch_points(ctx);
    CHECK(abs(forward_map_derivative(BigComplex(bp.q_plus))).to_double() < 1e-70);
    CHECK(abs(forward_map_derivative(BigComplex(bp.q_minus))).to_double() < 1e-70);
    // central differences
    for (auto zeta : {C(0.3, 0.2), C(2.0, -1.0), C(-3.0, 0.5)}) {
      BigComplex h = C(1e-20, 0);
      BigComplex fd = (forward_map(zeta + h) - forward_map(zeta - h)) / (h * 2.0);
      CHECK(abs(fd - forward_map_derivative(zeta)).to_double() < 1e-30);
    }
    CHECK_THROWS_AS(forward_map(C(0, 0)), DomainError);
  }

  TEST_CASE("large z anchor") {
    BranchTriple b = branches_at(C(1e6, 0));
    CHECK(std::abs(b.zeta[0].re.to_double() - (1 - 2e-6)) < 1e-11);
    for (double R : {1e4, 1e6}) {
      for (double th : {0.4, 1.9, -2.2}) {
        BigComplex z(std::polar(R, th), ctx);
        auto s = branch_series(z);
        BranchTriple t = branches_at(z);
        for (int j = 0; j < 3; ++j) CHECK(abs(t.zeta[j] - s[j]).to_double() < 1e2 * std::pow(R, -3));
      }
    }
  }

  TEST_CASE("roots satisfy the cubic and map back") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-20, 20);
    for (int t = 0; t < 200; ++t) {
      BigComplex z = C(U(rng), U(rng));
      BranchTriple b = branches_at(z);
      for (const auto& x : b.zeta) CHECK(abs(forward_map(x) - z).to_double() < 1e-60);
      // the three roots are distinct
      CHECK(abs(b.zeta[0] - b.zeta[1]).to_double() > 1e-10);
      CHECK(abs(b.zeta[1] - b.zeta[2]).to_double() > 1e-10);
    }
  }

  TEST_CASE("labels respect conjugation") {
    for (auto z : {C(3, 2), C(-7, 0.4), C(20, 15)}) {
      BranchTriple a = branches_at(z), b = branches_at(conj(z));
      for (int j = 0; j < 3; ++j) CHECK(abs(conj(a.zeta[j]) - b.zeta[j]).to_double() < 1e-60);
    }
  }

  TEST_CASE("real axis: sides and cuts") {
    CHECK_THROWS_AS(branches_at(BigFloat(3.0, ctx), Side::None), BranchError);
    CHECK_THROWS_AS(branches_at(BigFloat(-5.0, ctx), Side::None), BranchError);
    // beyond p+ and in the gap (p-, 0) no side is needed and all roots are real
    BranchTriple b = branches_at(C(20, 0));
    for (const auto& x : b.zeta) CHECK(abs(x.im).to_double() < 1e-60);
    BranchTriple g = branches_at(C(-0.05, 0));
    CHECK(abs(g.zeta[0].im).to_double() < 1e-60);
    // zeta_1 boundary values on the band are conjugate
    BranchTriple p = branches_at(BigFloat(5.0, ctx), Side::Plus), m = branches_at(BigFloat(5.0, ctx), Side::Minus);
    CHECK(p.zeta[0].im > 0.0);
    CHECK(abs(conj(p.zeta[0]) - m.zeta[0]).to_double() < 1e-60);
    // zeta_1 and zeta_2 swap across the band
    CHECK(abs(p.zeta[0] - m.zeta[1]).to_double() < 1e-60);
  }

  TEST_CASE("collisions") {
    BranchPoints bp = branch_points(ctx);
    // square-root collision: |zeta_1 - zeta_2| / sqrt(z - p+) tends to a constant
    std::vector<double> ratio;
    for (double d : {1e-2, 1e-4, 1e-6}) {
      BranchTriple b = branches_at(BigComplex(bp.p_plus + d));
      ratio.push_back(abs(b.zeta[0] - b.zeta[1]).to_double() / std::sqrt(d));
    }
    CHECK(ratio[2] == doctest::Approx(ratio[1]).epsilon(0.01));
    CHECK(ratio[1] == doctest::Approx(ratio[0]).epsilon(0.1));
    double prev = 1e9;
    for (double d : {1e-2, 1e-3, 1e-4}) {
      BranchTriple b = branches_at(BigComplex(bp.p_minus - d), Side::Plus);
      double gap = abs(b.zeta[1] - b.zeta[2]).to_double();
      CHECK(gap < prev);
      prev = gap;
    }
    // near 0 two branches blow up like z^{-1/2} and the third goes to -1
    BranchTriple b = branches_at(C(1e-6, 1e-6));
    int big = 0;
    double third = 1e9;
    for (const auto& x : b.zeta) {
      if (abs(x).to_double() > 100) ++big;
      else third = abs(x + 1.0).to_double();
    }
    CHECK(big == 2);
    CHECK(third < 1e-4);
  }

  TEST_CASE("H") {
    CHECK(abs(eval_H(C(1, 0)) - 1.0).to_double() < 1e-70);
    CHECK(abs(eval_H(C(2, 0)) - BigComplex(sqrt(BigFloat(6L, ctx) / 5.0))).to_double() < 1e-70);
    CHECK_THROWS_AS(eval_H(C(0.2, 0)), BranchError);
  }
}
