#include <cmath>
#include <random>

#include "doctest.h"
#include "nikishin/curve.hpp"
#include "nikishin/equilibrium.hpp"
#include "nikishin/errors.hpp"

using namespace nikishin;

namespace {

const EquilibriumSolution& solution() {
  static const EquilibriumSolution sol = solve_equilibrium();
  return sol;
}

const PrecCtx ctx(192);

}  // namespace

TEST_SUITE("equilibrium") {
  TEST_CASE("masses and residual") {
    const auto& s = solution();
    CHECK(std::abs(s.mass1 - 2) < 1e-8);
    CHECK(std::abs(s.mass2 - 1) < 1e-8);
    CHECK(s.residual_sup < 1e-8);
    CHECK(s.p_plus == doctest::Approx(11.0901699437));
    CHECK(s.p_minus == doctest::Approx(-0.0901699437));
  }

  TEST_CASE("equality holds on the band, inequalities off it") {
    const auto& s = solution();
    double lo = INFINITY, hi = -INFINITY;
    for (int k = 0; k <= 90; ++k) {
      double x = s.p_plus * (0.05 + 0.01 * k);
      double v = s.eq1_residual(x) + s.omega;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    CHECK(hi - lo < 1e-6 * std::abs(s.omega));
    CHECK(s.eq1_residual(s.p_plus + 1) > 0);
    CHECK(s.eq2_value(s.p_minus / 2) < 0);
    for (double x : {-0.5, -3.0, -40.0}) CHECK(std::abs(s.eq2_value(x)) < 1e-7);
  }

  TEST_CASE("constraint is active exactly on [p-, 0]") {
    const auto& s = solution();
    for (double f : {0.99, 0.5, 0.1}) {
      double x = s.p_minus * f;
      CHECK(std::abs(s.lambda2_density(x) * 2 * std::sqrt(-x) - 1) < 1e-10);
      CHECK(std::abs(s.nu_density(x)) < 1e-10);
    }
    for (double x : {-0.1, -0.5, -2.0, -10.0, -100.0}) CHECK(s.nu_density(x) > 0);
  }

  TEST_CASE("LS solution against the closed form") {
    const auto& s = solution();
    for (double x : {0.3, 1.0, 2.0, 5.0, 8.0, 10.5})
      CHECK(std::abs(s.lambda1_density(x) - lambda1_density_exact(BigFloat(x, ctx)).to_double()) < 1e-7);
    for (double t : {0.5, 1.0, 3.0, 10.0})
      CHECK(std::abs(s.kappa(t) - kappa_exact(BigFloat(t, ctx)).to_double()) < 1e-7);
    CHECK(std::abs(s.omega - (6 - 2 * std::log(2.0))) < 1e-8);
    for (auto z : {std::complex<double>(15, 0), {3, 4}, {-2, 0.5}}) {
      auto g = s.g(1, z);
      auto e = g1_exact(BigComplex(z, ctx)).to_complex();
      CHECK(std::abs(g - e) < 1e-7);
    }
    auto g2 = s.g(2, std::complex<double>(4.0, 0.0), Side::Plus);
    CHECK(std::abs(g2.real() - g2_exact(BigFloat(4.0, ctx)).re.to_double()) < 1e-7);
  }

  TEST_CASE("g-functions") {
    const auto& s = solution();
    const std::complex<double> big(1e6, 0);
    CHECK(std::abs(s.g(1, big) - 2.0 * std::log(big)) < 1e-4);
    // g2 - log z decays only like z^{-1/2}
    CHECK(std::abs(s.g(2, big) - std::log(big)) < 5 / std::sqrt(big.real()));
    CHECK_THROWS_AS(s.g(1, std::complex<double>(3, 0)), BranchError);
    double x = s.p_plus / 2;
    auto jump = s.g(1, x, Side::Plus) - s.g(1, x, Side::Minus);
    CHECK(std::abs(jump.imag() - 2 * M_PI * s.mass1_above(x)) < 1e-7);
    CHECK(std::abs(jump.real()) < 1e-9);
    // g2 jump below the support: 2 pi lambda_2((x, 0])
    double y = -3.0;
    auto j2 = s.g(2, y, Side::Plus) - s.g(2, y, Side::Minus);
    CHECK(std::abs(j2.imag() - 2 * M_PI * s.mass2_between(y)) < 1e-7);
  }

  TEST_CASE("psi") {
    const auto& s = solution();
    for (double x : {0.5, 3.0, 9.0}) {
      CHECK(std::abs(eval_psi(s, x, Side::Plus).real()) < 1e-8);
      auto pp = eval_psi(s, x, Side::Plus), pm = eval_psi(s, x, Side::Minus);
      CHECK(std::abs(pp + pm) < 1e-8);
    }
    CHECK(std::abs(std::abs(eval_psi(s, 1e-12, Side::Plus)) - 4 * M_PI) < 1e-4);
    // normal derivative of Re psi at the band equals -2 pi lambda_1'
    double x = s.p_plus / 2, h = 1e-5;
    double up = (eval_psi(s, {x, h}).real() - eval_psi(s, x, Side::Plus).real()) / h;
    CHECK(up == doctest::Approx(-2 * M_PI * s.lambda1_density(x)).epsilon(1e-3));
    // the two determinations of e^psi agree off the band
    auto far = eval_psi(s, {5.0, 0.3});
    CHECK(std::isfinite(far.real()));
    CHECK(std::abs(eval_psi_hat(s, s.p_minus * 2)) > 0);
  }

  TEST_CASE("summary conditions") {
    const auto& s = solution();
    SummaryGReport r = verify_summaryG(s);
    CHECK(r.violations.empty());
    CHECK(r.i_equality < 1e-6);
    CHECK(r.i_margin > 0);
    CHECK(r.ii_equality < 1e-6);
    CHECK(r.ii_margin > 0);
    CHECK(r.iii_equality < 1e-6);
    CHECK(r.iv_equality < 1e-6);
    CHECK(r.v_max <= 1e-9);
    CHECK(r.vi_margin > 0);
  }

  TEST_CASE("omega is reproduced at interior points") {
    const auto& s = solution();
    for (double o : omega_samples(s, {1.0, 5.0, 10.0})) CHECK(std::abs(o - s.omega) < 1e-6);
  }

  TEST_CASE("energy functional") {
    const auto& s = solution();
    ObjectiveJ J(s);
    const double J0 = J(s.c, s.d);
    CHECK(J0 == doctest::Approx(18 - 4 * std::log(2.0)).epsilon(1e-6));
    auto [m1, m2] = J.masses(s.c, s.d);
    CHECK(std::abs(m1 - 2) < 1e-8);
    CHECK(std::abs(m2 - 1) < 1e-8);

    std::mt19937_64 rng(5);
    std::normal_distribution<double> N(0, 1);
    int tried = 0, worse = 0;
    std::vector<double> dir0;
    while (tried < 50) {
      std::vector<double> raw(J.n1() + J.n2());
      for (auto& v : raw) v = N(rng);
      auto dir = J.mass_free_direction(raw);
      double norm = 0;
      for (double v : dir) norm += v * v;
      for (auto& v : dir) v *= 1e-3 / std::sqrt(norm);
      std::vector<double> c = s.c, d = s.d;
      for (int k = 0; k < J.n1(); ++k) c[k] += dir[k];
      for (int k = 0; k < J.n2(); ++k) d[k] += dir[J.n1() + k];
      try {
        J.check_admissible(c, d);
      } catch (const DomainError&) {
        continue;
      }
      if (dir0.empty()) dir0 = dir;
      ++tried;
      worse += J(c, d) >= J0 - 1e-12;
    }
    CHECK(worse == 50);

    // stationarity: the change is quadratic in the step
    auto step = [&](double t) {
      std::vector<double> c = s.c, d = s.d;
      for (int k = 0; k < J.n1(); ++k) c[k] += t * dir0[k] / 1e-3;
      for (int k = 0; k < J.n2(); ++k) d[k] += t * dir0[J.n1() + k] / 1e-3;
      return J(c, d) - J0;
    };
    double p = std::log(step(2e-3) / step(1e-3)) / std::log(2.0);
    CHECK(p == doctest::Approx(2).epsilon(0.05));

    // log 1/(2|x-y|) = log 1/|x-y| - log 2 for each interaction term
    CHECK(J(s.c, s.d, 2.0) - J0 == doctest::Approx(-6 * std::log(2.0)).epsilon(1e-8));
    std::vector<double> bad = s.c;
    bad[0] -= 100;
    CHECK_THROWS_AS(J.check_admissible(bad, s.d), DomainError);
  }
}
