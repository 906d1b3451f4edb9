#include <cmath>
#include <map>
#include <random>

#include "doctest.h"
#include "nikishin/asymptotics.hpp"
#include "nikishin/curve.hpp"
#include "nikishin/errors.hpp"

using namespace nikishin;

namespace {

const PrecCtx ctx(256);

const TypeIISolution& Q(int n) {
  static std::map<int, TypeIISolution> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_Q(n, precision_for(n))).first;
  return it->second;
}

}  // namespace

TEST_SUITE("asymptotics") {
  TEST_CASE("parametrix determinant is constant") {
    GlobalParametrix G(ctx);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-25, 25);
    BigComplex d0 = G.det_hat(BigComplex(3.0, 4.0, ctx));
    double spread = 0;
    for (int t = 0; t < 200; ++t) {
      BigComplex z(std::complex<double>(U(rng), U(rng)), ctx);
      spread = std::max(spread, abs(G.det_hat(z) - d0).to_double());
    }
    CHECK(spread < 1e-15);
    // value for the entries as printed (the product of the normalizations is 1/4 times i)
    CHECK(abs(d0 - i_unit(ctx) * 0.25).to_double() < 1e-60);
  }

  TEST_CASE("parametrix normalization and jumps") {
    GlobalParametrix G(ctx);
    CHECK(abs(G.N(BigComplex(1e6, 0.0, ctx))[0][0] - 1.0).to_double() < 1e-4);
    CHECK(G.jump_residual_band(BigFloat(5.0, ctx)).to_double() < 1e-8);
    for (int k = 1; k <= 20; ++k) {
      CHECK(G.jump_residual_band(BigFloat(0.53 * k, ctx)).to_double() < 1e-8);
      CHECK(G.jump_residual_tail(BigFloat(-0.1 - 0.7 * k * k, ctx)).to_double() < 1e-8);
    }
    // normalization at infinity to O(z^{-1/2})
    double r4 = G.infinity_residual(BigComplex(std::polar(1e4, 1.0), ctx)).to_double();
    double r8 = G.infinity_residual(BigComplex(std::polar(1e8, 1.0), ctx)).to_double();
    CHECK(r8 < r4 / 50);
    CHECK_THROWS_AS(G.jump_residual_band(BigFloat(20.0, ctx)), DomainError);
  }

  TEST_CASE("H is F_1 / r_1 on the first sheet") {
    GlobalParametrix G(ctx);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> U(-30, 30);
    for (int t = 0; t < 100; ++t) {
      BigComplex z(std::complex<double>(U(rng), U(rng)), ctx);
      BigComplex h = eval_H(branches_at(z).zeta[0]);
      CHECK(abs(h - G.N(z)[0][0]).to_double() < 1e-20);
      // no zeros or poles of H o zeta_1 in the sampled region
      CHECK(abs(h).to_double() > 1e-3);
      CHECK(abs(h).to_double() < 1e3);
    }
  }

  TEST_CASE("F_j blow up like |zeta - q|^{-1/2} at the branch points") {
    BranchPoints bp = branch_points(ctx);
    for (const BigFloat* q : {&bp.q_plus, &bp.q_minus}) {
      std::vector<double> prod;
      for (double e : {1e-6, 1e-10, 1e-14}) {
        BigComplex zeta = BigComplex(*q) + BigComplex(0.0, e, ctx);
        BigComplex sd = sqrt(zeta * (zeta * zeta + zeta - 1.0));
        prod.push_back(abs(GlobalParametrix::F(0, zeta, sd)).to_double() * std::sqrt(e));
      }
      CHECK(prod[2] == doctest::Approx(prod[1]).epsilon(1e-3));
      CHECK(prod[1] == doctest::Approx(prod[0]).epsilon(1e-3));
    }
  }

  TEST_CASE("outer asymptotics") {
    for (auto zc : {std::complex<double>(-1, 1), {-1, -1}, {15, 0}, {30, 0}, {5, 5}}) {
      double lo = INFINITY, hi = 0;
      for (int n : {4, 8, 16}) {
        OuterResult r = outer_asymptotics(Q(n), BigComplex(zc, precision_for(n)));
        double s = r.relerr * n * (std::abs(zc) + 1);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      CHECK(hi < 5);
      CHECK(hi / lo < 3);
    }
    CHECK_THROWS_AS(outer_asymptotics(Q(4), BigComplex(2.0, 0.0, precision_for(4))), DomainError);
  }

  TEST_CASE("band asymptotics") {
    BandResult b = band_asymptotics(Q(8), BigFloat(5.0, precision_for(8)));
    CHECK(std::abs(b.prediction.im.to_double()) < 1e-20);
    CHECK(b.scaled_error < 0.05);
    int zeros = 0;
    for (const auto& z : Q(8).zeros) zeros += z > 1.0 && z < 10.0;
    CHECK(std::abs(band_sign_changes(8, 1.0, 10.0, 600, precision_for(8)) - zeros) <= 1);
    CHECK(band_asymptotics(Q(16), BigFloat(5.0, precision_for(16))).scaled_error < b.scaled_error);
  }

  TEST_CASE("kernel limits") {
    KernelCD K8(8, precision_for(8)), K16(16, precision_for(16));
    const double pp = branch_points(ctx).p_plus.to_double();
    for (double x : {2.0, 0.1 * pp, 0.9 * pp}) {
      DensityResult a = density_limit(K8, x), b = density_limit(K16, x);
      // edge effects are O(1/n) with a large constant; only the trend is pinned near the edges
      CHECK(b.relerr < a.relerr);
      if (x == 2.0) CHECK(b.relerr < 0.1);
      CHECK(a.lambda1 == doctest::Approx(b.lambda1));
    }
    CHECK(sine_kernel_limit(K16, 2.0, 0.3, 0.3).scaled == doctest::Approx(1).epsilon(0.05));
    SineResult s = sine_kernel_limit(K16, 2.0, 0.5, -0.5);
    CHECK(std::abs(s.scaled) < 0.15);
    CHECK(s.sinc == doctest::Approx(0).scale(1));
    CHECK_THROWS_AS(sine_kernel_limit(K16, 20.0, 0, 0), DomainError);
  }

  TEST_CASE("n-th root asymptotics") {
    double prev = INFINITY;
    for (int n : {4, 8, 16}) {
      double e = nth_root_check(Q(n), BigComplex(20.0, 0.0, precision_for(n)));
      CHECK(e < prev);
      prev = e;
    }
    CHECK(nth_root_check(Q(16), BigComplex(20.0, 0.0, precision_for(16))) < std::log(16.0) / 16);
    CHECK(nth_root_check(Q(16), BigComplex(-2.0, 0.0, precision_for(16))) < std::log(16.0) / 16);
  }

  TEST_CASE("zero counting measure approaches lambda_1 / 2") {
    EquilibriumSolution sol = solve_equilibrium();
    double k4 = ks_distance(Q(4).zeros, sol), k16 = ks_distance(Q(16).zeros, sol);
    CHECK(k16 < k4);
  }

  TEST_CASE("rate fitting") {
    std::vector<ConvergenceSample> s;
    for (int n : {2, 4, 8, 16}) s.push_back({n, "", 3.0 / (n * n)});
    CHECK(fit_rate(s) == doctest::Approx(2));
    CHECK(fit_rate({}) == 0);
    CHECK(precision_for(0).bits == 256);
    CHECK(precision_for(16).bits == 256 + 48 * 16);
    CHECK(to_string(Target::SineKernel) == "sine");
  }
}
