#include "nikishin/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace nikishin {

namespace {

using cd = std::complex<double>;

// Starting points from the upper convex hull of (k, log|a_k|): one circle per
// hull edge, radius from the edge slope, angles offset so circles interleave.
std::vector<cd> newton_polygon_start(const std::vector<cd>& a) {
  const int d = static_cast<int>(a.size()) - 1;
  std::vector<double> la(a.size());
  for (size_t k = 0; k < a.size(); ++k)
    la[k] = std::abs(a[k]) > 0 ? std::log(std::abs(a[k])) : -1e300;
  std::vector<int> hull;
  for (int k = 0; k <= d; ++k) {
    if (la[k] < -1e299) continue;
    while (hull.size() >= 2) {
      int i = hull[hull.size() - 2], j = hull.back();
      // drop j if it lies on or below the segment i..k
      if ((la[j] - la[i]) * (k - i) <= (la[k] - la[i]) * (j - i)) hull.pop_back();
      else break;
    }
    hull.push_back(k);
  }
  std::vector<cd> z;
  const double sigma = 0.7;
  for (size_t e = 0; e + 1 < hull.size(); ++e) {
    int i = hull[e], j = hull[e + 1];
    double r = std::exp((la[i] - la[j]) / (j - i));
    int m = j - i;
    for (int k = 0; k < m; ++k)
      z.push_back(std::polar(r, 2.0 * M_PI * k / m + 2.0 * M_PI * e / d + sigma));
  }
  // zero roots from vanishing low-order coefficients
  while (static_cast<int>(z.size()) < d) z.push_back(cd(0.0, 0.0));
  return z;
}

template <class C>
void horner(const std::vector<C>& a, const C& x, C& p, C& dp) {
  p = a.back();
  dp = a.back() * 0.0;
  for (size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * x + p;
    p = p * x + a[k];
  }
}

}  // namespace

std::vector<BigComplex> roots_all(const std::vector<BigComplex>& coeffs_in, PrecCtx ctx, int max_iter) {
  std::vector<BigComplex> a = coeffs_in;
  while (!a.empty() && a.back().re.is_zero() && a.back().im.is_zero()) a.pop_back();
  if (a.size() < 2) throw ArgumentError("roots_all: polynomial must have positive degree");
  for (auto& c : a) {
    if (c.ctx().bits != ctx.bits) throw PrecisionMismatch("roots_all: coefficient precision differs from ctx");
  }
  const int d = static_cast<int>(a.size()) - 1;
  BigComplex lead = a.back();
  for (auto& c : a) c = c / lead;

  std::vector<cd> ad(a.size());
  for (size_t k = 0; k < a.size(); ++k) ad[k] = a[k].to_complex();
  std::vector<cd> zd = newton_polygon_start(ad);

  // double-precision stage
  for (int it = 0; it < 500; ++it) {
    double worst = 0.0;
    for (int k = 0; k < d; ++k) {
      cd p, dp;
      horner(ad, zd[k], p, dp);
      if (p == 0.0) continue;
      cd ratio = p / dp;
      cd s = 0.0;
      for (int j = 0; j < d; ++j)
        if (j != k) s += 1.0 / (zd[k] - zd[j]);
      cd w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      zd[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1e-300, std::abs(zd[k])));
    }
    if (worst < 1e-14) break;
  }

  std::vector<BigComplex> z;
  z.reserve(d);
  for (auto& v : zd) z.emplace_back(v, ctx);

  const BigFloat tiny = ldexp_one(-static_cast<long>(ctx.bits) + 8, ctx);
  std::vector<bool> done(d, false);
  int quiet_rounds = 0;
  for (int it = 0; it < max_iter && quiet_rounds < 2; ++it) {
    bool all_small = true;
    for (int k = 0; k < d; ++k) {
      if (done[k]) continue;
      BigComplex p(ctx), dp(ctx);
      horner(a, z[k], p, dp);
      if (p.re.is_zero() && p.im.is_zero()) {
        done[k] = true;
        continue;
      }
      BigComplex ratio = p / dp;
      BigComplex s(ctx);
      for (int j = 0; j < d; ++j)
        if (j != k) s += BigFloat(1L, ctx) / (z[k] - z[j]);
      BigComplex w = ratio / (1.0 - ratio * s);
      z[k] -= w;
      BigFloat scale = max(abs(z[k]), tiny);
      if (abs(w) > tiny * scale * 1024.0) all_small = false;
      if (abs(w) <= tiny * scale) done[k] = true;
    }
    quiet_rounds = all_small ? quiet_rounds + 1 : 0;
  }

  // residual test relative to the coefficient scale
  double worst = 0.0;
  const BigFloat bound = ldexp_one(-static_cast<long>(ctx.bits) / 2, ctx);
  for (int k = 0; k < d; ++k) {
    BigComplex p(ctx), dp(ctx);
    horner(a, z[k], p, dp);
    BigFloat scale(ctx), zk = abs(z[k]), pw(1L, ctx);
    for (size_t m = 0; m < a.size(); ++m) {
      scale += abs(a[m]) * pw;
      pw *= zk;
    }
    BigFloat rel = abs(p) / scale;
    worst = std::max(worst, rel.to_double());
    if (rel > bound) {
      throw ConvergenceError("roots_all: Aberth iteration did not converge (worst scaled residual " +
                                 std::to_string(worst) + ")",
                             worst);
    }
  }
  return z;
}

}  // namespace nikishin
