#include "nikishin/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace nikishin {

namespace {

std::mutex g_mutex;
std::map<std::pair<int, unsigned>, std::unique_ptr<GaussRule>> g_rules;
std::map<int, std::unique_ptr<GaussRuleD>> g_rules_d;

// Legendre P_n and P_n' by the three-term recurrence.
template <class T>
void legendre(int n, const T& x, T& p, T& dp) {
  T p0 = x * 0.0 + 1.0;
  T p1 = x;
  for (int k = 2; k <= n; ++k) {
    T p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
    p0 = p1;
    p1 = p2;
  }
  p = n == 0 ? p0 : p1;
  dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
}

std::vector<double> initial_roots(int n) {
  std::vector<double> r(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p, dp;
      legendre(n, x, p, dp);
      double dx = p / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    r[i] = x;
  }
  return r;  // descending
}

}  // namespace

const GaussRuleD& gauss_legendre_d(int npts) {
  if (npts < 1) throw ArgumentError("gauss_legendre: npts must be positive");
  std::lock_guard<std::mutex> lock(g_mutex);
  auto& slot = g_rules_d[npts];
  if (!slot) {
    auto rule = std::make_unique<GaussRuleD>();
    if (npts == 1) {
      rule->nodes = {0.0};
      rule->weights = {2.0};
    } else {
      auto r = initial_roots(npts);
      for (int i = npts - 1; i >= 0; --i) {
        double p, dp;
        legendre(npts, r[i], p, dp);
        rule->nodes.push_back(r[i]);
        rule->weights.push_back(2.0 / ((1.0 - r[i] * r[i]) * dp * dp));
      }
    }
    slot = std::move(rule);
  }
  return *slot;
}

const GaussRule& gauss_legendre(int npts, PrecCtx ctx) {
  if (npts < 1) throw ArgumentError("gauss_legendre: npts must be positive");
  std::lock_guard<std::mutex> lock(g_mutex);
  auto& slot = g_rules[{npts, ctx.bits}];
  if (!slot) {
    auto rule = std::make_unique<GaussRule>();
    if (npts == 1) {
      rule->nodes.emplace_back(ctx);
      rule->weights.emplace_back(2L, ctx);
    } else {
      auto r = initial_roots(npts);
      const int half = npts / 2;
      std::vector<BigFloat> pos_x, pos_w;
      for (int i = 0; i < half; ++i) {
        BigFloat x(r[i], ctx), p(ctx), dp(ctx);
        // Newton doubles the correct bits each step
        int iters = 4 + static_cast<int>(std::ceil(std::log2(ctx.bits / 40.0 + 1.0)));
        for (int it = 0; it < iters; ++it) {
          legendre(npts, x, p, dp);
          x -= p / dp;
        }
        legendre(npts, x, p, dp);
        pos_x.push_back(x);
        pos_w.push_back(2.0 / ((1.0 - x * x) * dp * dp));
      }
      for (int i = 0; i < half; ++i) {
        rule->nodes.push_back(-pos_x[i]);
        rule->weights.push_back(pos_w[i]);
      }
      if (npts % 2 == 1) {
        BigFloat z(ctx), p(ctx), dp(ctx);
        legendre(npts, z, p, dp);
        rule->nodes.push_back(z);
        rule->weights.push_back(2.0 / (dp * dp));
      }
      for (int i = half - 1; i >= 0; --i) {
        rule->nodes.push_back(pos_x[i]);
        rule->weights.push_back(pos_w[i]);
      }
    }
    slot = std::move(rule);
  }
  return *slot;
}

BigFloat integrate_panels(const RealFn& f, const std::vector<BigFloat>& breaks, int npts) {
  PrecCtx ctx = breaks.front().ctx();
  const GaussRule& g = gauss_legendre(npts, ctx);
  BigFloat total(ctx);
  for (size_t k = 0; k + 1 < breaks.size(); ++k) {
    BigFloat h = (breaks[k + 1] - breaks[k]) / 2.0;
    BigFloat m = (breaks[k + 1] + breaks[k]) / 2.0;
    BigFloat s(ctx);
    for (int i = 0; i < npts; ++i) s += g.weights[i] * f(m + h * g.nodes[i]);
    total += h * s;
  }
  return total;
}

BigComplex integrate_panels(const ComplexFn& f, const std::vector<BigFloat>& breaks, int npts) {
  PrecCtx ctx = breaks.front().ctx();
  const GaussRule& g = gauss_legendre(npts, ctx);
  BigComplex total(ctx);
  for (size_t k = 0; k + 1 < breaks.size(); ++k) {
    BigFloat h = (breaks[k + 1] - breaks[k]) / 2.0;
    BigFloat m = (breaks[k + 1] + breaks[k]) / 2.0;
    BigComplex s(ctx);
    for (int i = 0; i < npts; ++i) s += f(m + h * g.nodes[i]) * g.weights[i];
    total += s * h;
  }
  return total;
}

namespace {

BigFloat panel(const RealFn& f, const BigFloat& a, const BigFloat& b, const GaussRule& g) {
  BigFloat h = (b - a) / 2.0;
  BigFloat m = (b + a) / 2.0;
  BigFloat s(a.ctx());
  for (size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * f(m + h * g.nodes[i]);
  return h * s;
}

BigFloat adapt(const RealFn& f, const BigFloat& a, const BigFloat& b, const BigFloat& whole,
               const BigFloat& tol, const GaussRule& g, int depth) {
  BigFloat mid = (a + b) / 2.0;
  BigFloat left = panel(f, a, mid, g);
  BigFloat right = panel(f, mid, b, g);
  BigFloat both = left + right;
  if (depth <= 0 || abs(both - whole) <= tol) return both;
  return adapt(f, a, mid, left, tol / 2.0, g, depth - 1) + adapt(f, mid, b, right, tol / 2.0, g, depth - 1);
}

}  // namespace

BigFloat integrate_adaptive(const RealFn& f, const BigFloat& a, const BigFloat& b, const BigFloat& tol,
                            int npts, int max_depth) {
  const GaussRule& g = gauss_legendre(npts, a.ctx());
  return adapt(f, a, b, panel(f, a, b, g), tol, g, max_depth);
}

std::vector<BigFloat> graded_breaks(const BigFloat& a, const BigFloat& b, double ratio, int levels) {
  std::vector<BigFloat> pts{a};
  BigFloat len = b - a;
  std::vector<BigFloat> inner;
  BigFloat h = len;
  for (int k = 0; k < levels; ++k) {
    h *= ratio;
    inner.push_back(a + h);
  }
  for (auto it = inner.rbegin(); it != inner.rend(); ++it) pts.push_back(*it);
  pts.push_back(b);
  return pts;
}

}  // namespace nikishin
