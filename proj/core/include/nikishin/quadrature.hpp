#pragma once

#include <functional>
#include <vector>

#include "nikishin/bigfloat.hpp"

namespace nikishin {

struct GaussRule {
  std::vector<BigFloat> nodes;    // ascending, on [-1, 1]
  std::vector<BigFloat> weights;
};

struct GaussRuleD {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule exact to the context precision; cached per (npts, bits).
const GaussRule& gauss_legendre(int npts, PrecCtx ctx);
const GaussRuleD& gauss_legendre_d(int npts);

using RealFn = std::function<BigFloat(const BigFloat&)>;
using ComplexFn = std::function<BigComplex(const BigFloat&)>;

// Fixed rule applied on every panel [breaks[i], breaks[i+1]].
BigFloat integrate_panels(const RealFn& f, const std::vector<BigFloat>& breaks, int npts);
BigComplex integrate_panels(const ComplexFn& f, const std::vector<BigFloat>& breaks, int npts);

// Adaptive bisection comparing an npts rule against the rule on the two halves.
// tol is absolute.
BigFloat integrate_adaptive(const RealFn& f, const BigFloat& a, const BigFloat& b, const BigFloat& tol,
                            int npts = 24, int max_depth = 40);

// Breakpoints on [a, b] refined geometrically toward a (ratio, levels).
std::vector<BigFloat> graded_breaks(const BigFloat& a, const BigFloat& b, double ratio, int levels);

}  // namespace nikishin
