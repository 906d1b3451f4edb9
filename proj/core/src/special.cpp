#include "nikishin/special.hpp"

#include <mutex>
#include <vector>

namespace nikishin {

namespace {

std::mutex g_mutex;
std::vector<Rational> g_bern{Rational(1), Rational(-1, 2)};
std::vector<Rational> g_euler{Rational(1)};  // even-index Euler numbers E_0, E_2, ...

}  // namespace

Rational bernoulli(int m) {
  if (m < 2 || (m % 2) != 0)
    throw ArgumentError("bernoulli: index must be even and >= 2, got " + std::to_string(m));
  std::lock_guard<std::mutex> lock(g_mutex);
  // sum_{k=0}^{j} C(j+1,k) B_k = 0
  for (int j = static_cast<int>(g_bern.size()); j <= m; ++j) {
    Rational s(0);
    for (int k = 0; k < j; ++k) {
      if (k > 1 && (k % 2) == 1) continue;
      s += Rational(binomial(static_cast<unsigned long>(j + 1), static_cast<unsigned long>(k))) * g_bern[k];
    }
    Rational b = (j > 1 && (j % 2) == 1) ? Rational(0) : Rational(-s / (j + 1));
    g_bern.push_back(b);
  }
  return g_bern[m];
}

Rational euler_number(int m) {
  if (m < 0 || (m % 2) != 0)
    throw ArgumentError("euler_number: index must be even and nonnegative, got " + std::to_string(m));
  std::lock_guard<std::mutex> lock(g_mutex);
  // sum_{k=0}^{j} C(2j,2k) E_{2k} = 0 for j >= 1
  for (int j = static_cast<int>(g_euler.size()); j <= m / 2; ++j) {
    Rational s(0);
    for (int k = 0; k < j; ++k)
      s += Rational(binomial(static_cast<unsigned long>(2 * j), static_cast<unsigned long>(2 * k))) * g_euler[k];
    g_euler.push_back(-s);
  }
  return g_euler[m / 2];
}

Rational zeta_even(int s) {
  if (s < 2 || (s % 2) != 0)
    throw ArgumentError("zeta_even: argument must be even and >= 2, got " + std::to_string(s));
  // zeta(s) = (-1)^{s/2+1} B_s (2 pi)^s / (2 s!)
  Rational r = bernoulli(s) * Rational(mpz_class(1) << (s - 1)) / Rational(factorial(static_cast<unsigned long>(s)));
  if ((s / 2) % 2 == 0) r = -r;
  return r;
}

Rational beta_odd(int s) {
  if (s < 1 || (s % 2) != 1)
    throw ArgumentError("beta_odd: argument must be odd and >= 1, got " + std::to_string(s));
  // beta(2m+1) = (-1)^m E_{2m} pi^{2m+1} / (4^{m+1} (2m)!)
  const int m = (s - 1) / 2;
  Rational r = euler_number(2 * m) /
               Rational(factorial(static_cast<unsigned long>(2 * m)) * (mpz_class(1) << (2 * m + 2)));
  if (m % 2 == 1) r = -r;
  return r;
}

}  // namespace nikishin
