#include "nikishin/rational.hpp"

#include <algorithm>
#include <utility>

namespace nikishin {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw ArgumentError("not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

Rational rational_pow(const Rational& q, long k) {
  if (k < 0) {
    if (q == 0) throw ArgumentError("rational_pow: zero to a negative power");
    return rational_pow(Rational(1) / q, -k);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(k));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// ---------------------------------------------------------------------------

RatPoly::RatPoly(RatVector coeffs) : c_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

BigFloat RatPoly::operator()(const BigFloat& x) const { return FloatPoly(*this, x.ctx())(x); }

BigComplex RatPoly::operator()(const BigComplex& x) const { return FloatPoly(*this, x.ctx())(x); }

RatPoly RatPoly::derivative() const {
  RatVector d;
  for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  RatVector r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  RatVector r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + o.scaled(Rational(-1)); }

RatPoly RatPoly::scaled(const Rational& s) const {
  RatVector r = c_;
  for (auto& v : r) v *= s;
  return RatPoly(std::move(r));
}

MonicPolynomial::MonicPolynomial(RatVector coeffs) : p_(std::move(coeffs)) {
  if (p_.is_zero() || p_.coeffs().back() != 1)
    throw ArgumentError("MonicPolynomial: leading coefficient must be exactly 1");
}

MonicPolynomial::MonicPolynomial(const RatPoly& p) : MonicPolynomial(p.coeffs()) {}

FloatPoly::FloatPoly(const RatPoly& p, PrecCtx ctx) : ctx_(ctx) {
  c_.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c_.emplace_back(q, ctx);
}

BigFloat FloatPoly::operator()(const BigFloat& x) const {
  BigFloat r(ctx_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

BigComplex FloatPoly::operator()(const BigComplex& x) const {
  BigComplex r(ctx_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * x;
    r.re += *it;
  }
  return r;
}

void FloatPoly::eval_with_derivative(const BigFloat& x, BigFloat& value, BigFloat& deriv) const {
  value = BigFloat(ctx_);
  deriv = BigFloat(ctx_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    deriv *= x;
    deriv += value;
    value *= x;
    value += *it;
  }
}

// ---------------------------------------------------------------------------

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

// Multiply each row by the lcm of its denominators.
ZMatrix integer_rows(const RatMatrix& A, const RatVector* b) {
  ZMatrix M(A.size());
  for (size_t i = 0; i < A.size(); ++i) {
    mpz_class l = 1;
    for (const auto& q : A[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    if (b) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*b)[i].get_den_mpz_t());
    for (const auto& q : A[i]) M[i].push_back(q.get_num() * (l / q.get_den()));
    if (b) M[i].push_back((*b)[i].get_num() * (l / (*b)[i].get_den()));
  }
  return M;
}

// Bareiss elimination over the first `ncols` columns; returns the number of
// pivots.  Rows are permuted in place; pivot columns recorded.
int bareiss(ZMatrix& M, size_t ncols, std::vector<size_t>& pivcols) {
  const size_t n = M.size();
  const size_t width = n ? M[0].size() : 0;
  mpz_class prev = 1;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < n; ++col) {
    size_t p = row;
    while (p < n && M[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(M[p], M[row]);
    for (size_t i = row + 1; i < n; ++i) {
      for (size_t j = col + 1; j < width; ++j) {
        mpz_class t = M[row][col] * M[i][j] - M[i][col] * M[row][j];
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][col] = 0;
    }
    prev = M[row][col];
    pivcols.push_back(col);
    ++row;
  }
  return static_cast<int>(row);
}

}  // namespace

int rank_exact(const RatMatrix& A) {
  ZMatrix M = integer_rows(A, nullptr);
  std::vector<size_t> piv;
  return bareiss(M, M.empty() ? 0 : M[0].size(), piv);
}

RatVector solve_linear_exact(const RatMatrix& A, const RatVector& b) {
  const size_t n = A.size();
  if (b.size() != n) throw ArgumentError("solve_linear_exact: dimension mismatch");
  for (const auto& row : A)
    if (row.size() != n) throw ArgumentError("solve_linear_exact: matrix is not square");
  ZMatrix M = integer_rows(A, &b);
  std::vector<size_t> piv;
  int r = bareiss(M, n, piv);
  if (r < static_cast<int>(n))
    throw SingularMatrix("solve_linear_exact: singular matrix (rank " + std::to_string(r) + " of " +
                             std::to_string(n) + ")",
                         r);
  RatVector x(n);
  for (size_t ii = n; ii-- > 0;) {
    Rational s(M[ii][n]);
    for (size_t j = ii + 1; j < n; ++j) s -= Rational(M[ii][j]) * x[j];
    x[ii] = s / Rational(M[ii][ii]);
  }
  return x;
}

RatMatrix inverse_exact(const RatMatrix& A) {
  const size_t n = A.size();
  RatMatrix inv(n, RatVector(n));
  for (size_t c = 0; c < n; ++c) {
    RatVector e(n, Rational(0));
    e[c] = 1;
    RatVector x = solve_linear_exact(A, e);
    for (size_t r = 0; r < n; ++r) inv[r][c] = x[r];
  }
  return inv;
}

RatVector mat_vec(const RatMatrix& A, const RatVector& x) {
  RatVector y(A.size(), Rational(0));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += A[i][j] * x[j];
  return y;
}

}  // namespace nikishin
