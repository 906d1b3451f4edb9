#include "nikishin/matrix3.hpp"

namespace nikishin {

Matrix3 zeros3(PrecCtx ctx) {
  BigComplex z(ctx);
  return Matrix3{{{z, z, z}, {z, z, z}, {z, z, z}}};
}

Matrix3 identity3(PrecCtx ctx) {
  Matrix3 m = zeros3(ctx);
  for (int i = 0; i < 3; ++i) m[i][i] = BigComplex(BigFloat(1L, ctx));
  return m;
}

Matrix3 mul3(const Matrix3& a, const Matrix3& b) {
  Matrix3 c = zeros3(a[0][0].ctx());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

BigComplex det3(const Matrix3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Matrix3 inverse3(const Matrix3& a) {
  Matrix3 c = zeros3(a[0][0].ctx());
  c[0][0] = a[1][1] * a[2][2] - a[1][2] * a[2][1];
  c[0][1] = a[0][2] * a[2][1] - a[0][1] * a[2][2];
  c[0][2] = a[0][1] * a[1][2] - a[0][2] * a[1][1];
  c[1][0] = a[1][2] * a[2][0] - a[1][0] * a[2][2];
  c[1][1] = a[0][0] * a[2][2] - a[0][2] * a[2][0];
  c[1][2] = a[0][2] * a[1][0] - a[0][0] * a[1][2];
  c[2][0] = a[1][0] * a[2][1] - a[1][1] * a[2][0];
  c[2][1] = a[0][1] * a[2][0] - a[0][0] * a[2][1];
  c[2][2] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  BigComplex d = det3(a);
  for (auto& row : c)
    for (auto& v : row) v = v / d;
  return c;
}

BigFloat max_abs_diff(const Matrix3& a, const Matrix3& b) {
  BigFloat m(a[0][0].ctx());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m = max(m, abs(a[i][j] - b[i][j]));
  return m;
}

}  // namespace nikishin
