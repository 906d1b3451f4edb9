#pragma once

#include <array>

#include "nikishin/bigfloat.hpp"

namespace nikishin {

// Boundary-value side on a cut: Plus is reached from the upper half plane.
enum class Side { None, Plus, Minus };

using Matrix3 = std::array<std::array<BigComplex, 3>, 3>;

Matrix3 zeros3(PrecCtx ctx);
Matrix3 identity3(PrecCtx ctx);
Matrix3 mul3(const Matrix3& a, const Matrix3& b);
BigComplex det3(const Matrix3& a);
Matrix3 inverse3(const Matrix3& a);
BigFloat max_abs_diff(const Matrix3& a, const Matrix3& b);

}  // namespace nikishin
