#pragma once

#include <array>
#include <complex>

namespace rydnet {

using cplx = std::complex<double>;

// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Mat2 = std::array<cplx, 4>;

inline constexpr Mat2 kIdentity2{cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}};

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  return Mat2{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
              a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 dagger(const Mat2& a) {
  return Mat2{std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

}  // namespace rydnet
