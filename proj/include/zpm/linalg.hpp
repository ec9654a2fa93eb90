#pragma once

// Fixed-size 3-vectors and 3x3 matrices. Everything here is tiny and dense,
// so plain std::array beats pulling in a linear-algebra dependency.

#include <array>
#include <cmath>
#include <complex>

namespace zpm {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using CMat3 = std::array<std::array<std::complex<double>, 3>, 3>;

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
constexpr Vec3 operator*(double s, const Vec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}
constexpr Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Totally antisymmetric symbol with epsilon(0,1,2) = +1.
constexpr double levi_civita(int i, int j, int k) {
  return static_cast<double>((i - j) * (j - k) * (k - i)) / 2.0;
}

constexpr Mat3 zero_mat3() { return {}; }

constexpr Mat3 identity_mat3() {
  return {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
}

constexpr Mat3 transpose(const Mat3& m) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

/// Cross-product matrix: (skew(v))_ij = epsilon_ijk v_k.
constexpr Mat3 skew(const Vec3& v) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m[i][j] += levi_civita(i, j, k) * v[k];
  return m;
}

}  // namespace zpm
