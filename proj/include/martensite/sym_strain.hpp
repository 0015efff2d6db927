#pragma once

#include <array>
#include <ostream>
#include <string>

#include "martensite/algebraic.hpp"
#include "martensite/error.hpp"
#include "martensite/polynomial.hpp"
#include "martensite/rational.hpp"

namespace martensite {

/// Integer 3x3 matrix; used for the quarter-turn rotations.
using IntMatrix3 = std::array<std::array<int, 3>, 3>;

/// Anticlockwise quarter turn about coordinate axis i (1, 2 or 3).
inline const IntMatrix3& quarter_turn(int axis) {
  static const IntMatrix3 r[3] = {
      {{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}},
      {{{0, 0, 1}, {0, 1, 0}, {-1, 0, 0}}},
      {{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}},
  };
  if (axis < 1 || axis > 3) throw Error(ErrorCode::InvalidParams, "rotation axis must be 1, 2 or 3");
  return r[axis - 1];
}

/// Symmetric 3x3 matrix stored as (e11, e22, e33, e12, e13, e23).
template <class T>
struct SymStrain {
  std::array<T, 6> v{};

  SymStrain() : v{T(0), T(0), T(0), T(0), T(0), T(0)} {}
  SymStrain(T e11, T e22, T e33, T e12, T e13, T e23)
      : v{std::move(e11), std::move(e22), std::move(e33), std::move(e12), std::move(e13), std::move(e23)} {}

  static SymStrain identity() { return {T(1), T(1), T(1), T(0), T(0), T(0)}; }

  const T& e11() const { return v[0]; }
  const T& e22() const { return v[1]; }
  const T& e33() const { return v[2]; }
  const T& e12() const { return v[3]; }
  const T& e13() const { return v[4]; }
  const T& e23() const { return v[5]; }

  /// Entry (i, j), zero-based.
  const T& at(int i, int j) const {
    static constexpr int idx[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
    return v[static_cast<size_t>(idx[i][j])];
  }

  T trace() const { return v[0] + v[1] + v[2]; }

  T det() const {
    const T &a = v[0], &b = v[1], &c = v[2], &d = v[3], &e = v[4], &f = v[5];
    return a * b * c + T(2) * d * e * f - a * f * f - b * e * e - c * d * d;
  }

  SymStrain cof() const {
    const T &a = v[0], &b = v[1], &c = v[2], &d = v[3], &e = v[4], &f = v[5];
    return {b * c - f * f, a * c - e * e, a * b - d * d, e * f - c * d, d * f - b * e, d * e - a * f};
  }

  SymStrain& operator+=(const SymStrain& o) {
    for (size_t i = 0; i < 6; ++i) v[i] += o.v[i];
    return *this;
  }
  SymStrain& operator-=(const SymStrain& o) {
    for (size_t i = 0; i < 6; ++i) v[i] -= o.v[i];
    return *this;
  }
  SymStrain& operator*=(const T& s) {
    for (auto& x : v) x *= s;
    return *this;
  }

  friend SymStrain operator+(SymStrain a, const SymStrain& b) { return a += b; }
  friend SymStrain operator-(SymStrain a, const SymStrain& b) { return a -= b; }
  friend SymStrain operator*(const T& s, SymStrain a) { return a *= s; }
  friend SymStrain operator-(SymStrain a) { return a *= T(-1); }
  friend bool operator==(const SymStrain& a, const SymStrain& b) { return a.v == b.v; }
};

/// Tr(ef) with the off-diagonal entries counted twice.
template <class T>
T inner(const SymStrain<T>& e, const SymStrain<T>& f) {
  return e.v[0] * f.v[0] + e.v[1] * f.v[1] + e.v[2] * f.v[2] +
         T(2) * (e.v[3] * f.v[3] + e.v[4] * f.v[4] + e.v[5] * f.v[5]);
}

template <class T>
T norm_sq(const SymStrain<T>& e) {
  return inner(e, e);
}

/// R e R^T for an integer matrix R.
template <class T>
SymStrain<T> conjugate(const IntMatrix3& r, const SymStrain<T>& e) {
  auto entry = [&](int i, int j) {
    T s(0);
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) {
        int c = r[static_cast<size_t>(i)][static_cast<size_t>(k)] * r[static_cast<size_t>(j)][static_cast<size_t>(l)];
        if (c != 0) s += T(c) * e.at(k, l);
      }
    return s;
  };
  return {entry(0, 0), entry(1, 1), entry(2, 2), entry(0, 1), entry(0, 2), entry(1, 2)};
}

/// Full 3x3 product e * f^T, used for the adjugate identity.
template <class T>
std::array<std::array<T, 3>, 3> mul_transpose(const SymStrain<T>& e, const SymStrain<T>& f) {
  std::array<std::array<T, 3>, 3> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      T s(0);
      for (int k = 0; k < 3; ++k) s += e.at(i, k) * f.at(j, k);
      out[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
    }
  return out;
}

/// Compatibility on a trace-constant slice: det(e - f) = 0.
/// Refuses strains of different trace, where the determinant test does not apply.
template <class T>
bool is_compatible(const SymStrain<T>& e, const SymStrain<T>& f) {
  if (!is_zero(T(e.trace() - f.trace()))) throw Error(ErrorCode::TraceMismatch, "strains have different traces");
  return is_zero(T((e - f).det()));
}

template <class U, class T, class F>
SymStrain<U> map_strain(const SymStrain<T>& e, F&& f) {
  return {f(e.v[0]), f(e.v[1]), f(e.v[2]), f(e.v[3]), f(e.v[4]), f(e.v[5])};
}

inline SymStrain<AlgebraicScalar> lift(const SymStrain<Rational>& e) {
  return map_strain<AlgebraicScalar>(e, [](const Rational& r) { return AlgebraicScalar(r); });
}

inline SymStrain<Polynomial> lift_poly(const SymStrain<Rational>& e) {
  return map_strain<Polynomial>(e, [](const Rational& r) { return Polynomial(r); });
}

template <class T>
std::ostream& operator<<(std::ostream& os, const SymStrain<T>& e) {
  os << "[[" << e.at(0, 0) << ", " << e.at(0, 1) << ", " << e.at(0, 2) << "], [" << e.at(1, 0) << ", " << e.at(1, 1)
     << ", " << e.at(1, 2) << "], [" << e.at(2, 0) << ", " << e.at(2, 1) << ", " << e.at(2, 2) << "]]";
  return os;
}

}  // namespace martensite
