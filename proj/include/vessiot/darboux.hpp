#pragma once

// SO(3) automorphic systems and their reduction to a scalar Riccati equation
// through Darboux's symmetric coordinates of the complex unit sphere.
//
// The field (a, b, c) is the skew matrix
//     [  0  a  b ]
//     [ -a  0  c ]
//     [ -b -c  0 ]
// acting by x' = A x on the sphere x0^2 + x1^2 + x2^2 = 1. In the symmetric
// coordinates
//     x = (x0 + i x1) / (1 - x2),   y = (x2 - 1) / (x0 - i x1),
//     x0 = (1 - xy)/(x - y),  x1 = i (1 + xy)/(x - y),  x2 = (x + y)/(x - y),
// the induced equation on x is
//     x' = (-b - ic)/2 - i a x + (-b + ic)/2 x^2.
//
// Only the x chart is used for dynamics; y obeys the same projective action.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vessiot/automorphic.hpp"
#include "vessiot/matrix.hpp"
#include "vessiot/mpoly.hpp"

namespace vessiot {

struct SO3Field {
  RatFunc a, b, c;

  MatK matrix() const { return MatK{{RatFunc(), a, b}, {-a, RatFunc(), c}, {-b, -c, RatFunc()}}; }

  static SO3Field from_matrix(const MatK& m) {
    if (m.rows() != 3 || !is_in_subalgebra(m, shape::SkewSymmetric{}))
      throw Error(ErrorCode::InvalidArgument, "expected a 3 x 3 skew-symmetric matrix");
    return {m(0, 1), m(0, 2), m(1, 2)};
  }
};

// x' = q0 + q1 x + q2 x^2
template <class T>
struct RiccatiCoeffs {
  T q0, q1, q2;

  T rhs(const T& x) const { return q0 + q1 * x + q2 * x * x; }

  friend bool operator==(const RiccatiCoeffs&, const RiccatiCoeffs&) = default;
};

inline RiccatiCoeffs<RatFunc> so3_to_riccati(const SO3Field& f) {
  const RatFunc i(GQ::i());
  const RatFunc half(GQ::from_fractions(1, 2));
  return {(-f.b - i * f.c) * half, -i * f.a, (-f.b + i * f.c) * half};
}

template <class T>
class SpherePoint {
 public:
  SpherePoint(T x0, T x1, T x2) : x_{std::move(x0), std::move(x1), std::move(x2)} {
    if (!(x_[0] * x_[0] + x_[1] * x_[1] + x_[2] * x_[2] == T(1)))
      throw Error(ErrorCode::NotOnSphere, "point does not satisfy x0^2 + x1^2 + x2^2 = 1");
  }

  const T& operator[](std::size_t k) const { return x_[k]; }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  std::array<T, 3> x_;
};

template <class T>
T symmetric_x(const SpherePoint<T>& p) {
  const T i(GQ::i());
  const T den = T(1) - p[2];
  if (den.is_zero()) throw Error(ErrorCode::ChartDenominatorVanishes, "1 - x2 vanishes");
  return (p[0] + i * p[1]) / den;
}

template <class T>
T symmetric_y(const SpherePoint<T>& p) {
  const T i(GQ::i());
  const T den = p[0] - i * p[1];
  if (den.is_zero()) throw Error(ErrorCode::ChartDenominatorVanishes, "x0 - i x1 vanishes");
  return (p[2] - T(1)) / den;
}

template <class T>
std::pair<T, T> symmetric_coords(const SpherePoint<T>& p) {
  return {symmetric_x(p), symmetric_y(p)};
}

// Numerators over the common denominator x - y; needs only ring operations.
template <class T>
struct SphereParts {
  std::array<T, 3> num;
  T den;
};

template <class T>
SphereParts<T> sphere_parts(const T& x, const T& y) {
  const T i(GQ::i());
  const T xy = x * y;
  return {{T(1) - xy, i * (T(1) + xy), x + y}, x - y};
}

template <class T>
SpherePoint<T> sphere_from_symmetric(const T& x, const T& y) {
  if (x == y) throw Error(ErrorCode::DiagonalPoint, "x = y is not a point of the sphere chart");
  SphereParts<T> parts = sphere_parts(x, y);
  return {parts.num[0] / parts.den, parts.num[1] / parts.den, parts.num[2] / parts.den};
}

// num0^2 + num1^2 + num2^2 - den^2 as a polynomial in the indeterminates x, y
// (variables 0 and 1). Identically zero.
inline MPoly<GQ> sphere_identity_residual() {
  using P = MPoly<GQ>;
  SphereParts<P> parts = sphere_parts(P::variable(0), P::variable(1));
  return parts.num[0] * parts.num[0] + parts.num[1] * parts.num[1] + parts.num[2] * parts.num[2] -
         parts.den * parts.den;
}

struct PushforwardReport {
  GQ chain_rule;  // x' through the chart map
  GQ riccati;     // Riccati right-hand side at x(p)
  bool agree = false;
};

// Evaluates x' at the point p and time t0 two ways: by the chain rule through
// x = (x0 + i x1)/(1 - x2) with x0' = a x1 + b x2, x1' = -a x0 + c x2,
// x2' = -b x0 - c x1, and from the Riccati equation at x(p).
inline PushforwardReport so3_pushforward(const SO3Field& f, const SpherePoint<GQ>& p, const GQ& t0) {
  const GQ a = f.a.eval(t0);
  const GQ b = f.b.eval(t0);
  const GQ c = f.c.eval(t0);
  const GQ i = GQ::i();
  const GQ den = GQ(1) - p[2];
  if (den.is_zero()) throw Error(ErrorCode::ChartDenominatorVanishes, "1 - x2 vanishes");
  const GQ d0 = a * p[1] + b * p[2];
  const GQ d1 = -a * p[0] + c * p[2];
  const GQ d2 = -b * p[0] - c * p[1];
  const GQ chain = ((d0 + i * d1) * den + (p[0] + i * p[1]) * d2) / (den * den);

  const RiccatiCoeffs<RatFunc> q = so3_to_riccati(f);
  const RiccatiCoeffs<GQ> qt{q.q0.eval(t0), q.q1.eval(t0), q.q2.eval(t0)};
  const GQ ric = qt.rhs(symmetric_x(p));
  return {chain, ric, chain == ric};
}

inline bool so3_pushforward_check(const SO3Field& f, const SpherePoint<GQ>& p, const GQ& t0) {
  return so3_pushforward(f, p, t0).agree;
}

// ---------------------------------------------------------------------------
// Rotations and Möbius transformations.

// Acts on the x coordinate by x -> (m00 x + m01)/(m10 x + m11).
struct Moebius {
  Matrix<GQ> m;

  GQ apply(const GQ& x) const {
    const GQ den = m(1, 0) * x + m(1, 1);
    if (den.is_zero()) throw Error(ErrorCode::PoleAtPoint, "Möbius transformation has a pole here");
    return (m(0, 0) * x + m(0, 1)) / den;
  }

  // Same projective transformation: proportional matrices.
  friend bool equivalent(const Moebius& a, const Moebius& b) {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          for (std::size_t l = 0; l < 2; ++l)
            if (!(a.m(i, j) * b.m(k, l) == a.m(k, l) * b.m(i, j))) return false;
    return true;
  }

  friend Moebius operator*(const Moebius& a, const Moebius& b) { return {a.m * b.m}; }
};

// Rotation axes, named by the plane of rotation:
//   0: (x1, x2) plane, 1: (x0, x1) plane, 2: (x0, x2) plane.
// For lambda = e^{i alpha} each is the rotation by alpha.
template <class T>
Matrix<T> rotation_matrix_generic(int axis, const T& lam) {
  const T i(GQ::i());
  const T two(2);
  const T c = (lam + T(1) / lam) / two;
  const T s_up = (T(1) / lam - lam) / (two * i);
  const T s_down = (lam - T(1) / lam) / (two * i);
  const T one(1);
  const T zero;
  switch (axis) {
    case 0: return Matrix<T>{{one, zero, zero}, {zero, c, s_up}, {zero, s_down, c}};
    case 1: return Matrix<T>{{c, s_up, zero}, {s_down, c, zero}, {zero, zero, one}};
    case 2: return Matrix<T>{{c, zero, s_up}, {zero, one, zero}, {s_down, zero, c}};
    default: throw Error(ErrorCode::InvalidArgument, "rotation axis must be 0, 1 or 2");
  }
}

// Möbius representative of the rotation on the x coordinate, derived by
// conjugating sphere points and re-reading x.
template <class T>
Matrix<T> rotation_moebius_generic(int axis, const T& lam) {
  const T i(GQ::i());
  const T one(1);
  switch (axis) {
    case 0: return Matrix<T>{{lam + one, lam - one}, {lam - one, lam + one}};
    case 1: return Matrix<T>{{lam, T()}, {T(), one}};
    case 2: return Matrix<T>{{-i * (lam + one), one - lam}, {lam - one, -i * (lam + one)}};
    default: throw Error(ErrorCode::InvalidArgument, "rotation axis must be 0, 1 or 2");
  }
}

inline Matrix<GQ> rotation_matrix(int axis, const GQ& lam) {
  if (lam.is_zero()) throw Error(ErrorCode::InvalidArgument, "lambda must be nonzero");
  return rotation_matrix_generic(axis, lam);
}

inline Moebius rotation_to_moebius(int axis, const GQ& lam) {
  if (lam.is_zero()) throw Error(ErrorCode::InvalidArgument, "lambda must be nonzero");
  return {rotation_moebius_generic(axis, lam)};
}

// Applies the rotation to p and re-reads the x coordinate.
inline GQ rotate_x(int axis, const GQ& lam, const SpherePoint<GQ>& p) {
  Matrix<GQ> r = rotation_matrix(axis, lam);
  Matrix<GQ> v = r * Matrix<GQ>(3, 1, {p[0], p[1], p[2]});
  return symmetric_x(SpherePoint<GQ>(v(0, 0), v(1, 0), v(2, 0)));
}

// ---------------------------------------------------------------------------
// Lie algebra morphism so(3) -> sl(2), matching the Riccati equation above:
//   L01 -> [[-i/2, 0], [0, i/2]]
//   L02 -> [[0, -1/2], [1/2, 0]]
//   L12 -> [[0, -i/2], [-i/2, 0]]
// where L01, L02, L12 carry a, b, c respectively.
template <class T>
Matrix<T> so3_algebra_to_sl2_generic(const T& a, const T& b, const T& c) {
  const T i(GQ::i());
  const T half(GQ::from_fractions(1, 2));
  return Matrix<T>{{-i * a * half, (-b - i * c) * half}, {(b - i * c) * half, i * a * half}};
}

inline MatK so3_algebra_to_sl2(const SO3Field& f) { return so3_algebra_to_sl2_generic(f.a, f.b, f.c); }

// [[alpha, beta], [gamma, -alpha]] acting projectively induces
// x' = beta + 2 alpha x - gamma x^2 (on x = u0/u1 with u' = M u).
template <class T>
RiccatiCoeffs<T> sl2_to_riccati(const Matrix<T>& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "expected a 2 x 2 matrix");
  return {m(0, 1), m(0, 0) - m(1, 1), -m(1, 0)};
}

}  // namespace vessiot
