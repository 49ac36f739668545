#pragma once

// Weierstrass curves y^2 = 4x^3 - g2 x - g3 over Q(i), points with
// coordinates in K, and the automorphic equation a*v on the curve.
//
// The invariant vector field tangent to the curve is
//     v = y d/dx + (6x^2 - g2/2) d/dy,
// so a solution (xi, eta) of x' = a y, y' = a (6x^2 - g2/2) satisfies
//     (xi')^2 = a^2 (4 xi^3 - g2 xi - g3),   eta = xi' / a.
// invariant_field_check() shows that the coefficient 12x^2 - g2 is not
// tangent and the halved one is.

#include <optional>
#include <string>
#include <utility>

#include "vessiot/mpoly.hpp"
#include "vessiot/ratfunc.hpp"

namespace vessiot {

class WeierstrassCurve {
 public:
  WeierstrassCurve(GQ g2, GQ g3) : g2_(std::move(g2)), g3_(std::move(g3)) {
    if (discriminant().is_zero())
      throw Error(ErrorCode::SingularCurve, "g2^3 - 27 g3^2 vanishes: 4x^3 - g2 x - g3 has a repeated root");
  }

  const GQ& g2() const noexcept { return g2_; }
  const GQ& g3() const noexcept { return g3_; }

  GQ discriminant() const { return g2_ * g2_ * g2_ - GQ(27) * g3_ * g3_; }

  // 4x^3 - g2 x - g3
  template <class T>
  T cubic(const T& x) const {
    return T(4) * x * x * x - T(g2_) * x - T(g3_);
  }

 private:
  GQ g2_;
  GQ g3_;
};

inline WeierstrassCurve curve_new(const GQ& g2, const GQ& g3) { return {g2, g3}; }

class CurvePoint {
 public:
  static CurvePoint infinity() { return CurvePoint(); }
  static CurvePoint affine(RatFunc x, RatFunc y) { return CurvePoint(std::move(x), std::move(y)); }

  bool is_infinity() const noexcept { return !xy_.has_value(); }
  const RatFunc& x() const { return xy_->first; }
  const RatFunc& y() const { return xy_->second; }

  CurvePoint operator-() const { return is_infinity() ? *this : affine(x(), -y()); }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

 private:
  CurvePoint() = default;
  CurvePoint(RatFunc x, RatFunc y) : xy_(std::in_place, std::move(x), std::move(y)) {}

  std::optional<std::pair<RatFunc, RatFunc>> xy_;
};

inline std::string to_string(const CurvePoint& p) {
  if (p.is_infinity()) return "inf";
  return "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")";
}

inline bool on_curve(const WeierstrassCurve& e, const CurvePoint& p) {
  if (p.is_infinity()) return true;
  return p.y() * p.y() == e.cubic(p.x());
}

// Chord-tangent group law with the point at infinity as identity.
inline CurvePoint chord_tangent_add(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q) {
  if (!on_curve(e, p) || !on_curve(e, q)) throw Error(ErrorCode::NotOnCurve, "point is not on the curve");
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  RatFunc slope;
  if (p.x() == q.x()) {
    if (p.y() == -q.y()) return CurvePoint::infinity();
    const RatFunc x2 = p.x() * p.x();
    slope = (RatFunc(12) * x2 - RatFunc(e.g2())) / (RatFunc(2) * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  const RatFunc x3 = slope * slope / RatFunc(4) - p.x() - q.x();
  const RatFunc y3 = -(p.y() + slope * (x3 - p.x()));
  return CurvePoint::affine(x3, y3);
}

// (b')^2 = a^2 (4 b^3 - g2 b - g3)
inline bool check_weierstrass_solution(const WeierstrassCurve& e, const RatFunc& a, const RatFunc& b) {
  const RatFunc db = b.derivative();
  return db * db == a * a * e.cubic(b);
}

struct AdditionResult {
  RatFunc xi;
  RatFunc eta;
};

// General solution from a particular one. Given b with derivative db along
// a*v (so db^2 = a^2 (4b^3 - g2 b - g3)) and a constant point (x0, y0),
// returns the sum (b, db/a) + (x0, y0):
//   s   = (db - a y0) / (a (b - x0))
//   xi  = -b - x0 + s^2/4
//   eta = -(db + a y0)/(2a) + (3/2)(b + x0) s - s^3/4
// db is taken as given rather than recomputed, so constant "solutions" with a
// prescribed velocity can be fed in.
inline AdditionResult solution_addition(const WeierstrassCurve& e, const RatFunc& a, const RatFunc& b, const RatFunc& db,
                                        const GQ& x0, const GQ& y0) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroCoefficient, "coefficient a vanishes");
  if (!on_curve(e, CurvePoint::affine(x0, y0))) throw Error(ErrorCode::NotOnCurve, "(x0, y0) is not on the curve");
  if (!(db * db == a * a * e.cubic(b)))
    throw Error(ErrorCode::RelationViolated, "db^2 != a^2 (4b^3 - g2 b - g3)");
  const RatFunc bx = b - RatFunc(x0);
  if (bx.is_zero()) throw Error(ErrorCode::PointCollision, "b coincides with x0");
  const RatFunc ay0 = a * RatFunc(y0);
  const RatFunc s = (db - ay0) / (a * bx);
  const RatFunc s2 = s * s;
  const RatFunc quarter(GQ::from_fractions(1, 4));
  RatFunc xi = -b - RatFunc(x0) + quarter * s2;
  RatFunc eta = -(db + ay0) / (RatFunc(2) * a) + RatFunc(GQ::from_fractions(3, 2)) * (b + RatFunc(x0)) * s -
                quarter * s2 * s;
  return {std::move(xi), std::move(eta)};
}

// ---------------------------------------------------------------------------
// Tangency of the invariant field. Polynomials in x (variable 0), y (variable 1).

// Replaces y^2 by 4x^3 - g2 x - g3 until y appears at most linearly.
inline MPoly<GQ> reduce_mod_curve(const WeierstrassCurve& e, const MPoly<GQ>& p) {
  using P = MPoly<GQ>;
  const P x = P::variable(0);
  const P cubic = e.cubic(x);
  P out;
  for (const auto& [m, c] : p.terms()) {
    const unsigned ey = exponent_of(m, 1);
    Monomial rest = m;
    if (rest.size() > 1) rest[1] = ey % 2;
    P t = P::term(rest, c);
    for (unsigned k = 0; k < ey / 2; ++k) t *= cubic;
    out += t;
  }
  return out;
}

struct InvariantFieldReport {
  MPoly<GQ> displayed_residual;  // v(F) for v = y d/dx + (12x^2 - g2) d/dy
  MPoly<GQ> halved_residual;     // v(F) for v = y d/dx + (6x^2 - g2/2) d/dy
  bool displayed_tangent = false;
  bool halved_tangent = false;
};

// v(F) for F = y^2 - 4x^3 + g2 x + g3, reduced modulo F.
inline MPoly<GQ> field_residual(const WeierstrassCurve& e, const MPoly<GQ>& vx, const MPoly<GQ>& vy) {
  using P = MPoly<GQ>;
  const P x = P::variable(0);
  const P y = P::variable(1);
  const P f = y * y - e.cubic(x);
  return reduce_mod_curve(e, vx * f.partial(0) + vy * f.partial(1));
}

inline InvariantFieldReport invariant_field_check(const WeierstrassCurve& e) {
  using P = MPoly<GQ>;
  const P x = P::variable(0);
  const P y = P::variable(1);
  const P displayed = P(GQ(12)) * x * x - P(e.g2());
  const P halved = P(GQ(6)) * x * x - P(e.g2() / GQ(2));
  InvariantFieldReport r;
  r.displayed_residual = field_residual(e, y, displayed);
  r.halved_residual = field_residual(e, y, halved);
  r.displayed_tangent = r.displayed_residual.is_zero();
  r.halved_tangent = r.halved_residual.is_zero();
  return r;
}

// ---------------------------------------------------------------------------
// Pendulum. From (dz/dt)^2 = -z^3 - 2h z^2 - 1, the substitution
// u = -z/4 - h/6 gives (du/dt)^2 = 4u^3 - g2 u - g3 with
// g2 = h^2/3, g3 = h^3/27 + 1/16. Excluded energies: h = +-1.

struct PendulumAudit {
  // -(z^3 + 2h z^2 + 1)/16 at z = -4u - 2h/3, in variables u (0) and h (1)
  MPoly<GQ> transformed;
  // transformed - (4u^3 - (h^2/3) u - (h^3/27 + 1/16))
  MPoly<GQ> residual;
  bool identity_holds = false;
  // invariants read off the transformed cubic at the given h
  GQ g2_read;
  GQ g3_read;
  bool matches_closed_form = false;
};

struct PendulumNormalForm {
  WeierstrassCurve curve;
  PendulumAudit audit;
};

inline PendulumAudit pendulum_audit(const GQ& h) {
  using P = MPoly<GQ>;
  const P u = P::variable(0);
  const P hv = P::variable(1);
  const P z = P(GQ(-4)) * u - P(GQ::from_fractions(2, 3)) * hv;
  PendulumAudit a;
  a.transformed = P(GQ::from_fractions(-1, 16)) * (z * z * z + P(GQ(2)) * hv * z * z + P(GQ(1)));
  const P target = P(GQ(4)) * u * u * u - P(GQ::from_fractions(1, 3)) * hv * hv * u -
                   (P(GQ::from_fractions(1, 27)) * hv * hv * hv + P(GQ::from_fractions(1, 16)));
  a.residual = a.transformed - target;
  a.identity_holds = a.residual.is_zero();

  const P at_h = a.transformed.substitute(1, P(h));
  a.g2_read = -at_h.coefficient({1});
  a.g3_read = -at_h.coefficient({});
  a.matches_closed_form = a.g2_read == h * h / GQ(3) && a.g3_read == h * h * h / GQ(27) + GQ::from_fractions(1, 16) &&
                          at_h.coefficient({3}) == GQ(4) && at_h.coefficient({2}).is_zero();
  return a;
}

inline PendulumNormalForm pendulum_normal_form(const GQ& h) {
  if (h == GQ(1) || h == GQ(-1)) throw Error(ErrorCode::DegenerateEnergy, "energy h = +-1 is excluded");
  PendulumAudit audit = pendulum_audit(h);
  WeierstrassCurve curve(h * h / GQ(3), h * h * h / GQ(27) + GQ::from_fractions(1, 16));
  return {std::move(curve), std::move(audit)};
}

}  // namespace vessiot
