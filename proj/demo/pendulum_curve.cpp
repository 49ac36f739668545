// Weierstrass normal form of the pendulum at several energies, and a few
// points on the curve E(4, -4).

#include <iostream>

#include "vessiot/format.hpp"
#include "vessiot/vessiot.hpp"

using namespace vessiot;

int main() {
  for (const GQ& h : {GQ(0), GQ(2), GQ::from_fractions(1, 2), GQ(-3)}) {
    const PendulumNormalForm nf = pendulum_normal_form(h);
    std::cout << "h = " << format_canonical(h) << ": g2 = " << format_canonical(nf.curve.g2())
              << ", g3 = " << format_canonical(nf.curve.g3())
              << ", discriminant = " << format_canonical(nf.curve.discriminant())
              << (nf.audit.identity_holds && nf.audit.matches_closed_form ? "" : "  (audit failed)") << "\n";
  }

  const WeierstrassCurve e = curve_new(GQ(4), GQ(-4));
  const CurvePoint p = CurvePoint::affine(RatFunc(1), RatFunc(2));
  CurvePoint q = p;
  std::cout << "\nmultiples of (1, 2) on y^2 = 4x^3 - 4x + 4:\n";
  for (int k = 1; k <= 5; ++k) {
    std::cout << "  " << k << "P = " << to_string(q) << "\n";
    q = chord_tangent_add(e, q, p);
  }
  return 0;
}
