// Rotation field on the complex sphere and its Riccati image in the
// symmetric coordinate x.

#include <iostream>

#include "vessiot/format.hpp"
#include "vessiot/parse.hpp"
#include "vessiot/vessiot.hpp"

using namespace vessiot;

int main() {
  const SO3Field f{parse_ratfunc("1"), parse_ratfunc("t"), parse_ratfunc("1/(t + 1)")};
  const RiccatiCoeffs<RatFunc> q = so3_to_riccati(f);
  std::cout << "skew field: " << format_canonical(f.matrix()) << "\n";
  std::cout << "x' = (" << format_canonical(q.q0) << ") + (" << format_canonical(q.q1) << ")*x + ("
            << format_canonical(q.q2) << ")*x^2\n";
  std::cout << "sl(2) image: " << format_canonical(so3_algebra_to_sl2(f)) << "\n\n";

  const SpherePoint<GQ> p(GQ::from_fractions(2, 3), GQ::from_fractions(2, 3), GQ::from_fractions(1, 3));
  const auto [x, y] = symmetric_coords(p);
  std::cout << "point (2/3, 2/3, 1/3): x = " << format_canonical(x) << ", y = " << format_canonical(y) << "\n";
  for (int k = 0; k < 3; ++k) {
    const GQ t0(k);
    const PushforwardReport r = so3_pushforward(f, p, t0);
    std::cout << "t = " << k << ": chain rule " << format_canonical(r.chain_rule) << ", Riccati "
              << format_canonical(r.riccati) << (r.agree ? "  (agree)" : "  (DISAGREE)") << "\n";
  }
  return 0;
}
