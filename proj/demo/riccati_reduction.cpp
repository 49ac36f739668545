// Builds a field from a known fundamental solution, recovers a plane and a
// flag solution from it, and gauges the field into block and Borel form.

#include <iostream>

#include "vessiot/format.hpp"
#include "vessiot/parse.hpp"
#include "vessiot/vessiot.hpp"

using namespace vessiot;

int main() {
  const MatK tau = parse_matrix("[1, t, 0; t^2, 1 + t^3, 2; i, t, 1 + t]");
  const AutomorphicField a = log_deriv(GroupElement(tau));
  std::cout << "A = l(tau) = " << format_canonical(a.matrix()) << "\n\n";

  std::cout << "Riccati system of lines (m = 1):\n" << format_canonical(riccati_polynomials(a.matrix(), 1)) << "\n";

  const PlaneCoords line = plucker_coords(first_columns(tau, 1), 1);
  std::cout << "solution from the first column: " << format_canonical(line.matrix()) << "\n";
  const Reduction pr = reduce_by_plane(a, line);
  std::cout << "reduced field: " << format_canonical(pr.b.matrix()) << "\n";
  std::cout << "zero lower block: " << (is_in_subalgebra(pr.b, shape::BlockUpper{1}) ? "yes" : "no") << "\n\n";

  const FlagCoords flag = flag_coords(tau);
  std::cout << "flag solution: " << format_canonical(flag.matrix()) << "\n";
  const Reduction fr = reduce_by_flag(a, flag);
  std::cout << "reduced field: " << format_canonical(fr.b.matrix()) << "\n";
  std::cout << "upper triangular: " << (is_in_subalgebra(fr.b, shape::UpperTriangular{}) ? "yes" : "no") << "\n";
  return 0;
}
