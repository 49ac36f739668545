#pragma once

// Random exact inputs for property tests. Every generator takes the engine
// explicitly so each test owns a fixed seed.

#include <cstddef>
#include <random>

#include "vessiot/vessiot.hpp"

namespace vessiot::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Small Gaussian rational: numerators in [-3, 3], denominators in {1, 2},
// imaginary part present about a third of the time.
inline GQ random_gq(Rng& rng) {
  const GQ re = GQ::from_fractions(uniform(rng, -3, 3), uniform(rng, 1, 2));
  if (uniform(rng, 0, 2) != 0) return re;
  return re + GQ::from_fractions(uniform(rng, -3, 3), uniform(rng, 1, 2)) * GQ::i();
}

inline GQ random_nonzero_gq(Rng& rng) {
  for (;;) {
    GQ g = random_gq(rng);
    if (!g.is_zero()) return g;
  }
}

inline Poly random_poly(Rng& rng, int max_degree) {
  const int d = static_cast<int>(uniform(rng, 0, max_degree));
  Poly p;
  for (int k = 0; k <= d; ++k) p = p + Poly::monomial(random_gq(rng), static_cast<unsigned>(k));
  return p;
}

inline RatFunc random_polynomial_rf(Rng& rng, int max_degree) { return RatFunc(random_poly(rng, max_degree)); }

inline RatFunc random_ratfunc(Rng& rng, int max_degree = 2) {
  for (;;) {
    Poly den = random_poly(rng, max_degree);
    if (!den.is_zero()) return RatFunc(random_poly(rng, max_degree), den);
  }
}

inline RatFunc random_nonzero_ratfunc(Rng& rng, int max_degree = 2) {
  for (;;) {
    RatFunc r = random_ratfunc(rng, max_degree);
    if (!r.is_zero()) return r;
  }
}

// n x n matrix of polynomials of degree <= max_degree.
inline MatK random_poly_matrix(Rng& rng, std::size_t n, int max_degree) {
  MatK a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = random_polynomial_rf(rng, max_degree);
  return a;
}

inline MatK random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_degree = 1) {
  MatK a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = random_ratfunc(rng, max_degree);
  return a;
}

inline bool all_minors_nonzero(const MatK& a) {
  for (const auto& m : principal_minors(a))
    if (m.is_zero()) return false;
  return true;
}

// Polynomial matrix with nonvanishing leading principal minors, regenerated
// until the condition holds.
inline MatK random_generic_tau(Rng& rng, std::size_t n, int max_degree) {
  for (;;) {
    MatK a = random_poly_matrix(rng, n, max_degree);
    if (all_minors_nonzero(a)) return a;
  }
}

inline MatK random_invertible(Rng& rng, std::size_t n, int max_degree = 1) {
  for (;;) {
    MatK a = random_poly_matrix(rng, n, max_degree);
    if (!determinant(a).is_zero()) return a;
  }
}

inline MatK random_constant_invertible(Rng& rng, std::size_t n) {
  return random_invertible(rng, n, 0);
}

// Exact point of the complex sphere from two distinct symmetric coordinates.
inline SpherePoint<GQ> random_sphere_point(Rng& rng) {
  for (;;) {
    const GQ x = random_gq(rng);
    const GQ y = random_gq(rng);
    if (x == y) continue;
    SpherePoint<GQ> p = sphere_from_symmetric(x, y);
    if (p[2] == GQ(1) || (p[0] - GQ::i() * p[1]).is_zero()) continue;
    return p;
  }
}

// Skew matrix [[0,a,b],[-a,0,c],[-b,-c,0]] with constant entries.
inline Matrix<GQ> skew(const GQ& a, const GQ& b, const GQ& c) {
  return Matrix<GQ>{{GQ(), a, b}, {-a, GQ(), c}, {-b, -c, GQ()}};
}

}  // namespace vessiot::testing
