#pragma once

// Hand transcriptions of classical displays of the induced systems and of the
// SO(3) and elliptic formulas, copied as printed, misprints included. The
// library never computes with them; they exist so generated forms can be
// diffed against them and every disagreement settled by an oracle:
//  * systems: a fundamental solution tau, A = l(tau), must satisfy them;
//  * rotations: conjugating sphere points and re-reading x;
//  * addition: the chord-tangent group law.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vessiot/darboux.hpp"
#include "vessiot/elliptic.hpp"
#include "vessiot/homspace.hpp"

namespace vessiot::classical {

// Coefficients are polynomials in the indeterminates a_ij of a general field.
using Coeff = MPoly<GQ>;
using SysPoly = MPoly<Coeff>;

inline SysPoly entry(std::size_t n, std::size_t i, std::size_t j) {
  return SysPoly(Coeff::variable((i - 1) * n + (j - 1)));
}
inline SysPoly unknown(std::size_t k) { return SysPoly::variable(k); }

// x' = a21 + (a22 - a11) x - a12 x^2
inline std::vector<SysPoly> ordinary_riccati_rank2() {
  auto a = [](std::size_t i, std::size_t j) { return entry(2, i, j); };
  const SysPoly x = unknown(0);
  return {a(2, 1) + (a(2, 2) - a(1, 1)) * x - a(1, 2) * x * x};
}

// Projective plane, unknowns x = lambda_11, y = lambda_21 of the m = 1 chart.
// The y line prints (a33 - a11) without its factor y.
inline std::vector<SysPoly> projective_riccati_rank3_lines() {
  auto a = [](std::size_t i, std::size_t j) { return entry(3, i, j); };
  const SysPoly x = unknown(0);
  const SysPoly y = unknown(1);
  return {a(2, 1) + (a(2, 2) - a(1, 1)) * x + a(2, 3) * y - a(1, 2) * x * x - a(1, 3) * x * y,
          a(3, 1) + (a(3, 3) - a(1, 1)) + a(3, 2) * x - a(1, 3) * y * y - a(1, 2) * x * y};
}

// Dual projective plane, unknowns xi = lambda_11, eta = lambda_12 of the m = 2
// chart, as printed.
inline std::vector<SysPoly> projective_riccati_rank3_planes() {
  auto a = [](std::size_t i, std::size_t j) { return entry(3, i, j); };
  const SysPoly xi = unknown(0);
  const SysPoly eta = unknown(1);
  return {a(3, 1) + (a(3, 3) - a(1, 1)) * xi + a(2, 1) * eta - a(2, 3) * xi * eta - a(1, 3) * xi * xi,
          a(3, 2) + (a(3, 3) - a(2, 2)) * eta + a(1, 2) * xi - a(1, 3) * xi * eta - a(2, 3) * eta * eta};
}

// Rank 3 flag equation, x = lambda_21, y = lambda_31, z = lambda_32, as printed.
inline std::vector<SysPoly> flag_rank3() {
  auto a = [](std::size_t i, std::size_t j) { return entry(3, i, j); };
  const SysPoly x = unknown(0);
  const SysPoly y = unknown(1);
  const SysPoly z = unknown(2);
  return {a(2, 1) + (a(2, 2) - a(1, 1)) * x + a(2, 3) * y - a(1, 2) * x * x - a(1, 3) * x * y,
          a(3, 1) + a(3, 2) * x + (a(3, 3) - a(1, 1)) * y - a(1, 2) * x * y - a(1, 3) * y * y,
          a(3, 2) - a(1, 2) * y + (a(3, 3) - a(2, 2) + a(1, 2) * y - a(1, 3) * y) * z + (a(1, 3) * y - a(2, 3)) * z * z};
}

// The closed triple-sum formula for the flag equation with lambda_ii = 1,
//   lambda_ij' = sum_{k=j}^{n} a_ik l_kj - sum_{k<=j} sum_{r>=j} l_ik a_kr l_rj
//              + sum_{k<=j} sum_{k<r<=j} sum_{s>=j} l_ir l_rk a_ks l_sj,
// evaluated verbatim on a unit lower triangular l (1-based indices).
// Agrees with the LU-derived flag equation for n <= 3 only.
template <class T>
Matrix<T> flag_triple_sum(const Matrix<T>& a, const Matrix<T>& l) {
  const std::size_t n = a.rows();
  auto A = [&](std::size_t i, std::size_t j) -> const T& { return a(i - 1, j - 1); };
  auto L = [&](std::size_t i, std::size_t j) -> const T& { return l(i - 1, j - 1); };
  Matrix<T> out(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j < i; ++j) {
      T s;
      for (std::size_t k = j; k <= n; ++k) s += A(i, k) * L(k, j);
      for (std::size_t k = 1; k <= j; ++k)
        for (std::size_t r = j; r <= n; ++r) s -= L(i, k) * A(k, r) * L(r, j);
      for (std::size_t k = 1; k <= j; ++k)
        for (std::size_t r = k + 1; r <= j; ++r)
          for (std::size_t q = j; q <= n; ++q) s += L(i, r) * L(r, k) * A(k, q) * L(q, j);
      out(i - 1, j - 1) = s;
    }
  return out;
}

// lambda^(m)_ij = lambda_{i+m,j} - sum_{k=1}^{m} lambda_{i+m,k} lambda_{kj}, verbatim.
// With lambda_jj = 1 the k = j term cancels the leading one.
inline MatK flag_to_grassmann_display(const FlagCoords& l, std::size_t m) {
  const std::size_t n = l.n();
  const MatK& lam = l.matrix();
  MatK out(n - m, m);
  for (std::size_t i = 1; i <= n - m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      RatFunc s = lam(i + m - 1, j - 1);
      for (std::size_t k = 1; k <= m; ++k) s -= lam(i + m - 1, k - 1) * lam(k - 1, j - 1);
      out(i - 1, j - 1) = s;
    }
  return out;
}

// The y symmetric coordinate as printed: (x2 - 1)/(x1 - i x2).
inline GQ symmetric_y_display(const SpherePoint<GQ>& p) {
  const GQ den = p[1] - GQ::i() * p[2];
  if (den.is_zero()) throw Error(ErrorCode::ChartDenominatorVanishes, "x1 - i x2 vanishes");
  return (p[2] - GQ(1)) / den;
}

// Rotation formulas as printed, in the axis numbering of rotation_matrix().
inline Moebius rotation_display(int axis, const GQ& lam) {
  const GQ i = GQ::i();
  const GQ inv = lam.inverse();
  switch (axis) {
    case 0: return {Matrix<GQ>{{lam + GQ(1), lam - GQ(1)}, {lam - GQ(1), lam + GQ(1)}}};
    case 1: return {Matrix<GQ>{{lam, GQ()}, {GQ(), GQ(1)}}};
    case 2: {
      const GQ k = lam + inv + GQ::from_fractions(1, 2);
      return {Matrix<GQ>{{k, -i * (lam - inv)}, {i * (inv - lam), -k}}};
    }
    default: throw Error(ErrorCode::InvalidArgument, "rotation axis must be 0, 1 or 2");
  }
}

// The so(3) -> sl(2) basis images as printed, for L01, L02, L12.
inline std::array<Matrix<GQ>, 3> sl2_table_display() {
  const GQ i = GQ::i();
  const GQ h = GQ::from_fractions(1, 2);
  return {Matrix<GQ>{{i * h, GQ()}, {GQ(), -i * h}}, Matrix<GQ>{{GQ(), h}, {-h, GQ()}},
          Matrix<GQ>{{GQ(), -i * h}, {-i * h, GQ()}}};
}

// The addition formulas as printed (note -s^2/4 and the factor 6/2).
inline AdditionResult addition_display(const RatFunc& a, const RatFunc& b, const RatFunc& db, const GQ& x0,
                                       const GQ& y0) {
  const RatFunc ay0 = a * RatFunc(y0);
  const RatFunc s = (db - ay0) / (a * (b - RatFunc(x0)));
  const RatFunc quarter(GQ::from_fractions(1, 4));
  return {-b - RatFunc(x0) - quarter * s * s,
          -(db + ay0) / (RatFunc(2) * a) + RatFunc(3) * (b + RatFunc(x0)) * s - quarter * s * s * s};
}

// ---------------------------------------------------------------------------
// Diffing a displayed system against a generated one.

struct TermDifference {
  std::size_t equation = 0;  // index into the system
  Monomial monomial;         // in the unknowns
  Coeff displayed;
  Coeff generated;
};

struct SystemAudit {
  std::vector<TermDifference> differences;
  // Residual of each equation on the witness solution; zero means satisfied.
  std::vector<RatFunc> displayed_residuals;
  std::vector<RatFunc> generated_residuals;
  bool generated_satisfied = false;
};

// Evaluates a symbolic right-hand side at a concrete field and unknown values.
inline RatFunc evaluate_symbolic(const SysPoly& p, const MatK& a, std::span<const RatFunc> unknowns) {
  std::vector<RatFunc> entries(a.data().begin(), a.data().end());
  auto lift = [&](const Coeff& c) {
    return c.evaluate<RatFunc>(std::span<const RatFunc>(entries), [](const GQ& g) { return RatFunc(g); });
  };
  return p.evaluate<RatFunc>(unknowns, lift);
}

// `derivatives[k]` is the derivative of unknown k along the witness solution.
inline SystemAudit audit_system(const std::vector<SysPoly>& displayed, const std::vector<SysPoly>& generated,
                                const MatK& witness_field, std::span<const RatFunc> witness_unknowns,
                                std::span<const RatFunc> witness_derivatives) {
  SystemAudit audit;
  for (std::size_t e = 0; e < generated.size(); ++e) {
    std::map<Monomial, bool, MonomialOrder> monomials;
    for (const auto& [m, c] : displayed[e].terms()) monomials[m] = true;
    for (const auto& [m, c] : generated[e].terms()) monomials[m] = true;
    for (const auto& [m, unused] : monomials) {
      Coeff d = displayed[e].coefficient(m);
      Coeff g = generated[e].coefficient(m);
      if (!(d == g)) audit.differences.push_back({e, m, d, g});
    }
    audit.displayed_residuals.push_back(witness_derivatives[e] -
                                        evaluate_symbolic(displayed[e], witness_field, witness_unknowns));
    audit.generated_residuals.push_back(witness_derivatives[e] -
                                        evaluate_symbolic(generated[e], witness_field, witness_unknowns));
  }
  audit.generated_satisfied = std::all_of(audit.generated_residuals.begin(), audit.generated_residuals.end(),
                                          [](const RatFunc& r) { return r.is_zero(); });
  return audit;
}

// Default witness for the rank 3 audits: a unipotent-times-diagonal tau with
// nonvanishing leading principal minors and generic flag coordinates.
inline MatK default_witness_rank3() {
  const RatFunc t = RatFunc::t();
  const RatFunc one(1);
  const MatK lower{{one, RatFunc(), RatFunc()}, {t, one, RatFunc()}, {t * t + one, RatFunc(2) * t - one, one}};
  const MatK upper{{one, t, RatFunc(GQ::i())}, {RatFunc(), t + one, t * t}, {RatFunc(), RatFunc(), RatFunc(3)}};
  return lower * upper;
}

// Audits the rank 3 flag display against the generated system on a witness tau.
inline SystemAudit audit_flag_rank3(const MatK& witness_tau) {
  const std::vector<SysPoly> generated = flag_polynomials(symbolic_field(3)).rhs;
  const GroupElement tau(witness_tau);
  const MatK a = log_deriv(tau).matrix();
  const MatK l = flag_coords(tau).matrix();
  const MatK dl = derive(l);
  std::vector<RatFunc> unknowns;
  std::vector<RatFunc> derivs;
  for (auto [i, j] : flag_unknown_order(3)) {
    unknowns.push_back(l(i, j));
    derivs.push_back(dl(i, j));
  }
  return audit_system(flag_rank3(), generated, a, unknowns, derivs);
}

// Audits a rank 3 projective Riccati display (m = 1 or 2) on a witness tau.
inline SystemAudit audit_riccati_rank3(std::size_t m, const MatK& witness_tau) {
  const std::vector<SysPoly> generated = riccati_polynomials(symbolic_field(3), m).rhs;
  const GroupElement tau(witness_tau);
  const MatK a = log_deriv(tau).matrix();
  const MatK lam = plucker_coords(first_columns(witness_tau, m), m).matrix();
  const MatK dlam = derive(lam);
  return audit_system(m == 1 ? projective_riccati_rank3_lines() : projective_riccati_rank3_planes(), generated, a,
                      lam.data(), dlam.data());
}

}  // namespace vessiot::classical
