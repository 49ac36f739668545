#pragma once

// Lie-Vessiot systems induced by x' = A x on grassmanians and on the flag
// variety of GL(n), and the Lie-Kolchin reduction they enable.
//
// Charts are fixed to the standard basis order:
//  * an m-plane spanned by the columns of X = [U; Y] has plückerian
//    coordinates Lambda = Y U^{-1}, an (n-m) x m matrix;
//  * a full flag given by tau with nonvanishing leading principal minors has
//    coordinates the strictly lower entries of the unit lower factor L of
//    tau = L U.
// When a chart minor vanishes the operation throws instead of permuting the
// basis; see permute_basis() for explicit chart changes.
//
// Induced systems:
//  * matrix Riccati   Lambda' = A21 + A22 Lambda - Lambda A11 - Lambda A12 Lambda
//  * flag equation    L' = L * strictly_lower(L^{-1} A L)
// The flag form follows from differentiating tau = L U with tau' = A tau:
// L^{-1} L' + U' U^{-1} = L^{-1} A L, and the first summand is strictly lower.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vessiot/automorphic.hpp"
#include "vessiot/matrix.hpp"
#include "vessiot/mpoly.hpp"

namespace vessiot {

struct RiccatiSystem {
  std::size_t n = 0;
  std::size_t m = 0;
  Blocks<RatFunc> blocks;
};

struct FlagSystem {
  AutomorphicField a;
};

class PlaneCoords {
 public:
  PlaneCoords(std::size_t n, std::size_t m, MatK lambda) : n_(n), m_(m), lambda_(std::move(lambda)) {
    if (m < 1 || m >= n) throw Error(ErrorCode::BadBlockSize, "plane dimension outside [1, n)");
    if (lambda_.rows() != n - m || lambda_.cols() != m)
      throw Error(ErrorCode::DimensionMismatch, "plane coordinates must be (n-m) x m, got " + lambda_.shape());
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  const MatK& matrix() const noexcept { return lambda_; }

  friend bool operator==(const PlaneCoords& a, const PlaneCoords& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.lambda_ == b.lambda_;
  }

 private:
  std::size_t n_;
  std::size_t m_;
  MatK lambda_;
};

// Unit lower triangular matrix whose strictly lower entries are the flag
// coordinates lambda_ij, i > j.
class FlagCoords {
 public:
  explicit FlagCoords(MatK lambda) : lambda_(std::move(lambda)) {
    if (!is_unit_lower_triangular(lambda_))
      throw Error(ErrorCode::InvalidArgument, "flag coordinates must form a unit lower triangular matrix");
  }

  static FlagCoords identity(std::size_t n) { return FlagCoords(MatK::identity(n)); }

  std::size_t n() const noexcept { return lambda_.rows(); }
  const MatK& matrix() const noexcept { return lambda_; }

  friend bool operator==(const FlagCoords& a, const FlagCoords& b) { return a.lambda_ == b.lambda_; }

 private:
  MatK lambda_;
};

inline RiccatiSystem riccati_generate(const AutomorphicField& a, std::size_t m) {
  return {a.n(), m, block_split(a.matrix(), m)};
}

inline FlagSystem flag_generate(const AutomorphicField& a) { return {a}; }

template <class T>
Matrix<T> riccati_rhs_generic(const Blocks<T>& b, const Matrix<T>& lambda) {
  return b.a21 + b.a22 * lambda - lambda * b.a11 - lambda * b.a12 * lambda;
}

inline MatK riccati_rhs(const RiccatiSystem& sys, const PlaneCoords& l) {
  if (l.n() != sys.n || l.m() != sys.m)
    throw Error(ErrorCode::DimensionMismatch, "plane coordinates do not match the Riccati system");
  return riccati_rhs_generic(sys.blocks, l.matrix());
}

inline bool riccati_check_solution(const RiccatiSystem& sys, const PlaneCoords& l) {
  return derive(l.matrix()) == riccati_rhs(sys, l);
}

template <class T>
Matrix<T> first_columns(const Matrix<T>& x, std::size_t m) {
  return x.block(0, 0, x.rows(), m);
}

// Lambda = Y U^{-1} for X = [U; Y] (n x m).
inline PlaneCoords plucker_coords(const MatK& x, std::size_t m) {
  const std::size_t n = x.rows();
  if (m < 1 || m >= n) throw Error(ErrorCode::BadBlockSize, "plane dimension outside [1, n)");
  if (x.cols() != m) throw Error(ErrorCode::DimensionMismatch, "expected an n x m matrix, got " + x.shape());
  MatK u = x.block(0, 0, m, m);
  if (determinant(u).is_zero()) throw Error(ErrorCode::ChartMinorVanishes, "top m x m minor vanishes");
  return PlaneCoords(n, m, x.block(m, 0, n - m, m) * inverse(u));
}

inline FlagCoords flag_coords(const MatK& tau) { return FlagCoords(lu_flag_decompose(tau).lower); }
inline FlagCoords flag_coords(const GroupElement& tau) { return flag_coords(tau.matrix()); }

template <class T>
Matrix<T> flag_rhs_generic(const Matrix<T>& a, const Matrix<T>& l) {
  return l * strictly_lower_part(unit_lower_inverse(l) * a * l);
}

inline MatK flag_rhs(const FlagSystem& sys, const FlagCoords& l) {
  require_same_rank(sys.a.n(), l.n());
  return flag_rhs_generic(sys.a.matrix(), l.matrix());
}

inline bool flag_check_solution(const FlagSystem& sys, const FlagCoords& l) {
  return derive(l.matrix()) == flag_rhs(sys, l);
}

// The m-th subspace of the flag in plückerian coordinates: L21 L11^{-1}.
inline PlaneCoords flag_to_grassmann(const FlagCoords& l, std::size_t m) {
  const std::size_t n = l.n();
  if (m < 1 || m >= n) throw Error(ErrorCode::BadBlockSize, "plane dimension outside [1, n)");
  const MatK& lam = l.matrix();
  return PlaneCoords(n, m, lam.block(m, 0, n - m, m) * unit_lower_inverse(lam.block(0, 0, m, m)));
}

struct Reduction {
  GroupElement tau;
  AutomorphicField b;
  bool solution = false;
  std::optional<std::string> diagnostic;  // set when the input was not a solution
};

// tau = [[I, 0], [-Lambda, I]], the inverse of [[I, 0], [Lambda, I]].
// B = gauge_transform(tau, A) has (2,1) block RiccatiRHS(Lambda) - Lambda',
// so it is block upper triangular exactly when Lambda solves the system.
inline Reduction reduce_by_plane(const AutomorphicField& a, const PlaneCoords& l) {
  const std::size_t n = a.n();
  const std::size_t m = l.m();
  if (l.n() != n) throw Error(ErrorCode::DimensionMismatch, "plane coordinates do not match the field");
  const MatK tau_m = block_join<RatFunc>({MatK::identity(m), MatK(m, n - m), -l.matrix(), MatK::identity(n - m)});
  GroupElement tau(tau_m);
  AutomorphicField b = gauge_transform(tau, a);
  const bool ok = riccati_check_solution(riccati_generate(a, m), l);
  std::optional<std::string> diag;
  if (!ok) diag = "NotASolution: plane coordinates do not satisfy the matrix Riccati equation";
  return {std::move(tau), std::move(b), ok, std::move(diag)};
}

// tau = L^{-1}; B = gauge_transform(tau, A) is upper triangular exactly when
// the flag coordinates solve the flag equation.
inline Reduction reduce_by_flag(const AutomorphicField& a, const FlagCoords& l) {
  require_same_rank(a.n(), l.n());
  GroupElement tau = GroupElement(l.matrix()).inverse();
  AutomorphicField b = gauge_transform(tau, a);
  const bool ok = flag_check_solution(flag_generate(a), l);
  std::optional<std::string> diag;
  if (!ok) diag = "NotASolution: flag coordinates do not satisfy the flag equation";
  return {std::move(tau), std::move(b), ok, std::move(diag)};
}

// ---------------------------------------------------------------------------
// Chart changes.

// 1-based permutation p of {1..n}: new basis vector k is old e_{p_k}.
// Field components transform as A'(k, l) = A(p_k, p_l).
inline std::vector<std::size_t> validate_permutation(const std::vector<std::size_t>& p, std::size_t n) {
  if (p.size() != n) throw Error(ErrorCode::InvalidArgument, "permutation must list " + std::to_string(n) + " indices");
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> zero_based;
  for (std::size_t v : p) {
    if (v < 1 || v > n || seen[v - 1]) throw Error(ErrorCode::InvalidArgument, "not a permutation of 1..n");
    seen[v - 1] = true;
    zero_based.push_back(v - 1);
  }
  return zero_based;
}

template <class T>
Matrix<T> permute_basis(const Matrix<T>& a, const std::vector<std::size_t>& p) {
  require_square(a, "permute_basis");
  auto q = validate_permutation(p, a.rows());
  Matrix<T> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(q[i], q[j]);
  return r;
}

// Row reindexing for column matrices (spanning sets, group elements).
template <class T>
Matrix<T> permute_rows(const Matrix<T>& x, const std::vector<std::size_t>& p) {
  auto q = validate_permutation(p, x.rows());
  Matrix<T> r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(q[i], j);
  return r;
}

// ---------------------------------------------------------------------------
// Polynomial form of the induced systems, for rendering and comparison.
//
// The right-hand sides are multivariate polynomials in the unknowns with
// coefficients in C. With C = RatFunc they describe a concrete field; with
// C = MPoly<GQ> over indeterminates a_ij they give the general system.

template <class C>
struct PolySystem {
  std::vector<std::string> unknowns;                         // display names
  std::vector<std::pair<std::size_t, std::size_t>> indices;  // 1-based (i, j)
  std::vector<MPoly<C>> rhs;
};

namespace detail {

inline std::string unknown_name(std::size_t count, std::size_t i, std::size_t j) {
  return count == 1 ? std::string("λ") : "λ" + std::to_string(i) + std::to_string(j);
}

}  // namespace detail

// Unknowns lambda^(m)_ij, row-major.
template <class C>
PolySystem<C> riccati_polynomials(const Matrix<C>& a, std::size_t m) {
  using P = MPoly<C>;
  Matrix<P> ap = a.map([](const C& c) { return P(c); });
  Blocks<P> blocks = block_split(ap, m);
  const std::size_t rows = a.rows() - m;
  Matrix<P> lambda(rows, m);
  PolySystem<C> sys;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      lambda(i, j) = P::variable(i * m + j);
      sys.unknowns.push_back(detail::unknown_name(rows * m, i + 1, j + 1));
      sys.indices.emplace_back(i + 1, j + 1);
    }
  Matrix<P> rhs = riccati_rhs_generic(blocks, lambda);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < m; ++j) sys.rhs.push_back(rhs(i, j));
  return sys;
}

// Unknowns lambda_ij, i > j, ordered by column then row
// (lambda_21, lambda_31, ..., lambda_n1, lambda_32, ...).
inline std::vector<std::pair<std::size_t, std::size_t>> flag_unknown_order(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j + 1; i < n; ++i) order.emplace_back(i, j);
  return order;
}

template <class C>
Matrix<MPoly<C>> flag_unknown_matrix(std::size_t n) {
  using P = MPoly<C>;
  Matrix<P> l = Matrix<P>::identity(n);
  auto order = flag_unknown_order(n);
  for (std::size_t k = 0; k < order.size(); ++k) l(order[k].first, order[k].second) = P::variable(k);
  return l;
}

template <class C>
PolySystem<C> flag_polynomials(const Matrix<C>& a) {
  using P = MPoly<C>;
  require_square(a, "flag_polynomials");
  const std::size_t n = a.rows();
  Matrix<P> ap = a.map([](const C& c) { return P(c); });
  Matrix<P> l = flag_unknown_matrix<C>(n);
  Matrix<P> rhs = flag_rhs_generic(ap, l);
  PolySystem<C> sys;
  auto order = flag_unknown_order(n);
  for (auto [i, j] : order) {
    sys.unknowns.push_back(detail::unknown_name(order.size(), i + 1, j + 1));
    sys.indices.emplace_back(i + 1, j + 1);
    sys.rhs.push_back(rhs(i, j));
  }
  return sys;
}

// General n x n field with indeterminate entries a_ij (variable i*n + j).
inline Matrix<MPoly<GQ>> symbolic_field(std::size_t n) {
  Matrix<MPoly<GQ>> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = MPoly<GQ>::variable(i * n + j);
  return a;
}

inline std::vector<std::string> symbolic_field_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) names.push_back("a" + std::to_string(i) + std::to_string(j));
  return names;
}

}  // namespace vessiot
