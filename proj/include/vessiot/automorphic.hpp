#pragma once

// Automorphic vector fields on GL(n): the right logarithmic derivative
// l(sigma) = sigma' sigma^{-1}, the adjoint action and gauge transformations.
//
// With this convention a fundamental matrix U of x' = A x satisfies l(U) = A,
// and the cocycle law reads
//   l(sigma tau) = l(sigma) + Adj_sigma(l(tau)).
// Taking tau = sigma^{-1} gives the inverse law
//   l(sigma^{-1}) = -Adj_{sigma^{-1}}(l(sigma)),
// which is the form implemented and tested (not -Adj_sigma(l(sigma))).

#include <cstddef>
#include <string>
#include <utility>
#include <variant>

#include "vessiot/matrix.hpp"

namespace vessiot {

class AutomorphicField {
 public:
  explicit AutomorphicField(MatK a) : a_(std::move(a)) { require_square(a_, "AutomorphicField"); }

  static AutomorphicField zero(std::size_t n) { return AutomorphicField(MatK(n, n)); }

  std::size_t n() const noexcept { return a_.rows(); }
  const MatK& matrix() const noexcept { return a_; }

  friend bool operator==(const AutomorphicField& x, const AutomorphicField& y) { return x.a_ == y.a_; }

 private:
  MatK a_;
};

// sigma in GL(n, K). The inverse is computed once on construction; a singular
// matrix is rejected with ErrorCode::Singular.
class GroupElement {
 public:
  explicit GroupElement(MatK sigma) : sigma_(std::move(sigma)), inverse_(vessiot::inverse(sigma_)) {}

  static GroupElement identity(std::size_t n) { return GroupElement(MatK::identity(n), MatK::identity(n)); }

  std::size_t n() const noexcept { return sigma_.rows(); }
  const MatK& matrix() const noexcept { return sigma_; }
  const MatK& inverse_matrix() const noexcept { return inverse_; }

  GroupElement inverse() const { return GroupElement(inverse_, sigma_); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.sigma_ * b.sigma_, b.inverse_ * a.inverse_);
  }

 private:
  GroupElement(MatK sigma, MatK inverse) : sigma_(std::move(sigma)), inverse_(std::move(inverse)) {}

  MatK sigma_;
  MatK inverse_;
};

inline void require_same_rank(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorCode::DimensionMismatch, "rank " + std::to_string(a) + " vs " + std::to_string(b));
}

inline AutomorphicField log_deriv(const GroupElement& sigma) {
  return AutomorphicField(derive(sigma.matrix()) * sigma.inverse_matrix());
}

// tau A tau^{-1}
inline AutomorphicField adjoint(const GroupElement& tau, const AutomorphicField& a) {
  require_same_rank(tau.n(), a.n());
  return AutomorphicField(tau.matrix() * a.matrix() * tau.inverse_matrix());
}

// tau A tau^{-1} + tau' tau^{-1}
inline AutomorphicField gauge_transform(const GroupElement& tau, const AutomorphicField& a) {
  require_same_rank(tau.n(), a.n());
  return AutomorphicField(adjoint(tau, a).matrix() + log_deriv(tau).matrix());
}

// sigma solves the automorphic equation of A iff l(sigma) = A.
inline bool check_automorphic_solution(const AutomorphicField& a, const GroupElement& sigma) {
  require_same_rank(sigma.n(), a.n());
  return log_deriv(sigma) == a;
}

namespace shape {
struct SkewSymmetric {};
struct UpperTriangular {};
struct BlockUpper {
  std::size_t m;
};
struct TraceZero {};
}  // namespace shape

using SubalgebraShape = std::variant<shape::SkewSymmetric, shape::UpperTriangular, shape::BlockUpper, shape::TraceZero>;

inline bool is_in_subalgebra(const MatK& a, const SubalgebraShape& s) {
  require_square(a, "is_in_subalgebra");
  const std::size_t n = a.rows();
  if (std::holds_alternative<shape::SkewSymmetric>(s)) return a.transpose() == -a;
  if (std::holds_alternative<shape::UpperTriangular>(s)) return is_upper_triangular(a);
  if (std::holds_alternative<shape::TraceZero>(s)) return trace(a).is_zero();
  const std::size_t m = std::get<shape::BlockUpper>(s).m;
  if (m < 1 || m >= n) throw Error(ErrorCode::BadBlockSize, "block size " + std::to_string(m) + " outside [1, n)");
  return a.block(m, 0, n - m, m).is_zero();
}

inline bool is_in_subalgebra(const AutomorphicField& a, const SubalgebraShape& s) {
  return is_in_subalgebra(a.matrix(), s);
}

}  // namespace vessiot
