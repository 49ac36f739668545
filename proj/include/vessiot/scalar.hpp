#pragma once

// The constant field: Gaussian rationals Q(i) over GMP rationals.
//
// Every explicit formula handled by this library lives over Q(i); the
// algebraically closed field of constants of the general theory is replaced
// by this subfield. The SO(3) formulas need i, nothing else needs more.

#include <gmpxx.h>

#include <concepts>
#include <ostream>
#include <string>
#include <utility>

#include "vessiot/errors.hpp"

namespace vessiot {

class GaussianRational {
 public:
  GaussianRational() = default;

  template <std::integral I>
  GaussianRational(I value) : re_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  GaussianRational(mpq_class re, mpq_class im = 0)  // NOLINT(google-explicit-constructor)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  // num/den + (inum/iden) i
  static GaussianRational from_fractions(long num, long den, long inum = 0, long iden = 1) {
    if (den == 0 || iden == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    return {mpq_class(num, den), mpq_class(inum, iden)};
  }

  const mpq_class& real() const noexcept { return re_; }
  const mpq_class& imag() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  // |x|^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero constant");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero constant");
    if (o.is_real()) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Total order used only for deterministic containers.
  friend bool lexicographic_less(const GaussianRational& a, const GaussianRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

using GQ = GaussianRational;

inline GaussianRational conjugate(const GaussianRational& x) { return x.conj(); }

inline GaussianRational pow(GaussianRational base, unsigned exponent) {
  GaussianRational result(1);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

// One printed term (no top-level sum), e.g. "3/4", "-2i", "1/3*i".
inline bool is_single_term(const GaussianRational& x) {
  return sgn(x.real()) == 0 || sgn(x.imag()) == 0;
}

namespace detail {

inline std::string imaginary_text(const mpq_class& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  if (im.get_den() == 1) return im.get_str() + "i";
  return im.get_str() + "*i";
}

}  // namespace detail

// Text form: "a/b", "c/d*i", "a/b + c/d*i"; integral imaginary parts print as "2i".
inline std::string to_string(const GaussianRational& x) {
  if (x.is_real()) return x.real().get_str();
  if (sgn(x.real()) == 0) return detail::imaginary_text(x.imag());
  if (sgn(x.imag()) < 0) return x.real().get_str() + " - " + detail::imaginary_text(-x.imag());
  return x.real().get_str() + " + " + detail::imaginary_text(x.imag());
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << to_string(x);
}

}  // namespace vessiot
