#pragma once

// The differential field K = Q(i)(t) with derivation d/dt.
//
// Elements are kept in canonical form: gcd(num, den) = 1 and den monic, so
// equality is structural. Every solution checker in the library relies on it.

#include <string>
#include <utility>

#include "vessiot/poly.hpp"

namespace vessiot {

class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(GQ constant) : num_(std::move(constant)), den_(1) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  RatFunc(I constant) : RatFunc(GQ(constant)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)

  RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    Poly g = gcd(num, den);
    num_ = exact_div(num, g);
    den_ = exact_div(den, g);
    normalize_sign();
  }

  static RatFunc t() { return RatFunc(Poly::t()); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  // Requires is_constant().
  GQ constant_value() const { return num_.constant_term(); }

  RatFunc operator-() const { return from_canonical(-num_, den_); }

  RatFunc inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero function");
    return from_coprime(den_, num_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return from_canonical(a.num_ * b.num_, Poly(1));
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    return from_coprime(exact_div(a.num_, g1) * exact_div(b.num_, g2),
                        exact_div(a.den_, g2) * exact_div(b.den_, g1));
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Quotient rule; the result is re-canonicalised.
  RatFunc derivative() const {
    if (is_constant()) return {};
    if (is_polynomial()) return from_canonical(num_.derivative(), Poly(1));
    // (n/d)' = (n'd - nd')/d^2; only factors of d can cancel.
    Poly d_prime = den_.derivative();
    Poly g = gcd(den_, d_prime);
    Poly d_red = exact_div(den_, g);
    Poly top = num_.derivative() * d_red - num_ * exact_div(d_prime, g);
    return RatFunc(std::move(top), d_red * den_);
  }

  GQ eval(const GQ& at) const {
    GQ d = den_.eval(at);
    if (d.is_zero()) throw Error(ErrorCode::PoleAtPoint, "pole at t = " + to_string(at));
    return num_.eval(at) / d;
  }

 private:
  static RatFunc from_canonical(Poly num, Poly den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (r.num_.is_zero()) r.den_ = Poly(1);
    return r;
  }

  static RatFunc from_coprime(Poly num, Poly den) {
    if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize_sign();
    return r;
  }

  static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    const Poly bn = subtract ? -b.num_ : b.num_;
    if (a.is_polynomial() && b.is_polynomial()) return from_canonical(a.num_ + bn, Poly(1));
    if (a.den_ == b.den_) return RatFunc(a.num_ + bn, a.den_);
    Poly g = gcd(a.den_, b.den_);
    if (g.is_one()) return from_coprime(a.num_ * b.den_ + bn * a.den_, a.den_ * b.den_);
    Poly ad = exact_div(a.den_, g);
    Poly bd = exact_div(b.den_, g);
    Poly num = a.num_ * bd + bn * ad;
    Poly g2 = gcd(num, g);
    return from_coprime(exact_div(num, g2), exact_div(a.den_, g2) * bd);
  }

  void normalize_sign() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (!den_.leading().is_one()) {
      GQ lead = den_.leading();
      num_ /= lead;
      den_ /= lead;
    }
  }

  Poly num_;
  Poly den_;
};

inline RatFunc pow(const RatFunc& base, unsigned exponent) {
  return RatFunc(pow(base.num(), exponent), pow(base.den(), exponent));
}

inline RatFunc derive(const RatFunc& x) { return x.derivative(); }

// x'/x
inline RatFunc log_derivative(const RatFunc& x) {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "logarithmic derivative of zero");
  return x.derivative() / x;
}

// Verifies b' = a; it does not search for b.
inline bool check_integral_solution(const RatFunc& a, const RatFunc& b) {
  return b.derivative() == a;
}

// Verifies b'/b = a; b must be nonzero.
inline bool check_exponential_solution(const RatFunc& a, const RatFunc& b) {
  return log_derivative(b) == a;
}

inline bool is_single_term(const RatFunc& x) {
  return x.is_polynomial() && x.num().term_count() <= 1 &&
         (x.num().is_zero() || is_single_term(x.num().leading()));
}

// Canonical text: "num", "num/den", "(num)/(den)"; parses back to the same value.
inline std::string to_string(const RatFunc& x) {
  std::string num = to_string(x.num());
  if (x.den().is_one()) return num;
  const bool bare_num = x.num().term_count() == 1 && is_single_term(x.num().leading()) &&
                        x.num().leading().is_real();
  const bool bare_den = x.den().term_count() == 1;
  return (bare_num ? num : "(" + num + ")") + "/" +
         (bare_den ? to_string(x.den()) : "(" + to_string(x.den()) + ")");
}

inline std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << to_string(x); }

}  // namespace vessiot
