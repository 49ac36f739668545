#pragma once

// Dense univariate polynomials in t over Q(i).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vessiot/scalar.hpp"

namespace vessiot {

class Poly {
 public:
  Poly() = default;
  Poly(GQ constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
  }
  template <std::integral I>
  Poly(I constant) : Poly(GQ(constant)) {}  // NOLINT(google-explicit-constructor)

  // coeffs[k] multiplies t^k
  explicit Poly(std::vector<GQ> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<GQ> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly t() { return Poly(std::vector<GQ>{GQ(0), GQ(1)}); }
  static Poly monomial(GQ c, std::size_t degree) {
    std::vector<GQ> v(degree + 1);
    v[degree] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

  // -1 for the zero polynomial
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<GQ>& coeffs() const noexcept { return coeffs_; }

  GQ coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GQ(); }
  const GQ& leading() const { return coeffs_.back(); }
  GQ constant_term() const { return coeff(0); }

  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const GQ& c) { return !c.is_zero(); }));
  }

  Poly monic() const {
    if (is_zero() || leading().is_one()) return *this;
    return *this / leading();
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<GQ> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * GQ(static_cast<long>(k));
    return Poly(std::move(d));
  }

  GQ eval(const GQ& at) const {
    GQ acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= at;
      acc += *it;
    }
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator/=(const GQ& c) {
    for (auto& x : coeffs_) x /= c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GQ> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const GQ& c) {
    if (c.is_zero()) return {};
    for (auto& x : a.coeffs_) x *= c;
    return a;
  }
  friend Poly operator/(Poly a, const GQ& c) { return a /= c; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<GQ> coeffs_;
};

// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<GQ> rem = a.coeffs();
  std::vector<GQ> quo(rem.size() - b.coeffs().size() + 1);
  const GQ lead_inv = b.leading().inverse();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    GQ q = rem[k] * lead_inv;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
    quo[k - db] = std::move(q);
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

// Exact quotient; the caller guarantees b | a.
inline Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_constant()) return a / b.leading();
  return divmod(a, b).first;
}

namespace detail {

// Reduction Z[i][1/den] -> F_p with p = 1 mod 4, i -> a square root of -1.
// Used only to certify coprimality: if the images have a constant gcd and the
// leading coefficients survive, the polynomials are coprime over Q(i).
struct ModP {
  static constexpr std::uint64_t p = 2147483629ULL;
  static constexpr std::uint64_t sqrt_m1 = 1518275076ULL;

  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return a * b % p; }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) { return (a + b) % p; }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return (a + p - b) % p; }
  static std::uint64_t power(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e != 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  static std::uint64_t inv(std::uint64_t a) { return power(a, p - 2); }

  static std::optional<std::uint64_t> rational(const mpq_class& q) {
    const std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (d == 0) return std::nullopt;
    return mul(mpz_fdiv_ui(q.get_num_mpz_t(), p), inv(d));
  }

  static std::optional<std::uint64_t> image(const GQ& x) {
    const auto re = rational(x.real());
    const auto im = rational(x.imag());
    if (!re || !im) return std::nullopt;
    return add(*re, mul(*im, sqrt_m1));
  }

  // Image with the leading coefficient intact, or nothing.
  static std::optional<std::vector<std::uint64_t>> image(const Poly& f) {
    std::vector<std::uint64_t> out;
    out.reserve(f.coeffs().size());
    for (const GQ& c : f.coeffs()) {
      const auto v = image(c);
      if (!v) return std::nullopt;
      out.push_back(*v);
    }
    if (out.empty() || out.back() == 0) return std::nullopt;
    return out;
  }

  static void trim(std::vector<std::uint64_t>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }

  // Degree of gcd(f, g) over F_p; both nonzero.
  static std::size_t gcd_degree(std::vector<std::uint64_t> f, std::vector<std::uint64_t> g) {
    if (f.size() < g.size()) std::swap(f, g);
    while (!g.empty()) {
      const std::uint64_t lead_inv = inv(g.back());
      const std::size_t dg = g.size() - 1;
      for (std::size_t k = f.size(); k-- > dg;) {
        if (f[k] == 0) continue;
        const std::uint64_t q = mul(f[k], lead_inv);
        for (std::size_t j = 0; j <= dg; ++j) f[k - dg + j] = sub(f[k - dg + j], mul(q, g[j]));
      }
      f.resize(dg);
      trim(f);
      std::swap(f, g);
    }
    return f.size() - 1;
  }
};

inline bool certainly_coprime(const Poly& a, const Poly& b) {
  const auto fa = ModP::image(a);
  if (!fa) return false;
  const auto fb = ModP::image(b);
  if (!fb) return false;
  return ModP::gcd_degree(*fa, *fb) == 0;
}

}  // namespace detail

// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.is_zero()) return a.monic();
  if (b.is_constant()) return Poly(1);
  if (detail::certainly_coprime(a, b)) return Poly(1);
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Poly pow(Poly base, unsigned exponent) {
  Poly result(1);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

namespace detail {

// "c", "c*t", "c*t^k" with c parenthesised when it is a two-part complex.
inline std::string poly_term(const GQ& c, std::size_t k, const std::string& var) {
  std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
  if (k == 0) return is_single_term(c) ? to_string(c) : "(" + to_string(c) + ")";
  if (c.is_one()) return power;
  if (c == GQ(-1)) return "-" + power;
  if (is_single_term(c)) return to_string(c) + "*" + power;
  return "(" + to_string(c) + ")*" + power;
}

// Joins terms, folding a leading '-' of a term into the separator.
inline void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (!term.empty() && term[0] == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

}  // namespace detail

// Highest degree first: "3*t^2 - t + (1 + 2i)".
inline std::string to_string(const Poly& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const GQ& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    detail::append_term(out, detail::poly_term(c, k, var));
  }
  return out;
}

}  // namespace vessiot
