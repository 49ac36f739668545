#pragma once

// Sparse multivariate polynomials over an arbitrary coefficient ring.
//
// Used for the generated Lie-Vessiot systems (unknowns as variables, matrix
// entries as coefficients), for symbolic identities on the sphere, and for the
// elliptic and pendulum audits. Coefficients may themselves be MPoly, which is
// how the fully symbolic systems with indeterminate a_ij are represented.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vessiot/poly.hpp"
#include "vessiot/ratfunc.hpp"
#include "vessiot/scalar.hpp"

namespace vessiot {

// Exponent vector with trailing zeros trimmed.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

// Graded; within a degree, larger exponents of earlier variables first
// (x^2 before x*y before y^2).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da < db;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      const unsigned ea = k < a.size() ? a[k] : 0;
      const unsigned eb = k < b.size() ? b[k] : 0;
      if (ea != eb) return ea > eb;
    }
    return false;
  }
};

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  return r;
}

inline unsigned exponent_of(const Monomial& m, std::size_t var) { return var < m.size() ? m[var] : 0; }

template <class Coeff>
class MPoly {
 public:
  using coefficient_type = Coeff;
  using TermMap = std::map<Monomial, Coeff, MonomialOrder>;

  MPoly() = default;
  MPoly(Coeff c) { add_term({}, std::move(c)); }  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  MPoly(I c) : MPoly(Coeff(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly variable(std::size_t index) {
    Monomial m(index + 1, 0);
    m[index] = 1;
    MPoly p;
    p.terms_.emplace(std::move(m), Coeff(1));
    return p;
  }

  static MPoly term(Monomial m, Coeff c) {
    MPoly p;
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == Coeff(1); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Coeff coefficient(const Monomial& m) const {
    Monomial key = m;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff() : it->second;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, exponent_of(m, var));
    return d;
  }

  void add_term(Monomial m, Coeff c) {
    if (c.is_zero()) return;
    trim(m);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  MPoly operator-() const {
    MPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  // d/d(var)
  MPoly partial(std::size_t var) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
      const unsigned e = exponent_of(m, var);
      if (e == 0) continue;
      Monomial dm = m;
      dm[var] -= 1;
      r.add_term(std::move(dm), c * Coeff(static_cast<long>(e)));
    }
    return r;
  }

  // Replaces variable `var` by `value`.
  MPoly substitute(std::size_t var, const MPoly& value) const {
    MPoly r;
    std::vector<MPoly> powers{MPoly(Coeff(1))};
    for (const auto& [m, c] : terms_) {
      const unsigned e = exponent_of(m, var);
      while (powers.size() <= e) powers.push_back(powers.back() * value);
      Monomial rest = m;
      if (var < rest.size()) rest[var] = 0;
      r += term(std::move(rest), c) * powers[e];
    }
    return r;
  }

  // Evaluates with every variable bound; `lift` maps coefficients into V.
  template <class V, class Lift>
  V evaluate(std::span<const V> values, Lift lift) const {
    V acc{};
    for (const auto& [m, c] : terms_) {
      V term_value = lift(c);
      for (std::size_t k = 0; k < m.size(); ++k)
        for (unsigned e = 0; e < m[k]; ++e) term_value = term_value * values[k];
      acc = acc + term_value;
    }
    return acc;
  }

  // Applies f to each coefficient.
  template <class F>
  auto map_coefficients(F f) const -> MPoly<std::invoke_result_t<F, const Coeff&>> {
    MPoly<std::invoke_result_t<F, const Coeff&>> r;
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

 private:
  static void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }

  TermMap terms_;
};

template <class Coeff>
inline bool is_single_term(const MPoly<Coeff>& p) {
  if (p.term_count() == 0) return true;
  return p.term_count() == 1 && is_single_term(p.terms().begin()->second);
}

namespace detail {

inline std::string monomial_text(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[k];
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out;
}

}  // namespace detail

// Renders with the given variable names, lowest degree first. `coeff_text`
// prints a coefficient; sums are parenthesised.
template <class Coeff, class CoeffText>
std::string to_string(const MPoly<Coeff>& p, std::span<const std::string> names, CoeffText coeff_text) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    std::string mono = detail::monomial_text(m, names);
    std::string term;
    if (mono.empty()) {
      term = coeff_text(c);
    } else if (c == Coeff(1)) {
      term = mono;
    } else if (c == Coeff(-1)) {
      term = "-" + mono;
    } else if (is_single_term(c)) {
      term = coeff_text(c) + "*" + mono;
    } else {
      term = "(" + coeff_text(c) + ")*" + mono;
    }
    detail::append_term(out, term);
  }
  return out;
}

template <class Coeff>
std::string to_string(const MPoly<Coeff>& p, std::span<const std::string> names) {
  return to_string(p, names, [](const Coeff& c) { return to_string(c); });
}

}  // namespace vessiot
