#pragma once

// Canonical text and structured records for values and generated systems.
//
// Text output parses back with parse_ratfunc / parse_matrix. Systems print one
// equation per unknown in dot notation, e.g. "λ̇21 = a21 + (-a11 + a22)*λ21".
// Records are JSON documents with a "format_version" key; object keys are
// sorted, so a fixed input always serializes to the same bytes.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "vessiot/homspace.hpp"
#include "vessiot/matrix.hpp"
#include "vessiot/mpoly.hpp"
#include "vessiot/ratfunc.hpp"

namespace vessiot {

inline constexpr int kFormatVersion = 1;

inline std::string format_canonical(const GQ& x) { return to_string(x); }
inline std::string format_canonical(const RatFunc& x) { return to_string(x); }
inline std::string format_canonical(const MatK& x) { return to_string(x); }

// "λ21" -> "λ̇21": a combining dot above goes right after the first code point;
// x, y and z use their precomposed forms.
inline std::string dotted(const std::string& name) {
  if (name.empty()) return name;
  if (name[0] == 'x') return "ẋ" + name.substr(1);
  if (name[0] == 'y') return "ẏ" + name.substr(1);
  if (name[0] == 'z') return "ż" + name.substr(1);
  std::size_t first = 1;
  const auto lead = static_cast<unsigned char>(name[0]);
  if (lead >= 0xF0) first = 4;
  else if (lead >= 0xE0) first = 3;
  else if (lead >= 0xC0) first = 2;
  return name.substr(0, first) + "̇" + name.substr(first);
}

// Right-hand side of a concrete system (coefficients in K).
inline std::string format_rhs(const MPoly<RatFunc>& p, std::span<const std::string> unknowns) {
  return to_string(p, unknowns, [](const RatFunc& c) { return to_string(c); });
}

// Right-hand side of a general system (coefficients polynomial in the a_ij).
inline std::string format_rhs(const MPoly<MPoly<GQ>>& p, std::span<const std::string> unknowns,
                              std::span<const std::string> field_names) {
  return to_string(p, unknowns, [&](const MPoly<GQ>& c) { return to_string(c, field_names); });
}

template <class C, class RhsText>
std::string format_system(const PolySystem<C>& sys, RhsText rhs_text) {
  std::string out;
  for (std::size_t k = 0; k < sys.rhs.size(); ++k)
    out += dotted(sys.unknowns[k]) + " = " + rhs_text(sys.rhs[k]) + "\n";
  return out;
}

inline std::string format_canonical(const PolySystem<RatFunc>& sys) {
  return format_system(sys, [&](const MPoly<RatFunc>& p) { return format_rhs(p, sys.unknowns); });
}

inline std::string format_canonical(const PolySystem<MPoly<GQ>>& sys, std::span<const std::string> field_names) {
  return format_system(sys, [&](const MPoly<MPoly<GQ>>& p) { return format_rhs(p, sys.unknowns, field_names); });
}

// ---------------------------------------------------------------------------
// Records.

inline nlohmann::json matrix_record(const MatK& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// {"unknowns": [...], "equations": [{"unknown": "λ21", "terms": {"λ21*λ31": "-a13", "1": "a21"}}]}
template <class C, class CoeffText>
nlohmann::json system_record(const PolySystem<C>& sys, CoeffText coeff_text) {
  nlohmann::json eqs = nlohmann::json::array();
  for (std::size_t k = 0; k < sys.rhs.size(); ++k) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [m, c] : sys.rhs[k].terms()) {
      std::string key = detail::monomial_text(m, sys.unknowns);
      terms[key.empty() ? "1" : key] = coeff_text(c);
    }
    eqs.push_back({{"unknown", sys.unknowns[k]},
                   {"index", {sys.indices[k].first, sys.indices[k].second}},
                   {"terms", std::move(terms)}});
  }
  return {{"unknowns", sys.unknowns}, {"equations", std::move(eqs)}};
}

inline nlohmann::json system_record(const PolySystem<RatFunc>& sys) {
  return system_record(sys, [](const RatFunc& c) { return to_string(c); });
}

inline nlohmann::json system_record(const PolySystem<MPoly<GQ>>& sys, std::span<const std::string> field_names) {
  return system_record(sys, [&](const MPoly<GQ>& c) { return to_string(c, field_names); });
}

}  // namespace vessiot
