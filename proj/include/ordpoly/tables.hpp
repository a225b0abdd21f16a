#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "ordpoly/cartan.hpp"

namespace ordpoly {

// Canonical renderings of the first five polynomials (c = i hbar/2 expanded).
inline constexpr const char* kEq24Rendered0 = "1";
inline constexpr const char* kEq24Rendered1 = "x + 1/2*i*hbar*s";
inline constexpr const char* kEq24Rendered2 =
    "x^2 - 1/4*hbar^2 + 2*i*hbar*s*x - 1/2*hbar^2*s^2";
inline constexpr const char* kEq24Rendered3 =
    "x^3 - 5/4*hbar^2*x + 9/2*i*hbar*s*x^2 - 9/8*i*hbar^3*s - 9/2*hbar^2*s^2*x - "
    "3/4*i*hbar^3*s^3";
inline constexpr const char* kEq24Rendered4 =
    "x^4 - 7/2*hbar^2*x^2 + 9/16*hbar^4 + 8*i*hbar*s*x^3 - 10*i*hbar^3*s*x - "
    "18*hbar^2*s^2*x^2 + 9/2*hbar^4*s^2 - 12*i*hbar^3*s^3*x + 3/2*hbar^4*s^4";

/// JSON table of P_0..P_n coefficients. Keys are "a,b,c" for the monomial
/// s^a x^b hbar^c; values are canonical scalar strings. Golden-comparable.
inline nlohmann::ordered_json cartan_table_json(int n_max) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int n = 0; n <= n_max; ++n) {
    const MultiPoly p = cartan_explicit(n);
    nlohmann::ordered_json coeffs;
    for (const auto& [mono, c] : p.terms()) {
      std::string key = std::to_string(mono[Sym::s]) + "," + std::to_string(mono[Sym::x]) +
                        "," + std::to_string(mono[Sym::hbar]);
      coeffs[key] = c.render();
    }
    nlohmann::ordered_json row;
    row["n"] = n;
    row["coefficients"] = std::move(coeffs);
    row["rendered"] = p.render();
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string cartan_table_text(int n_max) {
  std::ostringstream os;
  for (int n = 0; n <= n_max; ++n)
    os << "P_" << n << "(s,x) = " << cartan_explicit(n).render() << "\n";
  return os.str();
}

}  // namespace ordpoly
