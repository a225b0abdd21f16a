#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace ordpoly {

/// The fixed variable universe. Every polynomial in the library lives in
/// (a subset of) these six formal symbols.
enum class Sym : int { hbar = 0, s = 1, x = 2, u = 3, y = 4, v = 5 };

inline constexpr int kSymCount = 6;

inline constexpr std::array<Sym, kSymCount> all_symbols{Sym::hbar, Sym::s, Sym::x,
                                                        Sym::u,    Sym::y, Sym::v};

inline constexpr std::string_view sym_name(Sym s) {
  switch (s) {
    case Sym::hbar: return "hbar";
    case Sym::s: return "s";
    case Sym::x: return "x";
    case Sym::u: return "u";
    case Sym::y: return "y";
    case Sym::v: return "v";
  }
  return "?";
}

inline std::optional<Sym> sym_from_name(std::string_view name) {
  for (Sym s : all_symbols)
    if (sym_name(s) == name) return s;
  return std::nullopt;
}

inline constexpr int sym_index(Sym s) { return static_cast<int>(s); }

}  // namespace ordpoly
