#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordpoly/scalar.hpp"
#include "ordpoly/symbols.hpp"

namespace ordpoly {

struct Monomial {
  std::array<int, kSymCount> e{};

  int total() const { return std::accumulate(e.begin(), e.end(), 0); }
  int operator[](Sym s) const { return e[sym_index(s)]; }
  int& operator[](Sym s) { return e[sym_index(s)]; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// Canonical term order: graded lex, ascending in total degree; ties broken
/// by exponent comparison with variable priority x, u, y, v, s, hbar
/// (larger exponent of a higher-priority variable sorts first).
struct MonomialOrder {
  static constexpr std::array<Sym, kSymCount> priority{Sym::x, Sym::u, Sym::y,
                                                       Sym::v, Sym::s, Sym::hbar};
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    for (Sym s : priority)
      if (a[s] != b[s]) return a[s] > b[s];
    return false;
  }
};

struct UnboundVariable : std::runtime_error {
  explicit UnboundVariable(Sym s)
      : std::runtime_error("unbound variable: " + std::string(sym_name(s))), sym(s) {}
  Sym sym;
};

namespace detail {
inline GaussianRational scalar_cast(const GaussianRational& c, const GaussianRational*) {
  return c;
}
inline Complexd scalar_cast(const GaussianRational& c, const Complexd*) { return c.to_complex(); }
}  // namespace detail

/// Multivariate polynomial over GaussianRational in the fixed six-symbol
/// universe. Terms are kept in canonical form: no zero coefficients, ordered
/// by MonomialOrder. All operations are pure and return fresh values.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, GaussianRational, MonomialOrder>;
  template <typename T>
  using Bindings = std::map<Sym, T>;

  MultiPoly() = default;
  MultiPoly(int c) { add_term(Monomial{}, GaussianRational(c)); }       // NOLINT
  MultiPoly(GaussianRational c) { add_term(Monomial{}, c); }            // NOLINT

  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly constant(const GaussianRational& c) { return MultiPoly(c); }
  static MultiPoly variable(Sym s) { return var_pow(s, 1); }
  static MultiPoly var_pow(Sym s, int k) {
    Monomial m;
    m[s] = k;
    return term(m, GaussianRational(1));
  }
  static MultiPoly term(const Monomial& m, const GaussianRational& c) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
  }

  /// Constant-term value (zero polynomial gives 0).
  GaussianRational constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? GaussianRational(0) : it->second;
  }

  GaussianRational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational(0) : it->second;
  }

  int degree(Sym s) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[s]);
    return d;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
  }
  bool uses(Sym s) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [s](const auto& t) { return t.first[s] > 0; });
  }

  MultiPoly operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (int i = 0; i < kSymCount; ++i) m.e[i] = ma.e[i] + mb.e[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator*(const GaussianRational& c, const MultiPoly& p) {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& p, const GaussianRational& c) { return c * p; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned k) const {
    MultiPoly acc(1), base(*this);
    while (k != 0) {
      if (k & 1u) acc = acc * base;
      base = base * base;
      k >>= 1u;
    }
    return acc;
  }

  MultiPoly derivative(Sym s) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
      if (m[s] == 0) continue;
      Monomial d = m;
      d[s] -= 1;
      r.add_term(d, c * GaussianRational(m[s]));
    }
    return r;
  }

  MultiPoly substitute(Sym s, const MultiPoly& val) const {
    std::vector<MultiPoly> powers{MultiPoly(1)};
    const int dmax = degree(s);
    for (int k = 1; k <= dmax; ++k) powers.push_back(powers.back() * val);
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      const int k = rest[s];
      rest[s] = 0;
      r += term(rest, c) * powers[k];
    }
    return r;
  }

  /// Lattice shift var -> var + offset; the offset must not involve var.
  MultiPoly shift(Sym s, const MultiPoly& offset) const {
    if (offset.uses(s))
      throw std::invalid_argument("shift: offset may not involve the shifted variable");
    return substitute(s, variable(s) + offset);
  }

  /// Substitutes var := num/den, multiplying through by den^clear_degree to
  /// stay polynomial. Requires degree(var) <= clear_degree.
  MultiPoly substitute_rational(Sym s, const MultiPoly& num, const MultiPoly& den,
                                int clear_degree) const {
    if (degree(s) > clear_degree)
      throw std::invalid_argument("substitute_rational: clearing degree too small");
    std::vector<MultiPoly> num_pow{MultiPoly(1)}, den_pow{MultiPoly(1)};
    for (int k = 1; k <= clear_degree; ++k) {
      num_pow.push_back(num_pow.back() * num);
      den_pow.push_back(den_pow.back() * den);
    }
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      const int k = rest[s];
      rest[s] = 0;
      r += term(rest, c) * num_pow[k] * den_pow[clear_degree - k];
    }
    return r;
  }

  /// Exact division by scale*var^power. Throws if any term lacks the factor.
  MultiPoly divide_exact(const GaussianRational& scale, Sym s, int power) const {
    if (scale.is_zero()) throw std::domain_error("divide_exact by zero");
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
      if (m[s] < power)
        throw std::domain_error("divide_exact: term not divisible by " +
                                std::string(sym_name(s)));
      Monomial d = m;
      d[s] -= power;
      r.add_term(d, c / scale);
    }
    return r;
  }

  MultiPoly conjugate_coefficients() const {
    // Formal variables are treated as real symbols.
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
    return r;
  }

  /// Coefficient of var^k, as a polynomial in the remaining variables.
  MultiPoly coefficient_of(Sym s, int k) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
      if (m[s] != k) continue;
      Monomial rest = m;
      rest[s] = 0;
      r.add_term(rest, c);
    }
    return r;
  }

  GaussianRational eval_exact(const Bindings<GaussianRational>& bind) const {
    return eval_impl<GaussianRational>(*this, bind, 0);
  }

  /// Horner-style evaluation at complex double points.
  Complexd eval_complex(const Bindings<Complexd>& bind) const {
    return eval_impl<Complexd>(*this, bind, 0);
  }

  /// Canonical text rendering; this is the golden-file format.
  std::string render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      auto [sign_negative, body] = render_term(m, c);
      if (first) {
        if (sign_negative) out += "-";
        out += body;
        first = false;
      } else {
        out += sign_negative ? " - " : " + ";
        out += body;
      }
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  template <typename T>
  static T eval_impl(const MultiPoly& p, const Bindings<T>& bind, int var_idx) {
    if (p.is_zero()) return T{};
    if (var_idx == kSymCount) {
      // Only the constant term can remain here.
      return detail::scalar_cast(p.constant_value(), static_cast<const T*>(nullptr));
    }
    const Sym s = static_cast<Sym>(var_idx);
    const int dmax = p.degree(s);
    if (dmax == 0) return eval_impl<T>(p, bind, var_idx + 1);
    auto found = bind.find(s);
    if (found == bind.end()) throw UnboundVariable(s);
    const T& xval = found->second;
    T acc{};
    for (int k = dmax; k >= 0; --k) {
      acc = acc * xval;
      MultiPoly ck = p.coefficient_of(s, k);
      if (!ck.is_zero()) acc = acc + eval_impl<T>(ck, bind, var_idx + 1);
    }
    return acc;
  }

  static std::pair<bool, std::string> render_term(const Monomial& m, const GaussianRational& c) {
    std::string vars;
    for (Sym s : all_symbols) {
      if (m[s] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += sym_name(s);
      if (m[s] > 1) vars += "^" + std::to_string(m[s]);
    }
    bool neg = false;
    std::string factor;
    if (c.im() == 0) {
      neg = c.re() < 0;
      Rational mag = abs(c.re());
      if (mag != 1 || vars.empty()) factor = render_rational(mag);
    } else if (c.re() == 0) {
      neg = c.im() < 0;
      Rational mag = abs(c.im());
      factor = (mag == 1) ? "i" : render_rational(mag) + "*i";
    } else {
      factor = "(" + c.render() + ")";
    }
    std::string body;
    if (factor.empty()) body = vars;
    else if (vars.empty()) body = factor;
    else body = factor + "*" + vars;
    return {neg, body};
  }

  TermMap terms_;
};

inline MultiPoly operator*(int c, const MultiPoly& p) { return GaussianRational(c) * p; }

/// i*hbar/2 as a polynomial: the constant written "c" throughout.
inline MultiPoly half_i_hbar() {
  Monomial m;
  m[Sym::hbar] = 1;
  return MultiPoly::term(m, GaussianRational(Rational(0), Rational(1, 2)));
}

}  // namespace ordpoly
