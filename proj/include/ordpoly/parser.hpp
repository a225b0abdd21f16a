#pragma once

#include <cctype>
#include <string>

#include "ordpoly/ordered.hpp"

namespace ordpoly {

/// Error with the byte offset into the source text.
struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " +
                           message),
        pos(position) {}
  std::size_t pos;
};

/// Recursive-descent parser for the operator grammar:
///   expr    := term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := '-' factor | primary ('^' INT)?
///   primary := INT | 'i' | 'hbar' | 's' | 'q' | 'p' | 'I' | '(' expr ')'
///              | 't' '[' INT ',' INT ';' expr ']'
/// Division requires a constant scalar divisor; the s-expression inside
/// t[...] must be scalar (no operator letters).
class OperatorParser {
 public:
  explicit OperatorParser(std::string text) : text_(std::move(text)) {}

  OpPoly parse() {
    OpPoly e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  OpPoly parse_expr() {
    OpPoly acc = parse_term();
    for (;;) {
      if (eat('+')) acc += parse_term();
      else if (eat('-')) acc -= parse_term();
      else return acc;
    }
  }

  OpPoly parse_term() {
    OpPoly acc = parse_factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * parse_factor();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        OpPoly divisor = parse_factor();
        acc = divide(acc, divisor, at);
      } else {
        return acc;
      }
    }
  }

  OpPoly parse_factor() {
    if (eat('-')) return -parse_factor();
    OpPoly base = parse_primary();
    if (eat('^')) {
      const std::size_t at = pos_;
      long n = parse_integer();
      if (n < 0) throw ParseError(at, "negative exponent");
      return op_pow(base, static_cast<unsigned>(n));
    }
    return base;
  }

  long parse_integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(start, "expected an integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  std::string parse_ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  OpPoly parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)))
      return OpPoly(MultiPoly(GaussianRational(Rational(parse_integer()))));
    if (c == '(') {
      ++pos_;
      OpPoly inner = parse_expr();
      if (!eat(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::string id = parse_ident();
      if (id == "q") return q_hat();
      if (id == "p") return p_hat();
      if (id == "I") return op_identity();
      if (id == "i") return OpPoly(MultiPoly(GaussianRational::i()));
      if (id == "hbar") return OpPoly(MultiPoly::variable(Sym::hbar));
      if (id == "s") return OpPoly(MultiPoly::variable(Sym::s));
      if (id == "t") {
        if (!eat('[')) throw ParseError(pos_, "expected '[' after t");
        long n = parse_integer();
        if (!eat(',')) throw ParseError(pos_, "expected ',' in t[n,m;s]");
        long m = parse_integer();
        if (!eat(';')) throw ParseError(pos_, "expected ';' in t[n,m;s]");
        const std::size_t s_at = pos_;
        OpPoly s_expr = parse_expr();
        if (!eat(']')) throw ParseError(pos_, "expected ']'");
        if (n < 0 || m < 0) throw ParseError(at, "t indices must be nonnegative");
        MultiPoly s_poly = as_scalar(s_expr, s_at, "ordering parameter");
        return ordered_product({static_cast<int>(n), static_cast<int>(m), s_poly});
      }
      throw ParseError(at, "unknown identifier '" + id + "'");
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  static MultiPoly as_scalar(const OpPoly& e, std::size_t at, const char* what) {
    for (const auto& [w, coeff] : e.terms())
      if (w.total() != 0)
        throw ParseError(at, std::string(what) + " must be scalar (no q or p factors)");
    auto it = e.terms().find(Word{});
    return it == e.terms().end() ? MultiPoly() : it->second;
  }

  OpPoly divide(const OpPoly& lhs, const OpPoly& rhs, std::size_t at) {
    MultiPoly d = as_scalar(rhs, at, "divisor");
    if (!d.is_constant()) throw ParseError(at, "divisor must be a constant scalar");
    GaussianRational value = d.constant_value();
    if (value.is_zero()) throw ParseError(at, "division by zero");
    return lhs * MultiPoly(GaussianRational(1) / value);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

inline OpPoly parse_operator_expression(const std::string& text) {
  return OperatorParser(text).parse();
}

namespace detail {

inline std::string render_word(const Word& w) {
  std::string out;
  auto emit = [&out](const char* name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  emit("q", w.q);
  emit("p", w.p);
  return out;
}

inline std::string render_rational_factor(const Rational& mag) {
  if (denominator(mag) == 1) return render_rational(mag);
  return "(" + render_rational(mag) + ")";
}

// Renders one coefficient as (negative?, factor string); single pure-real or
// pure-imaginary monomials get the compact factor form, everything else is
// parenthesized whole.
inline std::pair<bool, std::string> render_coefficient(const MultiPoly& c, bool with_word) {
  if (c.terms().size() == 1) {
    const auto& [mono, scalar] = *c.terms().begin();
    std::string vars;
    for (Sym s : all_symbols) {
      if (mono[s] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += sym_name(s);
      if (mono[s] > 1) vars += "^" + std::to_string(mono[s]);
    }
    bool pure_real = scalar.im() == 0;
    bool pure_imag = scalar.re() == 0;
    if (pure_real || pure_imag) {
      const Rational& part = pure_real ? scalar.re() : scalar.im();
      bool neg = part < 0;
      Rational mag = abs(part);
      // fractions are parenthesized only when more factors follow
      std::string factor;
      if (pure_imag) factor = (mag == 1) ? "i" : render_rational_factor(mag) + "*i";
      else if (mag != 1)
        factor = (!vars.empty() || with_word) ? render_rational_factor(mag)
                                              : render_rational(mag);
      else if (vars.empty() && !with_word)
        factor = "1";
      std::string body = factor;
      if (!vars.empty()) body += (body.empty() ? "" : "*") + vars;
      return {neg, body};
    }
  }
  return {false, "(" + c.render() + ")"};
}

}  // namespace detail

/// Canonical rendering mirroring the parser grammar; parse(render(x)) == x.
inline std::string render_operator(const OpPoly& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, coeff] : e.terms()) {
    std::string word = detail::render_word(w);
    auto [neg, factor] = detail::render_coefficient(coeff, !word.empty());
    std::string body;
    if (factor.empty()) body = word.empty() ? "1" : word;
    else if (word.empty()) body = factor;
    else body = factor + "*" + word;
    if (first) {
      out += neg ? "-" : "";
      out += body;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace ordpoly
