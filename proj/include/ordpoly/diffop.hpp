#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "ordpoly/multipoly.hpp"

namespace ordpoly {

/// Linear operator on polynomials, built from multiplication operators,
/// lattice shifts, and exact monomial division, combined by sum, composition
/// and scaling. Immutable; application is pure.
class DiffOp {
 public:
  static DiffOp identity() { return DiffOp(Mul{MultiPoly(1)}); }
  static DiffOp mul(MultiPoly g) { return DiffOp(Mul{std::move(g)}); }
  static DiffOp shift(Sym var, MultiPoly offset) { return DiffOp(Shift{var, std::move(offset)}); }
  /// Exact division of the whole polynomial by scale*var^power.
  static DiffOp div_monomial(GaussianRational scale, Sym var, int power) {
    return DiffOp(Div{std::move(scale), var, power});
  }

  MultiPoly apply(const MultiPoly& f) const {
    return std::visit([&](const auto& node) { return apply_node(node, f); }, node_);
  }

  friend DiffOp operator+(DiffOp a, DiffOp b) {
    Sum s;
    s.append(std::move(a));
    s.append(std::move(b));
    return DiffOp(std::move(s));
  }
  friend DiffOp operator-(DiffOp a, DiffOp b) { return std::move(a) + (-std::move(b)); }
  DiffOp operator-() const { return scaled(GaussianRational(-1)); }

  /// Composition: (a * b)(f) = a(b(f)).
  friend DiffOp operator*(DiffOp a, DiffOp b) {
    Chain c;
    c.append_after(std::move(b));
    c.append_after(std::move(a));
    return DiffOp(std::move(c));
  }

  DiffOp scaled(const GaussianRational& c) const {
    return mul(MultiPoly::constant(c)) * (*this);
  }
  DiffOp scaled(const MultiPoly& g) const { return mul(g) * (*this); }

  friend DiffOp operator*(const MultiPoly& g, DiffOp op) { return op.scaled(g); }
  friend DiffOp operator*(const GaussianRational& c, DiffOp op) { return op.scaled(c); }

 private:
  struct Mul {
    MultiPoly g;
  };
  struct Shift {
    Sym var;
    MultiPoly offset;
  };
  struct Div {
    GaussianRational scale;
    Sym var;
    int power;
  };
  struct Sum {
    std::vector<std::shared_ptr<const DiffOp>> ops;
    void append(DiffOp op) { ops.push_back(std::make_shared<const DiffOp>(std::move(op))); }
  };
  struct Chain {
    // Stored innermost-first; apply runs left to right through the vector.
    std::vector<std::shared_ptr<const DiffOp>> ops;
    void append_after(DiffOp op) { ops.push_back(std::make_shared<const DiffOp>(std::move(op))); }
  };

  using Node = std::variant<Mul, Shift, Div, Sum, Chain>;

  explicit DiffOp(Node n) : node_(std::move(n)) {}

  static MultiPoly apply_node(const Mul& n, const MultiPoly& f) { return n.g * f; }
  static MultiPoly apply_node(const Shift& n, const MultiPoly& f) {
    return f.shift(n.var, n.offset);
  }
  static MultiPoly apply_node(const Div& n, const MultiPoly& f) {
    return f.divide_exact(n.scale, n.var, n.power);
  }
  static MultiPoly apply_node(const Sum& n, const MultiPoly& f) {
    MultiPoly acc;
    for (const auto& op : n.ops) acc += op->apply(f);
    return acc;
  }
  static MultiPoly apply_node(const Chain& n, const MultiPoly& f) {
    MultiPoly acc = f;
    for (const auto& op : n.ops) acc = op->apply(acc);
    return acc;
  }

  Node node_;
};

inline DiffOp op_commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

/// x-lattice mesh h = 2c = i*hbar.
inline MultiPoly x_lattice_mesh() {
  return MultiPoly::variable(Sym::hbar) * GaussianRational::i();
}

/// Central first difference on the x lattice, D_h f = [f(x+h) - f(x-h)] / 2h
/// with h = 2c. The division by 2h = 2i*hbar is exact on polynomials.
inline DiffOp central_dh() {
  const MultiPoly h = x_lattice_mesh();
  return DiffOp::div_monomial(GaussianRational(Rational(0), Rational(2)), Sym::hbar, 1) *
         (DiffOp::shift(Sym::x, h) - DiffOp::shift(Sym::x, -h));
}

/// Central second difference, D_h^2 f = [f(x+h) - 2f(x) + f(x-h)] / h^2,
/// h^2 = -hbar^2.
inline DiffOp central_dh2() {
  const MultiPoly h = x_lattice_mesh();
  return DiffOp::div_monomial(GaussianRational(-1), Sym::hbar, 2) *
         (DiffOp::shift(Sym::x, h) - GaussianRational(2) * DiffOp::identity() +
          DiffOp::shift(Sym::x, -h));
}

/// Forward difference on the unit u lattice.
inline DiffOp forward_delta() {
  return DiffOp::shift(Sym::u, MultiPoly(1)) - DiffOp::identity();
}

/// Backward difference on the unit u lattice.
inline DiffOp backward_nabla() {
  return DiffOp::identity() - DiffOp::shift(Sym::u, MultiPoly(-1));
}

}  // namespace ordpoly
