#pragma once

#include <vector>

#include "ordpoly/diffop.hpp"
#include "ordpoly/ordered.hpp"

namespace ordpoly {

/// The two-variable definite-parity polynomials P_n(s, x), monic of degree n
/// in x, with coefficients polynomial in s and hbar (c = i*hbar/2 is always
/// kept expanded).
enum class ExplicitForm { plus, minus };

namespace detail {
inline MultiPoly linear_chain(int count, int sign) {
  // prod_{j=1..count} [x + sign * (2j-1) c]
  const MultiPoly x = MultiPoly::variable(Sym::x);
  const MultiPoly c = half_i_hbar();
  MultiPoly acc(1);
  for (int j = 1; j <= count; ++j)
    acc *= x + c * GaussianRational(sign * (2 * j - 1));
  return acc;
}
}  // namespace detail

/// Explicit form:
///   plus : P_n = sum_k C(n,k)^2 k! [-c(1-s)]^k prod_{j<=n-k} [x + c(2j-1)]
///   minus: P_n = sum_k C(n,k)^2 k! [ c(1+s)]^k prod_{j<=n-k} [x - c(2j-1)]
inline MultiPoly cartan_explicit(int n, ExplicitForm form = ExplicitForm::plus) {
  if (n < 0) throw std::invalid_argument("cartan_explicit: negative n");
  const MultiPoly s = MultiPoly::variable(Sym::s);
  const MultiPoly c = half_i_hbar();
  const int sign = form == ExplicitForm::plus ? 1 : -1;
  const MultiPoly base = form == ExplicitForm::plus ? -(c * (MultiPoly(1) - s))
                                                    : c * (MultiPoly(1) + s);
  MultiPoly acc, power(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) power = power * base;
    GaussianRational coeff = binomial(n, k) * binomial(n, k) * factorial(k);
    acc += power * coeff * detail::linear_chain(n - k, sign);
  }
  return acc;
}

/// P_0 .. P_{n_max} through the three-term recursion
///   P_{n+1} = [x + c(2n+1)s] P_n + c^2 (1-s^2) n^2 P_{n-1}.
inline std::vector<MultiPoly> cartan_by_recursion(int n_max) {
  if (n_max < 0) throw std::invalid_argument("cartan_by_recursion: negative n_max");
  const MultiPoly s = MultiPoly::variable(Sym::s);
  const MultiPoly x = MultiPoly::variable(Sym::x);
  const MultiPoly c = half_i_hbar();
  const MultiPoly c2_one_minus_s2 = c * c * (MultiPoly(1) - s * s);
  std::vector<MultiPoly> out;
  out.push_back(MultiPoly(1));
  if (n_max == 0) return out;
  out.push_back(x + c * s);
  for (int n = 1; n < n_max; ++n) {
    MultiPoly next = (x + c * s * GaussianRational(2 * n + 1)) * out[n] +
                     c2_one_minus_s2 * GaussianRational(Rational(n) * n) * out[n - 1];
    out.push_back(std::move(next));
  }
  return out;
}

/// Operator route: evaluates the basis change onto s' = +1 and substitutes the
/// product form of t^(1)_{j,j}, then replaces x_hat by the scalar x. The
/// resulting polynomial is returned; use cartan_operator_route_verified for
/// the operator-level identity t^(s)_{n,n} = P_n(s, x_hat).
inline MultiPoly cartan_from_operator(int n, const MultiPoly& s) {
  if (n < 0) throw std::invalid_argument("cartan_from_operator: negative n");
  const MultiPoly c = half_i_hbar();
  MultiPoly acc, power(1);
  const MultiPoly step = c * (s - MultiPoly(1));  // 2^-k [i hbar (s-1)]^k = [c(s-1)]^k
  for (int k = 0; k <= n; ++k) {
    if (k > 0) power = power * step;
    GaussianRational coeff = binomial(n, k) * binomial(n, k) * factorial(k);
    acc += power * coeff * detail::linear_chain(n - k, +1);
  }
  return acc;
}

/// Checks, at the operator level, that the three constructions of the Cartan
/// generator agree as normal-ordered OpPoly:
///  (a) the defining sum of t^(s)_{n,n},
///  (b) the basis change to s' = +1 with the product form substituted,
///  (c) P_n(s, x_hat) with ordinary operator powers of x_hat.
inline bool cartan_operator_route_verified(int n, const MultiPoly& s) {
  const OpPoly via_definition = ordered_product({n, n, s});

  TSum onto_standard = reorder({n, n, s}, MultiPoly(1));
  OpPoly via_product_form;
  for (const auto& [nm, coeff] : onto_standard.terms())
    via_product_form += cartan_product_form(nm.first, +1) * coeff;

  const MultiPoly pn = cartan_explicit(n).substitute(Sym::s, s);
  OpPoly via_polynomial;
  for (int k = 0; k <= pn.degree(Sym::x); ++k) {
    MultiPoly ck = pn.coefficient_of(Sym::x, k);
    if (!ck.is_zero()) via_polynomial += op_pow(x_hat(), k) * ck;
  }

  return via_definition == via_product_form && via_definition == via_polynomial;
}

/// Parity: P_n(-s, -x) - (-1)^n P_n(s, x).
inline MultiPoly parity_residual(int n) {
  MultiPoly p = cartan_explicit(n);
  MultiPoly flipped = p.substitute(Sym::s, -MultiPoly::variable(Sym::s))
                          .substitute(Sym::x, -MultiPoly::variable(Sym::x));
  return (n % 2 == 0) ? flipped - p : flipped + p;
}

/// d^k/ds^k P_n - c^k [n!/(n-k)!]^2 P_{n-k}; the k > n case is the plain
/// zero polynomial on both sides.
inline MultiPoly d_ds_residual(int n, int k) {
  MultiPoly lhs = cartan_explicit(n);
  for (int j = 0; j < k; ++j) lhs = lhs.derivative(Sym::s);
  if (k > n) return lhs;
  GaussianRational ratio = factorial(n) / factorial(n - k);
  MultiPoly rhs = half_i_hbar().pow(k) * (ratio * ratio) * cartan_explicit(n - k);
  return lhs - rhs;
}

/// Difference relation with shifts x -> x +- 2c:
///   (x ± c) P_n(s, x ± 2c) = [x ± c(2n+1)] P_n + 2 c^2 n^2 (1 ∓ s) P_{n-1}.
inline MultiPoly eq11_residual(int n, int sign) {
  const MultiPoly x = MultiPoly::variable(Sym::x);
  const MultiPoly s = MultiPoly::variable(Sym::s);
  const MultiPoly c = half_i_hbar();
  const MultiPoly cs = c * GaussianRational(sign);
  const MultiPoly pn = cartan_explicit(n);
  const MultiPoly pm = n > 0 ? cartan_explicit(n - 1) : MultiPoly();
  MultiPoly lhs = (x + cs) * pn.shift(Sym::x, cs * GaussianRational(2));
  MultiPoly rhs = (x + cs * GaussianRational(2 * n + 1)) * pn +
                  c * c * GaussianRational(Rational(2) * n * n) *
                      (MultiPoly(1) - s * GaussianRational(sign)) * pm;
  return lhs - rhs;
}

/// The s = ±1 specialization (x ± c) P_n(±1, x ± 2c) = [x ± c(2n+1)] P_n(±1, x).
inline MultiPoly eq12_residual(int n, int sign) {
  const MultiPoly x = MultiPoly::variable(Sym::x);
  const MultiPoly c = half_i_hbar();
  const MultiPoly cs = c * GaussianRational(sign);
  const MultiPoly pn = cartan_explicit(n).substitute(Sym::s, MultiPoly(sign));
  MultiPoly lhs = (x + cs) * pn.shift(Sym::x, cs * GaussianRational(2));
  MultiPoly rhs = (x + cs * GaussianRational(2 * n + 1)) * pn;
  return lhs - rhs;
}

/// Difference of the two shift relations:
///   (x+c)P_n(s,x+2c) - (x-c)P_n(s,x-2c) = c(4n+2)P_n - 4 s c^2 n^2 P_{n-1}.
inline MultiPoly eq15_residual(int n) {
  const MultiPoly x = MultiPoly::variable(Sym::x);
  const MultiPoly s = MultiPoly::variable(Sym::s);
  const MultiPoly c = half_i_hbar();
  const MultiPoly two_c = c * GaussianRational(2);
  const MultiPoly pn = cartan_explicit(n);
  const MultiPoly pm = n > 0 ? cartan_explicit(n - 1) : MultiPoly();
  MultiPoly lhs =
      (x + c) * pn.shift(Sym::x, two_c) - (x - c) * pn.shift(Sym::x, -two_c);
  MultiPoly rhs = c * GaussianRational(4 * n + 2) * pn -
                  s * c * c * GaussianRational(Rational(4) * n * n) * pm;
  return lhs - rhs;
}

/// Sum of the two shift relations:
///   (x+c)P_n(s,x+2c) + (x-c)P_n(s,x-2c) = 2x P_n + 4 c^2 n^2 P_{n-1}.
inline MultiPoly eq16_residual(int n) {
  const MultiPoly x = MultiPoly::variable(Sym::x);
  const MultiPoly c = half_i_hbar();
  const MultiPoly two_c = c * GaussianRational(2);
  const MultiPoly pn = cartan_explicit(n);
  const MultiPoly pm = n > 0 ? cartan_explicit(n - 1) : MultiPoly();
  MultiPoly lhs =
      (x + c) * pn.shift(Sym::x, two_c) + (x - c) * pn.shift(Sym::x, -two_c);
  MultiPoly rhs = GaussianRational(2) * MultiPoly::variable(Sym::x) * pn +
                  c * c * GaussianRational(Rational(4) * n * n) * pm;
  return lhs - rhs;
}

/// (c^2 D_h^2 + x D_h - n) P_n = -s c n^2 P_{n-1} with h = 2c.
inline MultiPoly eq17_residual(int n) {
  const MultiPoly c = half_i_hbar();
  const MultiPoly pn = cartan_explicit(n);
  const MultiPoly pm = n > 0 ? cartan_explicit(n - 1) : MultiPoly();
  const DiffOp dh = central_dh();
  const DiffOp dh2 = central_dh2();
  MultiPoly lhs = c * c * dh2.apply(pn) + MultiPoly::variable(Sym::x) * dh.apply(pn) -
                  GaussianRational(n) * pn;
  MultiPoly rhs = -(MultiPoly::variable(Sym::s) * c * GaussianRational(Rational(n) * n) * pm);
  return lhs - rhs;
}

/// (x D_h^2 + D_h) P_n = n^2 P_{n-1} with h = 2c.
inline MultiPoly eq18_residual(int n) {
  const MultiPoly pn = cartan_explicit(n);
  const MultiPoly pm = n > 0 ? cartan_explicit(n - 1) : MultiPoly();
  const DiffOp dh = central_dh();
  const DiffOp dh2 = central_dh2();
  MultiPoly lhs = MultiPoly::variable(Sym::x) * dh2.apply(pn) + dh.apply(pn);
  return lhs - GaussianRational(Rational(n) * n) * pm;
}

/// Hypergeometric equation in s, cleared of the 1/c:
///   c(1-s^2) P_n'' + [x + c(2n-1)s] P_n' - c n^2 P_n = 0.
inline MultiPoly ode_residual(int n) {
  const MultiPoly s = MultiPoly::variable(Sym::s);
  const MultiPoly x = MultiPoly::variable(Sym::x);
  const MultiPoly c = half_i_hbar();
  const MultiPoly pn = cartan_explicit(n);
  const MultiPoly d1 = pn.derivative(Sym::s);
  const MultiPoly d2 = d1.derivative(Sym::s);
  return c * (MultiPoly(1) - s * s) * d2 + (x + c * s * GaussianRational(2 * n - 1)) * d1 -
         c * GaussianRational(Rational(n) * n) * pn;
}

/// Taylor consistency: the basis-change expansion of P_n(s,x) around a second
/// ordering parameter (held as the symbol y) coincides with the Taylor series
/// assembled from the s-derivative relation.
inline MultiPoly taylor_residual(int n) {
  const MultiPoly s = MultiPoly::variable(Sym::s);
  const MultiPoly sp = MultiPoly::variable(Sym::y);
  const MultiPoly c = half_i_hbar();
  const MultiPoly pn = cartan_explicit(n);
  MultiPoly expansion, power(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) power = power * (c * (s - sp));
    GaussianRational coeff = binomial(n, k) * binomial(n, k) * factorial(k);
    expansion += power * coeff * cartan_explicit(n - k).substitute(Sym::s, sp);
  }
  return expansion - pn;
}

/// Substitution x = 2c(u + 1/2) onto the unit lattice.
inline MultiPoly to_u_form(const MultiPoly& p) {
  const MultiPoly c = half_i_hbar();
  return p.substitute(Sym::x,
                      c * GaussianRational(2) * MultiPoly::variable(Sym::u) + c);
}

/// Substitution s = i y, x = (hbar/2) v (i.e. x/c = -i v).
inline MultiPoly to_yv_form(const MultiPoly& p) {
  const MultiPoly iy = GaussianRational::i() * MultiPoly::variable(Sym::y);
  const MultiPoly xv = MultiPoly::variable(Sym::hbar) * GaussianRational(Rational(1, 2)) *
                       MultiPoly::variable(Sym::v);
  return p.substitute(Sym::s, iy).substitute(Sym::x, xv);
}

/// Every monomial of P_n satisfies deg_x + deg_hbar = n; this is the
/// homogeneity that lets a single hbar binding stand for all of them.
inline bool hbar_homogeneous(const MultiPoly& p, int n) {
  for (const auto& [m, coeff] : p.terms())
    if (m[Sym::x] + m[Sym::hbar] != n) return false;
  return true;
}

}  // namespace ordpoly
