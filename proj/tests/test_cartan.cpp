#include <catch2/catch_amalgamated.hpp>

#include "ordpoly/cartan.hpp"

using namespace ordpoly;

namespace {

const MultiPoly kX = MultiPoly::variable(Sym::x);
const MultiPoly kS = MultiPoly::variable(Sym::s);
const MultiPoly kC = half_i_hbar();

GaussianRational q(long long num, long long den = 1) {
  return GaussianRational(Rational(num, den));
}

// The first five polynomials written out with c = i hbar / 2.
MultiPoly table_pn(int n) {
  switch (n) {
    case 0:
      return MultiPoly(1);
    case 1:
      return kX + kC * kS;
    case 2:
      return kX.pow(2) + q(4) * kC * kS * kX + kC.pow(2) * (q(2) * kS.pow(2) + MultiPoly(1));
    case 3:
      return kX.pow(3) + q(9) * kC * kS * kX.pow(2) +
             kC.pow(2) * (q(18) * kS.pow(2) + MultiPoly(5)) * kX +
             q(3) * kC.pow(3) * kS * (q(2) * kS.pow(2) + MultiPoly(3));
    case 4:
      return kX.pow(4) + q(16) * kC * kS * kX.pow(3) +
             q(2) * kC.pow(2) * (q(36) * kS.pow(2) + MultiPoly(7)) * kX.pow(2) +
             q(16) * kC.pow(3) * kS * (q(6) * kS.pow(2) + MultiPoly(5)) * kX +
             q(3) * kC.pow(4) *
                 (q(8) * kS.pow(4) + q(24) * kS.pow(2) + MultiPoly(3));
    default:
      FAIL("table only covers n <= 4");
      return MultiPoly();
  }
}

}  // namespace

TEST_CASE("explicit forms reproduce the table of the first five polynomials") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(cartan_explicit(n, ExplicitForm::plus) == table_pn(n));
    CHECK(cartan_explicit(n, ExplicitForm::minus) == table_pn(n));
  }
}

TEST_CASE("coefficient spot checks from the table") {
  // P_2 constant-in-x coefficient: c^2 (2 s^2 + 1)
  MultiPoly c0 = cartan_explicit(2).coefficient_of(Sym::x, 0);
  CHECK(c0 == kC.pow(2) * (q(2) * kS.pow(2) + MultiPoly(1)));
  // P_4 constant-in-x coefficient: 3 c^4 (8 s^4 + 24 s^2 + 3)
  MultiPoly c4 = cartan_explicit(4).coefficient_of(Sym::x, 0);
  CHECK(c4 == q(3) * kC.pow(4) * (q(8) * kS.pow(4) + q(24) * kS.pow(2) + MultiPoly(3)));
}

TEST_CASE("route equivalence: plus, minus, recursion, operator route, n <= 12") {
  auto rec = cartan_by_recursion(12);
  for (int n = 0; n <= 12; ++n) {
    MultiPoly plus = cartan_explicit(n, ExplicitForm::plus);
    CHECK(plus == cartan_explicit(n, ExplicitForm::minus));
    CHECK(plus == rec[n]);
    CHECK(plus == cartan_from_operator(n, kS));
  }
}

TEST_CASE("operator-level identity t(s)_nn = P_n(s, x_hat), n <= 6") {
  for (int n = 0; n <= 6; ++n) CHECK(cartan_operator_route_verified(n, kS));
}

TEST_CASE("monic of degree n in x, with hbar-homogeneous terms") {
  for (int n = 0; n <= 12; ++n) {
    MultiPoly p = cartan_explicit(n);
    CHECK(p.degree(Sym::x) == n);
    Monomial lead;
    lead[Sym::x] = n;
    CHECK(p.coefficient(lead) == GaussianRational(1));
    CHECK(hbar_homogeneous(p, n));
    // n-th x-derivative is n! (monicity in normalized form)
    MultiPoly d = p;
    for (int k = 0; k < n; ++k) d = d.derivative(Sym::x);
    CHECK(d == MultiPoly(factorial(n)));
  }
}

TEST_CASE("u-form normalization: n-th forward difference equals (2c)^n n!") {
  for (int n = 0; n <= 8; ++n) {
    MultiPoly pu = to_u_form(cartan_explicit(n));
    for (int k = 0; k < n; ++k)
      pu = pu.shift(Sym::u, MultiPoly(1)) - pu;
    CHECK(pu == (kC * GaussianRational(2)).pow(n) * factorial(n));
  }
}

TEST_CASE("parity P_n(-s,-x) = (-1)^n P_n(s,x), n <= 12") {
  for (int n = 0; n <= 12; ++n) CHECK(parity_residual(n).is_zero());
}

TEST_CASE("reality for pure imaginary s") {
  // s = i y with rational hbar: coefficients in (y, x) are real
  const MultiPoly iy = GaussianRational::i() * MultiPoly::variable(Sym::y);
  for (int n = 0; n <= 8; ++n) {
    MultiPoly p = cartan_explicit(n).substitute(Sym::s, iy).substitute(Sym::hbar, MultiPoly(2));
    for (const auto& [mono, coeff] : p.terms()) CHECK(coeff.is_real());
  }
}

TEST_CASE("derivative relation in s") {
  // d/ds P_1 = c P_0
  CHECK(d_ds_residual(1, 1).is_zero());
  // d^2/ds^2 P_2 = 4 c^2 P_0
  MultiPoly d2 = cartan_explicit(2).derivative(Sym::s).derivative(Sym::s);
  CHECK(d2 == q(4) * kC.pow(2));
  // d/ds P_4 = 16 c P_3
  MultiPoly d1 = cartan_explicit(4).derivative(Sym::s);
  CHECK(d1 == q(16) * kC * cartan_explicit(3));
  // all orders for n <= 10, including the k > n zero convention
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n + 2; ++k) CHECK(d_ds_residual(n, k).is_zero());
}

TEST_CASE("shift relations in x, n <= 10") {
  // the s = +1, n = 1 case reduces to (x+c)(x+3c) on both sides
  MultiPoly lhs = (kX + kC) * (kX + q(3) * kC);
  MultiPoly p1_std = cartan_explicit(1).substitute(Sym::s, MultiPoly(1));
  CHECK((kX + kC) * p1_std.shift(Sym::x, q(2) * kC) == lhs);

  for (int n = 0; n <= 10; ++n) {
    CHECK(eq11_residual(n, +1).is_zero());
    CHECK(eq11_residual(n, -1).is_zero());
    CHECK(eq12_residual(n, +1).is_zero());
    CHECK(eq12_residual(n, -1).is_zero());
    CHECK(eq15_residual(n).is_zero());
    CHECK(eq16_residual(n).is_zero());
  }
}

TEST_CASE("central-difference relations, n <= 10") {
  // n = 1: (x Dh^2 + Dh) P_1 = 1 = 1^2 P_0
  const DiffOp dh = central_dh();
  const DiffOp dh2 = central_dh2();
  MultiPoly p1 = cartan_explicit(1);
  CHECK(dh.apply(p1) == MultiPoly(1));
  CHECK(dh2.apply(p1).is_zero());

  for (int n = 0; n <= 10; ++n) {
    CHECK(eq17_residual(n).is_zero());
    CHECK(eq18_residual(n).is_zero());
  }
}

TEST_CASE("hypergeometric equation in s, n <= 10") {
  for (int n = 0; n <= 10; ++n) CHECK(ode_residual(n).is_zero());
}

TEST_CASE("basis-change expansion is the Taylor series, n <= 8") {
  for (int n = 0; n <= 8; ++n) CHECK(taylor_residual(n).is_zero());
}
