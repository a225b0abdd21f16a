#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ordpoly/su11.hpp"

using namespace ordpoly;

namespace {
const MultiPoly kS = MultiPoly::variable(Sym::s);
const MultiPoly kX = MultiPoly::variable(Sym::x);
const MultiPoly kU = MultiPoly::variable(Sym::u);
}  // namespace

TEST_CASE("difference operator basics") {
  const DiffOp dh = central_dh();
  const DiffOp dh2 = central_dh2();
  // odd powers cancel: D_h x^2 = 4xh/(2h) = 2x exactly, no h remainder
  CHECK(dh.apply(kX * kX) == GaussianRational(2) * kX);
  CHECK(dh2.apply(kX).is_zero());
  // Delta Nabla u^2 = 2
  CHECK(forward_delta().apply(backward_nabla().apply(kU * kU)) == MultiPoly(2));
}

TEST_CASE("difference operators are linear") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> deg(0, 6), num(-5, 5);
  const DiffOp ops[] = {central_dh(), central_dh2(), forward_delta(), backward_nabla()};
  for (int t = 0; t < 50; ++t) {
    MultiPoly f = MultiPoly::var_pow(Sym::x, deg(rng)) * GaussianRational(num(rng)) +
                  MultiPoly::var_pow(Sym::u, deg(rng));
    MultiPoly g = MultiPoly::var_pow(Sym::x, deg(rng)) +
                  MultiPoly::var_pow(Sym::u, deg(rng)) * GaussianRational(num(rng));
    GaussianRational a(num(rng)), b(num(rng));
    for (const DiffOp& op : ops)
      CHECK(op.apply(a * f + b * g) == a * op.apply(f) + b * op.apply(g));
  }
}

TEST_CASE("J- coincides with the operator of the second difference relation") {
  const LadderTriple t = ladder_triple(kS);
  const DiffOp dh = central_dh();
  const DiffOp dh2 = central_dh2();
  for (int k = 0; k <= 8; ++k) {
    MultiPoly f = MultiPoly::var_pow(Sym::x, k);
    CHECK(t.j_minus.apply(f) == kX * dh2.apply(f) + dh.apply(f));
  }
}

TEST_CASE("ladder actions, n <= 10, symbolic s") {
  const LadderTriple t = ladder_triple(kS);
  for (int n = 0; n <= 10; ++n) CHECK(ladder_action_residuals(t, n).all_zero());
}

TEST_CASE("ladder action examples") {
  const LadderTriple t = ladder_triple(kS);
  CHECK(t.j_minus.apply(MultiPoly(1)).is_zero());                 // J- P_0 = 0
  CHECK(t.j_zero.apply(MultiPoly(1)) ==
        MultiPoly(GaussianRational(Rational(1, 2))));             // J0 P_0 = 1/2
  CHECK(t.j_plus.apply(cartan_explicit(1)) == cartan_explicit(2));  // J+ P_1 = P_2
}

TEST_CASE("su(1,1) relations on monomials up to degree 12") {
  const LadderTriple t = ladder_triple(kS);
  for (int k = 0; k <= 12; ++k) CHECK(su11_relations_hold_on(t, k));
}

TEST_CASE("su(1,1) bracket acting on the constant") {
  const LadderTriple t = ladder_triple(kS);
  const MultiPoly one(1);
  // [J+, J-] 1 = -2 J0 1 = -1
  CHECK(op_commutator(t.j_plus, t.j_minus).apply(one) == MultiPoly(-1));
}

TEST_CASE("Casimir eigenvalue is exactly -1/4, n <= 10") {
  const LadderTriple t = ladder_triple(kS);
  for (int n = 0; n <= 10; ++n) CHECK(casimir_residual(t, n).is_zero());
}

TEST_CASE("u-lattice shift relations, n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(eq26_residual(n).is_zero());
    CHECK(eq27_residual(n).is_zero());
  }
}

TEST_CASE("difference equation in u, n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(u_difference_residual(n, kS).is_zero());  // symbolic s
    CHECK(u_difference_residual(n, MultiPoly(GaussianRational(Rational(-3)))).is_zero());
    CHECK(u_difference_residual(n, MultiPoly(GaussianRational(Rational(1, 2)))).is_zero());
  }
  CHECK_THROWS_AS(u_difference_residual(2, MultiPoly(1)), std::domain_error);
}

TEST_CASE("difference equation in u, n = 1 hand expansion") {
  // Delta Nabla P_1 = 0 and Delta P_1 = 2c, so the equation collapses to
  // -[2u + (1+s)] 2c + 2 P_1(s,u) = 0.
  const MultiPoly c = half_i_hbar();
  MultiPoly p1u = to_u_form(cartan_explicit(1));
  CHECK(p1u == GaussianRational(2) * c * kU + c + c * kS);
  CHECK(forward_delta().apply(p1u) == GaussianRational(2) * c);
  CHECK(forward_delta().apply(backward_nabla().apply(p1u)).is_zero());
}

TEST_CASE("euclidean commutator table on monomials up to degree 10") {
  for (int k = 0; k <= 10; ++k) CHECK(e2_commutator_residuals(k).all_zero());
}

TEST_CASE("euclidean commutators on explicit low-degree cases") {
  const DiffOp dh = e2_dh();
  const DiffOp delta = e2_delta();
  const DiffOp xop = DiffOp::mul(kX);
  // [D_h, Delta_h] x^3 = 0: shifts commute
  CHECK(op_commutator(dh, delta).apply(kX.pow(3)).is_zero());
  // [x, D_h] x = -Delta_h x = -x
  CHECK(op_commutator(xop, dh).apply(kX) == -kX);
  CHECK(delta.apply(kX) == kX);
}

TEST_CASE("hbar -> 0 contraction on monomials up to degree 10") {
  for (int k = 0; k <= 10; ++k) CHECK(e2_contraction_residuals(k).all_zero());
  // D_h x^2 -> 2x in the limit
  MultiPoly limit = e2_dh().apply(kX * kX).substitute(Sym::hbar, MultiPoly(0));
  CHECK(limit == GaussianRational(2) * kX);
}
