#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ordpoly/ordered.hpp"

using namespace ordpoly;

namespace {

const MultiPoly kHbar = MultiPoly::variable(Sym::hbar);
const MultiPoly kIHbar = GaussianRational::i() * kHbar;

OpPoly expand_at(const TSum& sum, const MultiPoly& s_value) {
  OpPoly out;
  for (const auto& [nm, coeff] : sum.terms()) {
    OrderedProductSpec spec{nm.first, nm.second, sum.ordering().substitute(Sym::s, s_value)};
    out += ordered_product(spec) * coeff.substitute(Sym::s, s_value);
  }
  return out;
}

LetterWord random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), coin(0, 1);
  LetterWord w(len(rng));
  for (auto& g : w) g = coin(rng) ? Gen::q : Gen::p;
  return w;
}

}  // namespace

TEST_CASE("defining relation and basic rewrites") {
  CHECK(commutator(q_hat(), p_hat()) == OpPoly(kIHbar));

  // p q -> q p - i hbar
  OpPoly pq = p_hat() * q_hat();
  OpPoly expected = OpPoly::word(1, 1);
  expected += OpPoly(-kIHbar);
  CHECK(pq == expected);

  // q^2 p q -> q^3 p - i hbar q^2
  OpPoly lhs = OpPoly::word(2, 1) * q_hat();
  OpPoly rhs = OpPoly::word(3, 1);
  rhs += OpPoly::word(2, 0) * (-kIHbar);
  CHECK(lhs == rhs);
}

TEST_CASE("rewrite engine matches the closed-form product") {
  for (int b = 0; b <= 6; ++b)
    for (int c = 0; c <= 6; ++c) {
      LetterWord w;
      for (int k = 0; k < b; ++k) w.push_back(Gen::p);
      for (int k = 0; k < c; ++k) w.push_back(Gen::q);
      CHECK(normal_order_word(w) == OpPoly::word(0, b) * OpPoly::word(c, 0));
    }
}

TEST_CASE("confluence: rewrite order does not matter") {
  std::mt19937 rng(77);
  for (int t = 0; t < 300; ++t) {
    LetterWord w = random_word(rng, 8);
    OpPoly a = normal_order_word(w, MultiPoly(1), RewriteStrategy::leftmost);
    OpPoly b = normal_order_word(w, MultiPoly(1), RewriteStrategy::rightmost);
    CHECK(a == b);
  }
}

TEST_CASE("multiplication is associative") {
  std::mt19937 rng(99);
  for (int t = 0; t < 60; ++t) {
    OpPoly a = normal_order_word(random_word(rng, 4));
    OpPoly b = normal_order_word(random_word(rng, 4));
    OpPoly c = normal_order_word(random_word(rng, 4));
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("x_hat commutators") {
  // [x, q] = -i hbar q
  CHECK(commutator(x_hat(), q_hat()) == q_hat() * (-kIHbar));
  // [x, p^k] = i hbar k p^k
  for (int k = 1; k <= 5; ++k) {
    OpPoly expected = OpPoly::word(0, k) * (kIHbar * GaussianRational(k));
    CHECK(commutator(x_hat(), op_pow(p_hat(), k)) == expected);
  }
}

TEST_CASE("ordered products: special values of s") {
  // s = 1 gives the standard order q^n p^m
  CHECK(ordered_product({1, 1, MultiPoly(1)}) == OpPoly::word(1, 1));
  CHECK(ordered_product({3, 2, MultiPoly(1)}) == OpPoly::word(3, 2));
  // s = -1 gives the antistandard order p^m q^n
  CHECK(ordered_product({2, 2, MultiPoly(-1)}) == OpPoly::word(0, 2) * OpPoly::word(2, 0));
  // s = 0, n = m = 1: the Weyl-symmetric product (qp+pq)/2 = qp - i hbar/2
  OpPoly weyl11 = OpPoly::word(1, 1);
  weyl11 += OpPoly(-half_i_hbar());
  CHECK(ordered_product({1, 1, MultiPoly(0)}) == weyl11);
  // no p factors: any s gives q^n
  CHECK(ordered_product({2, 0, sym_s()}) == OpPoly::word(2, 0));
}

TEST_CASE("the two defining forms agree for n,m <= 5, symbolic s") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m) {
      OrderedProductSpec spec{n, m, sym_s()};
      CHECK(ordered_product(spec, OrderedForm::q_outer) ==
            ordered_product(spec, OrderedForm::p_outer));
    }
}

TEST_CASE("basis change: explicit coefficient for n = m = 1") {
  // t(s)_11 = t(s')_11 + (i hbar/2)(s - s') t(s')_00
  const MultiPoly sp = MultiPoly::variable(Sym::y);  // stands for s'
  TSum sum = reorder({1, 1, sym_s()}, sp);
  REQUIRE(sum.terms().size() == 2);
  CHECK(sum.terms().at({1, 1}) == MultiPoly(1));
  CHECK(sum.terms().at({0, 0}) == half_i_hbar() * (sym_s() - sp));
}

TEST_CASE("basis change: trivial when s' = s") {
  TSum sum = reorder({3, 2, sym_s()}, sym_s());
  REQUIRE(sum.terms().size() == 1);
  CHECK(sum.terms().at({3, 2}) == MultiPoly(1));
}

TEST_CASE("basis change is consistent with expansion, n,m <= 4") {
  const MultiPoly sp = MultiPoly::variable(Sym::y);
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      OrderedProductSpec spec{n, m, sym_s()};
      TSum sum = reorder(spec, sp);
      OpPoly direct = ordered_product(spec);
      OpPoly via_sum;
      for (const auto& [nm, coeff] : sum.terms())
        via_sum += ordered_product({nm.first, nm.second, sp}) * coeff;
      CHECK(direct == via_sum);
    }
}

TEST_CASE("basis change round trip is the identity, n,m <= 4") {
  const MultiPoly sp = MultiPoly::variable(Sym::y);
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      TSum there = reorder({n, m, sym_s()}, sp);
      TSum back(sym_s());
      for (const auto& [nm, coeff] : there.terms()) {
        TSum piece = reorder({nm.first, nm.second, sp}, sym_s());
        for (const auto& [nm2, coeff2] : piece.terms())
          back.add(nm2.first, nm2.second, coeff * coeff2);
      }
      REQUIRE(back.terms().size() == 1);
      CHECK(back.terms().at({n, m}) == MultiPoly(1));
    }
}

TEST_CASE("dagger basics") {
  // (qp)^dagger = pq = qp - i hbar
  OpPoly expected = OpPoly::word(1, 1);
  expected += OpPoly(-kIHbar);
  CHECK(OpPoly::word(1, 1).dagger() == expected);

  // involution on random words
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    OpPoly a = normal_order_word(random_word(rng, 6));
    CHECK(a.dagger().dagger() == a);
  }
}

TEST_CASE("dagger of an ordered product flips the sign of s (formal real s)") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      OpPoly lhs = ordered_product({n, m, sym_s()}).dagger();
      OpPoly rhs = ordered_product({n, m, -sym_s()});
      CHECK(lhs == rhs);
    }
}

TEST_CASE("hermiticity holds iff conj(s) = -s") {
  auto hermitian_at = [](const GaussianRational& s_val, int n, int m) {
    OpPoly t = ordered_product({n, m, MultiPoly(s_val)});
    return t.dagger() == t;
  };
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      CHECK(hermitian_at(GaussianRational(0), n, m));
      CHECK(hermitian_at(GaussianRational::i(), n, m));
      CHECK(hermitian_at(GaussianRational(Rational(0), Rational(2)), n, m));
      CHECK_FALSE(hermitian_at(GaussianRational(1), n, m));  // s = 1 must fail
    }
  // the pure imaginary case called out for (n,m) = (2,1)
  OpPoly t21 = ordered_product({2, 1, MultiPoly(GaussianRational::i())});
  CHECK(t21.dagger() == t21);
}

TEST_CASE("brackets of elementary operators") {
  CHECK(commutator(q_hat(), p_hat()) == OpPoly(kIHbar));
  OpPoly t01 = ordered_product({0, 1, MultiPoly(0)});
  OpPoly t10 = ordered_product({1, 0, MultiPoly(0)});
  CHECK(commutator(t01, t10) == OpPoly(-kIHbar));
}

TEST_CASE("structure constants match the brute-force bracket, indices <= 2") {
  std::vector<MultiPoly> s_values{sym_s(), MultiPoly(0), MultiPoly(1), MultiPoly(-1),
                                  MultiPoly(GaussianRational::i()),
                                  MultiPoly(GaussianRational(Rational(1, 2)))};
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l)
      for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m) {
          TSum comm = structure_bracket(k, l, n, m, sym_s(), BracketKind::commutator);
          TSum anti = structure_bracket(k, l, n, m, sym_s(), BracketKind::anticommutator);
          for (const auto& sv : s_values) {
            OpPoly a = ordered_product({k, l, sym_s().substitute(Sym::s, sv)});
            OpPoly b = ordered_product({n, m, sym_s().substitute(Sym::s, sv)});
            CHECK(expand_at(comm, sv) == commutator(a, b));
            CHECK(expand_at(anti, sv) == anticommutator(a, b));
          }
        }
}

TEST_CASE("structure constants reproduce [t01, t10] = -i hbar t00") {
  TSum sum = structure_bracket(0, 1, 1, 0, MultiPoly(0), BracketKind::commutator);
  REQUIRE(sum.terms().size() == 1);
  CHECK(sum.terms().at({0, 0}) == -kIHbar);
}

TEST_CASE("Cartan generators commute") {
  // same symbolic s on both sides
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k) {
      TSum sum = structure_bracket(n, n, k, k, sym_s(), BracketKind::commutator);
      CHECK(sum.terms().empty());
    }
  // independent symbolic orderings s and s' (held as y)
  const MultiPoly sp = MultiPoly::variable(Sym::y);
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k) {
      OpPoly a = ordered_product({n, n, sym_s()});
      OpPoly b = ordered_product({k, k, sp});
      CHECK(commutator(a, b).is_zero());
    }
}

TEST_CASE("anticommutator of x_hat with an ordered product") {
  // [x, t(s)_nm]+ = 2 [ t_{n+1,m+1} - c s (m+n+1) t_nm - c^2 n m (1-s^2) t_{n-1,m-1} ]
  const MultiPoly c = half_i_hbar();
  const MultiPoly s = sym_s();
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      OpPoly lhs = anticommutator(x_hat(), ordered_product({n, m, s}));
      OpPoly rhs = ordered_product({n + 1, m + 1, s}) * GaussianRational(2);
      rhs -= ordered_product({n, m, s}) * (c * s * GaussianRational(2 * (m + n + 1)));
      if (n >= 1 && m >= 1)
        rhs -= ordered_product({n - 1, m - 1, s}) *
               (c * c * (MultiPoly(1) - s * s) * GaussianRational(2 * n * m));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("Cartan product form") {
  CHECK(cartan_product_form(0, +1) == op_identity());

  // n = 1: x + c = qp
  CHECK(cartan_product_form(1, +1) == OpPoly::word(1, 1));

  // n = 2: (x + c)(x + 3c) = q^2 p^2
  CHECK(cartan_product_form(2, +1) == OpPoly::word(2, 2));

  for (int n = 0; n <= 4; ++n) {
    CHECK(cartan_product_form(n, +1) == ordered_product({n, n, MultiPoly(1)}));
    CHECK(cartan_product_form(n, -1) == ordered_product({n, n, MultiPoly(-1)}));
  }
}
