#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ordpoly/parser.hpp"

using namespace ordpoly;

TEST_CASE("parses the defining examples") {
  CHECK(render_operator(parse_operator_expression("p*q")) == "q*p - i*hbar");
  CHECK(render_operator(parse_operator_expression("t[1,1;0]")) == "q*p - (1/2)*i*hbar");
  // associativity of the parsed product
  CHECK(parse_operator_expression("q*(p*q)*p") == parse_operator_expression("(q*p)*(q*p)"));
}

TEST_CASE("scalar atoms, powers and division") {
  CHECK(parse_operator_expression("i^2") == OpPoly(MultiPoly(-1)));
  CHECK(parse_operator_expression("1/2*hbar") ==
        OpPoly(MultiPoly::variable(Sym::hbar) * GaussianRational(Rational(1, 2))));
  CHECK(parse_operator_expression("q^3") == OpPoly::word(3, 0));
  CHECK(parse_operator_expression("2*I - I") == op_identity());
  CHECK(parse_operator_expression("-q") == -q_hat());
}

TEST_CASE("ordered products with symbolic and numeric ordering") {
  CHECK(parse_operator_expression("t[2,1;s]") == ordered_product({2, 1, sym_s()}));
  CHECK(parse_operator_expression("t[2,2;1]") == OpPoly::word(2, 2));
  CHECK(parse_operator_expression("t[1,1;1/2]") ==
        ordered_product({1, 1, MultiPoly(GaussianRational(Rational(1, 2)))}));
  CHECK(parse_operator_expression("t[2,1;i]") ==
        ordered_product({2, 1, MultiPoly(GaussianRational::i())}));
}

TEST_CASE("round trip: parse(render(x)) == x") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> e(0, 3), coeff(-4, 4), pick(0, 3);
  for (int t = 0; t < 120; ++t) {
    OpPoly x;
    for (int k = 0; k < 3; ++k) {
      GaussianRational c = pick(rng) == 0
                               ? GaussianRational(Rational(coeff(rng), 2), Rational(coeff(rng)))
                               : GaussianRational(Rational(coeff(rng), 3));
      MultiPoly cp = MultiPoly::constant(c);
      if (pick(rng) == 1) cp = cp * MultiPoly::variable(Sym::hbar);
      if (pick(rng) == 2) cp = cp * MultiPoly::variable(Sym::s);
      x.add_term(Word{e(rng), e(rng)}, cp);
    }
    CHECK(parse_operator_expression(render_operator(x)) == x);
  }
}

TEST_CASE("errors carry a position") {
  auto expect_error = [](const std::string& text, std::size_t pos_at_least) {
    try {
      parse_operator_expression(text);
      FAIL("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.pos >= pos_at_least);
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
  };
  expect_error("p*q*", 4);
  expect_error("q + ", 4);
  expect_error("w", 0);
  expect_error("t[1,1;q]", 6);   // ordering parameter must be scalar
  expect_error("q/p", 2);        // divisor must be a constant scalar
  expect_error("q/0", 2);
  expect_error("(q", 2);
  expect_error("t[1;2]", 0);
  expect_error("q^-2", 2);
}

TEST_CASE("rendering zero and bare scalars") {
  CHECK(render_operator(OpPoly()) == "0");
  CHECK(render_operator(op_identity()) == "1");
  CHECK(render_operator(parse_operator_expression("q - q")) == "0");
  CHECK(render_operator(OpPoly(MultiPoly(GaussianRational(Rational(-3, 2))))) == "-3/2");
}
