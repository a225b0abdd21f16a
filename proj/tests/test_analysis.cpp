#include <catch2/catch_amalgamated.hpp>

#include "ordpoly/analysis.hpp"

using namespace ordpoly;

namespace {
const MultiPoly kY = MultiPoly::variable(Sym::y);
const MultiPoly kV = MultiPoly::variable(Sym::v);
}  // namespace

TEST_CASE("pearson relation for the structured weight, n <= 10") {
  for (int n = 0; n <= 10; ++n) CHECK(pearson_residual(n).is_zero());
}

TEST_CASE("hypergeometric equation in y for P_n(y,v), n <= 10") {
  for (int n = 0; n <= 10; ++n) CHECK(self_adjoint_residual(n).is_zero());
}

TEST_CASE("rodrigues numerators") {
  CHECK(rodrigues_numerator(0) == MultiPoly(1));
  CHECK(rodrigues_numerator(1) == kV - kY);
  // Q_2 = v^2 - 4vy + 2y^2 - 1
  CHECK(rodrigues_numerator(2) ==
        kV * kV - GaussianRational(4) * kV * kY + GaussianRational(2) * kY * kY - MultiPoly(1));
}

TEST_CASE("rodrigues formula: (hbar/2)^n Q_n = P_n(y,v), exact, n <= 8") {
  for (int n = 0; n <= 8; ++n) CHECK(rodrigues_residual(n).is_zero());
}

TEST_CASE("rodrigues route satisfies the equation independently, n <= 8") {
  for (int n = 0; n <= 8; ++n)
    CHECK(yv_equation_residual(rodrigues_numerator(n), n).is_zero());
}

TEST_CASE("analysis-side P_n at hbar = 2 equals Q_n") {
  for (int n = 0; n <= 8; ++n) CHECK(analysis_pn(n) == rodrigues_numerator(n));
}

TEST_CASE("contour integral representation") {
  // n = 0 is the Cauchy integral of rho/rho
  Complexd c0 = contour_integral(0, Complexd(0.0, 0.0), 1.0, 0.4, 128);
  CHECK(std::abs(c0 - Complexd(1.0, 0.0)) < 1e-10);

  auto pn_value = [](int n, Complexd y0, double v) {
    MultiPoly::Bindings<Complexd> bind{{Sym::y, y0}, {Sym::v, Complexd(v, 0.0)}};
    return analysis_pn(n).eval_complex(bind);
  };

  // n = 1 at y0 = 0.3, v = 1
  Complexd c1 = contour_integral(1, Complexd(0.3, 0.0), 1.0, 0.5, 256);
  CHECK(std::abs(c1 - pn_value(1, Complexd(0.3, 0.0), 1.0)) < 1e-8);

  // n = 4 at y0 = -0.2, v = 2, stable under node doubling
  Complexd a = contour_integral(4, Complexd(-0.2, 0.0), 2.0, 0.5, 256);
  Complexd b = contour_integral(4, Complexd(-0.2, 0.0), 2.0, 0.5, 512);
  CHECK(std::abs(a - pn_value(4, Complexd(-0.2, 0.0), 2.0)) < 1e-8);
  CHECK(std::abs(a - b) < 1e-10);

  // guardrails
  CHECK_THROWS_AS(contour_integral(1, Complexd(0.0, 0.0), 1.0, 0.99, 128), std::domain_error);
  CHECK_THROWS_AS(contour_integral(1, Complexd(0.0, 0.8), 1.0, 0.3, 128), std::domain_error);
  CHECK_THROWS_AS(contour_integral(1, Complexd(0.0, 0.0), 1.0, 0.3, 8), std::invalid_argument);
}

TEST_CASE("generating function coefficients are exactly P_n/n!, orders <= 8") {
  struct Point {
    Rational y0, v;
  };
  for (const Point& pt : {Point{Rational(0), Rational(0)}, Point{Rational(3, 10), Rational(1)},
                          Point{Rational(-1, 2), Rational(2)}}) {
    GeneratingFunctionCheck chk = generating_function_check(pt.y0, pt.v, 8);
    CHECK(chk.exact_match);
    CHECK(chk.max_abs_err <= 1e-9);
    CHECK(chk.coefficients[0] == GaussianRational(1));
  }
}

TEST_CASE("generating function coefficients rebuild the polynomial in y") {
  // Expansions at n+2 base points pin P_n by exact Lagrange interpolation;
  // the rebuilt value at a fresh point matches the explicit polynomial.
  const int n = 4;
  const Rational v(1);
  std::vector<Rational> base{Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1),
                             Rational(-1), Rational(2)};
  std::vector<GaussianRational> values;
  for (const Rational& y0 : base)
    values.push_back(generating_function_check(y0, v, n).coefficients[n] * factorial(n));

  const Rational y_eval(1, 3);
  GaussianRational rebuilt(0);
  for (std::size_t i = 0; i < base.size(); ++i) {
    GaussianRational weight(1);
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (i == j) continue;
      weight *= GaussianRational(y_eval - base[j]) / GaussianRational(base[i] - base[j]);
    }
    rebuilt += values[i] * weight;
  }
  MultiPoly::Bindings<GaussianRational> bind{{Sym::y, GaussianRational(y_eval)},
                                             {Sym::v, GaussianRational(v)}};
  CHECK(rebuilt == analysis_pn(n).eval_exact(bind));
}

TEST_CASE("zero-energy equation holds exactly in the closed function class") {
  for (int n = 0; n <= 6; ++n) CHECK(schrodinger_residual_symbolic(n).is_zero());
}

TEST_CASE("wavefunction n = 0, v = 0 is (1+y^2)^{1/4}") {
  const WaveFunction psi = schrodinger_wavefunction(0);
  CHECK(psi.quarter_power == 1);
  for (double y : {-2.0, 0.0, 0.7}) {
    CHECK(psi.value(y, 0.0) == Catch::Approx(std::pow(1.0 + y * y, 0.25)).epsilon(1e-14));
  }
}

TEST_CASE("zero-energy residual on the grid, n <= 5, v in {0,1,2}") {
  std::vector<double> grid;
  for (double y = -8.0; y <= 8.0 + 1e-9; y += 0.25) grid.push_back(y);
  for (int n = 0; n <= 5; ++n)
    for (double v : {0.0, 1.0, 2.0}) {
      SchrodingerRun run = schrodinger_run(n, v, grid);
      INFO("n=" << n << " v=" << v << " max_res=" << run.max_residual
                << " scale=" << run.max_potential_term);
      CHECK(run.relative_residual() <= 1e-10);
    }
}

TEST_CASE("parity of the zero-energy states at v = 0") {
  for (int n = 0; n <= 5; ++n) {
    const WaveFunction psi = schrodinger_wavefunction(n);
    for (double y : {0.25, 1.0, 3.5, 7.0}) {
      double left = psi.value(-y, 0.0);
      double right = psi.value(y, 0.0);
      double expected = (n % 2 == 0) ? right : -right;
      CHECK(left == Catch::Approx(expected).margin(1e-12 * std::max(1.0, std::abs(right))));
    }
  }
}

TEST_CASE("series arithmetic is exact through the truncation order") {
  RationalSeries u = RationalSeries::identity(6);
  RationalSeries one = RationalSeries::constant(6, GaussianRational(1));
  // geometric series: 1/(1-u)
  RationalSeries geo = (one - u).reciprocal();
  for (int k = 0; k <= 6; ++k) CHECK(geo[k] == GaussianRational(1));
  // sqrt(1+u)^2 = 1+u
  RationalSeries root = (one + u).sqrt_one();
  CHECK(root * root == one + u);
  // exp(u) coefficients are 1/k!
  RationalSeries e = u.exp_zero();
  for (int k = 0; k <= 6; ++k) CHECK(e[k] == GaussianRational(1) / factorial(k));
  // derivative of the integral recovers everything below the truncation order
  RationalSeries f = geo * root;
  RationalSeries round_trip = f.integral().derivative();
  for (int k = 0; k < 6; ++k) CHECK(round_trip[k] == f[k]);
  CHECK_THROWS_AS(u.reciprocal(), std::domain_error);
  CHECK_THROWS_AS((one + u).exp_zero(), std::domain_error);
  CHECK_THROWS_AS(((one + u) + one).sqrt_one(), std::domain_error);
}
