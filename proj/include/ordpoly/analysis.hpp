#pragma once

#include <cmath>
#include <complex>
#include <fstream>
#include <vector>

#include "ordpoly/cartan.hpp"
#include "ordpoly/series.hpp"

namespace ordpoly {

// Everything in this header works in the (y, v) variables reached by
// s = i y, x/c = -i v. The hbar = 2 binding (c = i) makes the Rodrigues
// prefactor (-ic)^n equal to 1; hbar_homogeneous() restores general hbar.

/// P_n(y, v): real-coefficient polynomial of the pair (y, v) at hbar = 2.
inline MultiPoly analysis_pn(int n) {
  return to_yv_form(cartan_explicit(n)).substitute(Sym::hbar, MultiPoly(2));
}

/// Weight rho_n(y,v) = e^{v arctan y} (1+y^2)^{half_power/2} kept structurally:
/// only its exponents are stored, so differentiation is bookkeeping on those.
struct WeightExpr {
  int half_power;  // rho carries (1+y^2)^{half_power/2}; Pearson uses -(2n+1)

  static WeightExpr for_level(int n) { return {-(2 * n + 1)}; }

  /// (1+y^2) * d(ln rho)/dy = v + half_power * y.
  MultiPoly log_derivative_numerator() const {
    return MultiPoly::variable(Sym::v) +
           GaussianRational(half_power) * MultiPoly::variable(Sym::y);
  }
};

/// Pearson relation d/dy[(1+y^2) rho] = [v - (2n-1) y] rho, reduced by rho and
/// cleared of (1+y^2): the residual is the zero polynomial iff it holds.
inline MultiPoly pearson_residual(int n) {
  const MultiPoly y = MultiPoly::variable(Sym::y);
  const MultiPoly v = MultiPoly::variable(Sym::v);
  const WeightExpr rho = WeightExpr::for_level(n);
  return rho.log_derivative_numerator() + GaussianRational(2) * y -
         (v - GaussianRational(2 * n - 1) * y);
}

/// Hypergeometric equation in y on a polynomial:
///   (1+y^2) f'' + [v - (2n-1) y] f' + n^2 f.
inline MultiPoly yv_equation_residual(const MultiPoly& f, int n) {
  const MultiPoly y = MultiPoly::variable(Sym::y);
  const MultiPoly v = MultiPoly::variable(Sym::v);
  const MultiPoly d1 = f.derivative(Sym::y);
  const MultiPoly d2 = d1.derivative(Sym::y);
  return (MultiPoly(1) + y * y) * d2 + (v - GaussianRational(2 * n - 1) * y) * d1 +
         GaussianRational(Rational(n) * n) * f;
}

/// Equation residual for the Cartan polynomial itself (symbolic in hbar; the
/// operators never touch hbar, so each hbar slice is checked at once).
inline MultiPoly self_adjoint_residual(int n) {
  return yv_equation_residual(to_yv_form(cartan_explicit(n)), n);
}

/// Rodrigues numerators: d^n/dy^n [e^{v arctan y} (1+y^2)^{-1/2}]
///                       = Q_n(y,v) e^{v arctan y} (1+y^2)^{-(2n+1)/2},
/// generated by Q_{k+1} = (1+y^2) Q_k' + [v - (2k+1) y] Q_k, Q_0 = 1.
inline MultiPoly rodrigues_numerator(int n) {
  const MultiPoly y = MultiPoly::variable(Sym::y);
  const MultiPoly v = MultiPoly::variable(Sym::v);
  const MultiPoly one_plus_y2 = MultiPoly(1) + y * y;
  MultiPoly q(1);
  for (int k = 0; k < n; ++k)
    q = one_plus_y2 * q.derivative(Sym::y) + (v - GaussianRational(2 * k + 1) * y) * q;
  return q;
}

/// (-ic)^n Q_n = P_n with general hbar: (-ic)^n = (hbar/2)^n, so the exact
/// statement checked is  to_yv(P_n) == (hbar/2)^n Q_n(y,v).
inline MultiPoly rodrigues_residual(int n) {
  const MultiPoly half_hbar =
      MultiPoly::variable(Sym::hbar) * GaussianRational(Rational(1, 2));
  return to_yv_form(cartan_explicit(n)) - half_hbar.pow(n) * rodrigues_numerator(n);
}

// ---------------------------------------------------------------------------
// Contour integral representation (hbar = 2 binding):
//   P_n(y0,v) = n!/(2 pi i rho_n(y0,v)) contour_integral (1+z^2)^n/(z-y0)^{n+1}
//               rho_n(z,v) dz,
// counterclockwise around z = y0. The integrand's branch points sit at
// z = +-i; the contour must stay inside the strip |Im z| < 1 and away from
// them, which keeps both principal branches analytic.
// ---------------------------------------------------------------------------

inline Complexd weight_value(Complexd z, double v, int n) {
  const Complexd atg = std::atan(z);
  const Complexd base = Complexd(1.0, 0.0) + z * z;
  return std::exp(v * atg) * std::pow(base, -(2.0 * n + 1.0) / 2.0);
}

inline Complexd contour_integral(int n, Complexd y0, double v, double radius, int nodes) {
  if (nodes < 64) throw std::invalid_argument("contour_integral: nodes < 64");
  const Complexd plus_i(0.0, 1.0), minus_i(0.0, -1.0);
  if (std::abs(y0 - plus_i) <= radius + 0.1 || std::abs(y0 - minus_i) <= radius + 0.1 ||
      std::abs(y0.imag()) + radius >= 0.95)
    throw std::domain_error("contour_integral: contour too close to the branch points +-i");

  double nfact = 1.0;
  for (int k = 2; k <= n; ++k) nfact *= k;
  const Complexd pref = nfact / weight_value(y0, v, n);

  Complexd acc(0.0, 0.0);
  constexpr double kTwoPi = 6.28318530717958647692;
  for (int j = 0; j < nodes; ++j) {
    const double theta = kTwoPi * j / nodes;
    const Complexd e(std::cos(theta), std::sin(theta));
    const Complexd z = y0 + radius * e;
    const Complexd g = std::pow(Complexd(1.0, 0.0) + z * z, static_cast<double>(n)) /
                       std::pow(z - y0, static_cast<double>(n + 1)) * weight_value(z, v, n);
    acc += g * e;
  }
  return pref * (radius / nodes) * acc;
}

// ---------------------------------------------------------------------------
// Generating function. With rho0 = e^{v arctan y} (1+y^2)^{-1/2} (the n = 0
// weight) the Rodrigues family is generated by the composed-Taylor kernel
//   Phi(y0, v, u) = rho0(y0 + u (1+y0^2), v) / rho0(y0, v)
//                 = sum_n P_n(y0,v)/n! (-u/ic)^n     (hbar = 2: (-1/ic)^n = 1).
// The truncated series is built exactly: the shifted argument is polynomial
// in u, arctan enters through its derivative (a rational series), and the
// inverse square root through the exact series sqrt.
// ---------------------------------------------------------------------------

struct GeneratingFunctionCheck {
  int order = 0;
  std::vector<GaussianRational> coefficients;  // series coefficients of Phi
  std::vector<GaussianRational> expected;      // P_n(y0,v)/n!
  bool exact_match = false;
  double max_abs_err = 0.0;
};

inline GeneratingFunctionCheck generating_function_check(const Rational& y0, const Rational& v,
                                                         int order) {
  if (order < 0) throw std::invalid_argument("generating_function_check: order < 0");
  const GaussianRational y0g{y0};
  const GaussianRational one_plus_y02 = GaussianRational(1) + y0g * y0g;

  // B(u) = (1 + yhat^2)/(1 + y0^2) = 1 + 2 y0 u + (1+y0^2) u^2.
  RationalSeries b(order);
  b[0] = GaussianRational(1);
  if (order >= 1) b[1] = GaussianRational(2) * y0g;
  if (order >= 2) b[2] = one_plus_y02;

  // [(1+yhat^2)/(1+y0^2)]^{-1/2}, principal branch with value 1 at u = 0.
  RationalSeries w = b.sqrt_one().reciprocal();

  // arctan(yhat) - arctan(y0) has derivative (1+y0^2)/(1+yhat^2) = 1/B.
  RationalSeries arctan_diff = b.reciprocal().integral();

  RationalSeries phi = (GaussianRational{v} * arctan_diff).exp_zero() * w;

  GeneratingFunctionCheck out;
  out.order = order;
  for (int n = 0; n <= order; ++n) {
    out.coefficients.push_back(phi[n]);
    MultiPoly::Bindings<GaussianRational> bind{{Sym::y, y0g}, {Sym::v, GaussianRational{v}}};
    out.expected.push_back(analysis_pn(n).eval_exact(bind) / factorial(n));
  }
  out.exact_match = out.coefficients == out.expected;
  for (int n = 0; n <= order; ++n) {
    const GaussianRational diff = out.coefficients[n] - out.expected[n];
    out.max_abs_err = std::max(out.max_abs_err, std::abs(diff.to_complex()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Zero-energy states. Psi_n = [(1+y^2) rho_n]^{1/2} P_n lives in the class
// T(y,v) * e^{(v/2) arctan y} * (1+y^2)^{k/4}, which is closed under d/dy.
// ---------------------------------------------------------------------------

struct WaveFunction {
  MultiPoly t;         // polynomial part in (y, v)
  int quarter_power;   // exponent k of (1+y^2)^{k/4}

  WaveFunction derivative() const {
    const MultiPoly y = MultiPoly::variable(Sym::y);
    const MultiPoly v = MultiPoly::variable(Sym::v);
    const GaussianRational half(Rational(1, 2));
    MultiPoly tn = (MultiPoly(1) + y * y) * t.derivative(Sym::y) +
                   (half * v + GaussianRational(Rational(quarter_power, 2)) * y) * t;
    return {std::move(tn), quarter_power - 4};
  }

  double value(double yv, double vv) const {
    MultiPoly::Bindings<Complexd> bind{{Sym::y, Complexd(yv, 0)}, {Sym::v, Complexd(vv, 0)}};
    const double poly = t.eval_complex(bind).real();
    return poly * std::exp(0.5 * vv * std::atan(yv)) *
           std::pow(1.0 + yv * yv, quarter_power / 4.0);
  }
};

inline WaveFunction schrodinger_wavefunction(int n) {
  return {analysis_pn(n), 1 - 2 * n};
}

/// Numerator of the n-th potential term: the zero-energy equation reads
///   Psi'' + [y^2 + 2v(2n+1) y + (2n+1)^2 - (v^2+3)] / (4 (1+y^2)^2) Psi = 0.
inline MultiPoly schrodinger_potential_numerator(int n) {
  const MultiPoly y = MultiPoly::variable(Sym::y);
  const MultiPoly v = MultiPoly::variable(Sym::v);
  const GaussianRational w(2 * n + 1);
  return y * y + GaussianRational(2) * w * v * y + MultiPoly(w * w) - (v * v + MultiPoly(3));
}

/// Exact residual: with Psi = (T0, k0), the equation collapses to a single
/// polynomial identity T2 + T0 * numerator/4 = 0 at matching power k0 - 8.
inline MultiPoly schrodinger_residual_symbolic(int n) {
  const WaveFunction psi = schrodinger_wavefunction(n);
  const WaveFunction dd = psi.derivative().derivative();
  return dd.t + psi.t * schrodinger_potential_numerator(n) * GaussianRational(Rational(1, 4));
}

struct SchrodingerPoint {
  double y = 0.0;
  double potential = 0.0;  // scaled potential V_n (2m/eta^2 hbar^2 = 1)
  double psi = 0.0;
  double residual = 0.0;
};

struct SchrodingerRun {
  int n = 0;
  double v = 0.0;
  std::vector<SchrodingerPoint> points;
  double max_residual = 0.0;        // absolute
  double max_potential_term = 0.0;  // scale used for the relative residual
  double relative_residual() const {
    return max_residual / std::max(max_potential_term, 1e-300);
  }
};

inline SchrodingerRun schrodinger_run(int n, double v, const std::vector<double>& grid) {
  const WaveFunction psi = schrodinger_wavefunction(n);
  const WaveFunction dd = psi.derivative().derivative();
  const MultiPoly num = schrodinger_potential_numerator(n);
  SchrodingerRun run;
  run.n = n;
  run.v = v;
  for (double yv : grid) {
    MultiPoly::Bindings<Complexd> bind{{Sym::y, Complexd(yv, 0)}, {Sym::v, Complexd(v, 0)}};
    const double numv = num.eval_complex(bind).real();
    const double base = 1.0 + yv * yv;
    SchrodingerPoint pt;
    pt.y = yv;
    pt.psi = psi.value(yv, v);
    pt.potential = -numv / (4.0 * base * base);
    const double second = dd.value(yv, v);
    const double pot_term = numv / (4.0 * base * base) * pt.psi;
    pt.residual = second + pot_term;
    run.max_residual = std::max(run.max_residual, std::abs(pt.residual));
    run.max_potential_term = std::max(run.max_potential_term, std::abs(pot_term));
    run.points.push_back(pt);
  }
  return run;
}

inline void write_schrodinger_csv(const std::string& path, const SchrodingerRun& run) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "y,potential,psi,residual\n";
  out.precision(17);
  for (const auto& p : run.points)
    out << p.y << ',' << p.potential << ',' << p.psi << ',' << p.residual << '\n';
}

}  // namespace ordpoly
