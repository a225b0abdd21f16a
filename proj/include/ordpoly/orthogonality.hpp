#pragma once

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "ordpoly/meixner.hpp"
#include "ordpoly/quadrature.hpp"

namespace ordpoly {

/// One entry of an orthogonality grid; rel_err is computed against
/// max(|lhs|, |rhs|, floor).
struct OrthogonalityResult {
  int n = 0;
  int m = 0;
  Complexd lhs{};
  Complexd rhs{};
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tail_bound = 0.0;
  bool flagged = false;
  std::string note;
};

inline double orthogonality_rel_err(Complexd lhs, Complexd rhs, double floor = 1e-300) {
  const double denom = std::max({std::abs(lhs), std::abs(rhs), floor});
  return std::abs(lhs - rhs) / denom;
}

// ---------------------------------------------------------------------------
// Discrete orthogonality on u = 0, 1, 2, ... in exact rational arithmetic
// with a certified geometric tail:
//   sum_u P_n(s,u) P_m(s,u) mu^u = delta_nm * (n!)^2 c^{2n} (1-s)(s^2-1)^n / 2,
//   mu = (s+1)/(s-1), valid for s < -1 (then 0 < mu < 1).
// ---------------------------------------------------------------------------

struct DiscreteOrthogonality {
  int n = 0;
  int m = 0;
  GaussianRational partial_sum;
  GaussianRational expected;
  Rational tail_bound;      // exact upper bound on the dropped remainder
  Rational scale;           // L1 magnitude of the larger diagonal norm
  bool certified = false;   // |partial_sum - expected| <= tail_bound
  bool within_tolerance = false;  // tail_bound <= tol * scale
  int terms_used = 0;
};

/// Squared norm (1/2) (n!)^2 c^{2n} (1-s)(s^2-1)^n at an exact rational s and
/// hbar; sign-indefinite because c^{2n} = (-1)^n (hbar/2)^{2n}.
inline GaussianRational discrete_norm_squared(int n, const Rational& s, const Rational& hbar) {
  GaussianRational c(Rational(0), hbar / 2);
  GaussianRational nf = factorial(n);
  Rational s2m1 = s * s - 1;
  Rational pow_term(1);
  for (int k = 0; k < n; ++k) pow_term *= s2m1;
  return nf * nf * c.pow(2 * n) * GaussianRational((1 - s) * pow_term / 2);
}

inline DiscreteOrthogonality discrete_orthogonality(int n, int m, const Rational& s,
                                                    const Rational& hbar, int u_max,
                                                    const Rational& rel_tol = Rational(1, 10000000000LL)) {
  if (!(s < -1)) throw std::domain_error("discrete_orthogonality: requires s < -1");
  if (u_max < 1) throw std::invalid_argument("discrete_orthogonality: u_max < 1");
  const Rational mu = (s + 1) / (s - 1);  // in (0,1) for s < -1

  auto u_poly = [&](int k) {
    // bind s and hbar, leaving a univariate polynomial in u
    MultiPoly p = to_u_form(cartan_explicit(k));
    MultiPoly out;
    for (const auto& [mono, coeff] : p.terms()) {
      GaussianRational c = coeff;
      c *= GaussianRational(s).pow(mono[Sym::s]);
      c *= GaussianRational(hbar).pow(mono[Sym::hbar]);
      Monomial rest;
      rest[Sym::u] = mono[Sym::u];
      out += MultiPoly::term(rest, c);
    }
    return out;
  };
  const MultiPoly product = u_poly(n) * u_poly(m);
  const int deg = product.degree(Sym::u);

  // Partial sum in exact rationals.
  GaussianRational sum(0);
  GaussianRational mu_pow(1);
  const GaussianRational mu_g{mu};
  for (int uu = 0; uu <= u_max; ++uu) {
    MultiPoly::Bindings<GaussianRational> bind{{Sym::u, GaussianRational(Rational(uu))}};
    sum += product.eval_exact(bind) * mu_pow;
    mu_pow *= mu_g;
  }

  // Tail certificate: |product(u)| <= A u^deg for u >= 1 with A the L1 sum of
  // coefficient magnitudes; the remainder is dominated by the geometric-like
  // series A u^deg mu^u whose term ratio is bounded by
  // q = mu ((u_max+2)/(u_max+1))^deg.
  Rational a_bound(0);
  for (const auto& [mono, coeff] : product.terms()) a_bound += coeff.l1_norm();
  Rational ratio_base(u_max + 2, u_max + 1);
  Rational q = mu;
  for (int k = 0; k < deg; ++k) q *= ratio_base;
  DiscreteOrthogonality out;
  out.n = n;
  out.m = m;
  out.partial_sum = sum;
  out.expected = (n == m) ? discrete_norm_squared(n, s, hbar) : GaussianRational(0);
  out.terms_used = u_max + 1;
  if (q >= 1) {
    out.tail_bound = Rational(-1);  // certificate unavailable at this u_max
    out.certified = false;
    out.within_tolerance = false;
    return out;
  }
  Rational first_term = a_bound * mu_pow.re();  // mu_pow == mu^(u_max+1), real
  Rational u1(u_max + 1);
  for (int k = 0; k < deg; ++k) first_term *= u1;
  out.tail_bound = first_term / (1 - q);

  out.scale = std::max(discrete_norm_squared(n, s, hbar).l1_norm(),
                       discrete_norm_squared(m, s, hbar).l1_norm());
  out.certified = (sum - out.expected).l1_norm() <= out.tail_bound;
  out.within_tolerance = out.tail_bound <= rel_tol * out.scale;
  return out;
}

inline OrthogonalityResult to_result(const DiscreteOrthogonality& d) {
  OrthogonalityResult r;
  r.n = d.n;
  r.m = d.m;
  r.lhs = d.partial_sum.to_complex();
  r.rhs = d.expected.to_complex();
  r.abs_err = std::abs(r.lhs - r.rhs);
  r.rel_err = r.abs_err / std::max(rational_to_double(d.scale), 1e-300);
  r.tail_bound = d.tail_bound < 0 ? std::nan("") : rational_to_double(d.tail_bound);
  r.flagged = !(d.certified && d.within_tolerance);
  if (!d.certified) r.note = "tail certificate not met at this u_max";
  else if (!d.within_tolerance) r.note = "u_max too small for requested tolerance";
  return r;
}

// ---------------------------------------------------------------------------
// Continuous orthogonality (the analytic continuation to s = i cot phi):
//   integral P_n(s, ix/hbar - 1/2) P_m(s, ix/hbar - 1/2) rho0(x) dx
//     = delta_nm * K * (n!)^2 (hbar / 2 sin phi)^{2n+1},
//   rho0(x) = exp[(2 phi - pi) x/hbar] / cosh(pi x/hbar).
// The overall constant K is fixed once by the n = m = 0 integral (see
// resolve_continuous_constant); the resolved value is K = 2.
// ---------------------------------------------------------------------------

inline constexpr double kContinuousNormConstant = 2.0;

inline double continuous_weight(double t, double phi) {
  constexpr double kPi = 3.14159265358979323846;
  // exp((2 phi - pi) t) / cosh(pi t), arranged to avoid overflow.
  const double at = std::abs(t);
  return 2.0 * std::exp((2.0 * phi - kPi) * t - kPi * at) / (1.0 + std::exp(-2.0 * kPi * at));
}

/// Diagonal right-hand side with the resolved constant included.
inline double continuous_expected(int n, double phi, double hbar) {
  double nfact = 1.0;
  for (int k = 2; k <= n; ++k) nfact *= k;
  return kContinuousNormConstant * nfact * nfact *
         std::pow(hbar / (2.0 * std::sin(phi)), 2 * n + 1);
}

inline OrthogonalityResult continuous_orthogonality(int n, int m, double phi, double hbar,
                                                    const QuadratureConfig& cfg = {}) {
  constexpr double kPi = 3.14159265358979323846;
  if (!(phi > 0.0 && phi < kPi))
    throw std::domain_error("continuous_orthogonality: phi outside (0, pi)");
  const double decay = std::min(2.0 * phi, 2.0 * kPi - 2.0 * phi) / hbar;
  const double cutoff = (60.0 + 5.0 * (n + m)) / decay;

  const MultiPoly pn_u = to_u_form(cartan_explicit(n));
  const MultiPoly pm_u = to_u_form(cartan_explicit(m));
  const Complexd s_val(0.0, 1.0 / std::tan(phi));
  auto integrand = [&](double x) {
    const double t = x / hbar;
    MultiPoly::Bindings<Complexd> bind{
        {Sym::s, s_val}, {Sym::u, Complexd(-0.5, t)}, {Sym::hbar, Complexd(hbar, 0.0)}};
    Complexd pn = pn_u.eval_complex(bind);
    Complexd pm = pm_u.eval_complex(bind);
    return (pn * pm).real() * continuous_weight(t, phi);
  };

  const double scale = std::sqrt(std::abs(continuous_expected(n, phi, hbar)) *
                                 std::abs(continuous_expected(m, phi, hbar)));
  QuadratureResult q = integrate_real_line(integrand, decay, cutoff,
                                           cfg.rel_tol * scale + cfg.abs_tol, cfg);

  OrthogonalityResult r;
  r.n = n;
  r.m = m;
  r.lhs = Complexd(q.value, 0.0);
  r.rhs = Complexd(n == m ? continuous_expected(n, phi, hbar) : 0.0, 0.0);
  r.abs_err = std::abs(r.lhs - r.rhs);
  r.rel_err = std::abs(r.lhs - r.rhs) / scale;
  r.tail_bound = q.error_estimate;
  r.flagged = !q.converged;
  if (!q.converged) r.note = "quadrature did not reach requested tolerance";
  return r;
}

/// Measures the constant K in the n = m = 0 integral against the bare
/// right-hand side (hbar / 2 sin phi); this pins the normalization chain.
inline double resolve_continuous_constant(double phi, double hbar,
                                          const QuadratureConfig& cfg = {}) {
  constexpr double kPi = 3.14159265358979323846;
  const double decay = std::min(2.0 * phi, 2.0 * kPi - 2.0 * phi) / hbar;
  auto integrand = [&](double x) { return continuous_weight(x / hbar, phi); };
  QuadratureResult q = integrate_real_line(integrand, decay, 60.0 / decay, cfg.abs_tol + 1e-13, cfg);
  const double bare = hbar / (2.0 * std::sin(phi));
  return q.value / bare;
}

inline void write_orthogonality_csv(const std::string& path,
                                    const std::vector<OrthogonalityResult>& grid) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "n,m,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tail_bound,flagged\n";
  out.precision(17);
  for (const auto& r : grid) {
    out << r.n << ',' << r.m << ',' << r.lhs.real() << ',' << r.lhs.imag() << ','
        << r.rhs.real() << ',' << r.rhs.imag() << ',' << r.abs_err << ',' << r.rel_err << ','
        << r.tail_bound << ',' << (r.flagged ? 1 : 0) << '\n';
  }
}

}  // namespace ordpoly
