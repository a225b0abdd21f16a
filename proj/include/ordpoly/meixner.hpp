#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "ordpoly/cartan.hpp"
#include "ordpoly/diffop.hpp"

namespace ordpoly {

// The Meixner parameters gamma and mu occupy the y and v exponent slots of
// the shared variable universe; Meixner computations never mix them with the
// section where y, v denote lattice variables.
inline constexpr Sym kGamma = Sym::y;
inline constexpr Sym kMu = Sym::v;

/// Meixner polynomial m_n^(gamma,mu)(u) held with denominators cleared:
/// m_n = mu^-n * numerator, where the numerator satisfies
///   M_{n+1} = [gamma mu + (1+mu) n - (1-mu) u] M_n - n (n+gamma-1) mu M_{n-1}
/// with M_0 = 1. Degree in mu is at most n, so mu = 0 is rejected at
/// evaluation time rather than construction time.
struct MeixnerPoly {
  int n = 0;
  MultiPoly numerator;  // polynomial in (gamma, mu, u)
};

inline std::vector<MeixnerPoly> meixner_family(int n_max) {
  if (n_max < 0) throw std::invalid_argument("meixner_family: negative n_max");
  const MultiPoly g = MultiPoly::variable(kGamma);
  const MultiPoly mu = MultiPoly::variable(kMu);
  const MultiPoly u = MultiPoly::variable(Sym::u);
  std::vector<MeixnerPoly> out;
  out.push_back({0, MultiPoly(1)});
  if (n_max == 0) return out;
  out.push_back({1, g * mu - (MultiPoly(1) - mu) * u});
  for (int n = 1; n < n_max; ++n) {
    MultiPoly next = (g * mu + (MultiPoly(1) + mu) * GaussianRational(n) -
                      (MultiPoly(1) - mu) * u) *
                         out[n].numerator -
                     GaussianRational(n) * (MultiPoly(n) + g - MultiPoly(1)) * mu *
                         out[n - 1].numerator;
    out.push_back({n + 1, std::move(next)});
  }
  return out;
}

inline MeixnerPoly meixner(int n) {
  auto fam = meixner_family(n);
  return std::move(fam.back());
}

/// Complex evaluation of m_n^(gamma,mu)(u). mu must be nonzero.
inline Complexd meixner_value(const MeixnerPoly& m, Complexd gamma, Complexd mu, Complexd u) {
  if (mu == Complexd(0.0, 0.0)) throw std::domain_error("meixner_value: mu = 0");
  MultiPoly::Bindings<Complexd> bind{{kGamma, gamma}, {kMu, mu}, {Sym::u, u}};
  return m.numerator.eval_complex(bind) / std::pow(mu, Complexd(m.n));
}

inline GaussianRational meixner_value_exact(const MeixnerPoly& m, const GaussianRational& gamma,
                                            const GaussianRational& mu,
                                            const GaussianRational& u) {
  if (mu.is_zero()) throw std::domain_error("meixner_value_exact: mu = 0");
  MultiPoly::Bindings<GaussianRational> bind{{kGamma, gamma}, {kMu, mu}, {Sym::u, u}};
  return m.numerator.eval_exact(bind) / mu.pow(m.n);
}

/// Difference-equation residual (exact, symbolic gamma and mu):
///   { u Delta Nabla + [(mu-1) u + mu gamma] Delta + (1-mu) n } m_n = 0.
/// The mu^-n prefactor drops out, so the check runs on the numerator.
inline MultiPoly meixner_difference_residual(const MeixnerPoly& m) {
  const MultiPoly g = MultiPoly::variable(kGamma);
  const MultiPoly mu = MultiPoly::variable(kMu);
  const MultiPoly u = MultiPoly::variable(Sym::u);
  const DiffOp delta = forward_delta();
  const DiffOp nabla = backward_nabla();
  const MultiPoly& M = m.numerator;
  return u * delta.apply(nabla.apply(M)) + ((mu - MultiPoly(1)) * u + mu * g) * delta.apply(M) +
         (MultiPoly(1) - mu) * GaussianRational(m.n) * M;
}

/// Normalization Delta^n m_n = n! ((mu-1)/mu)^n, cleared of mu^-n:
/// Delta^n M_n - n! (mu-1)^n.
inline MultiPoly meixner_normalization_residual(const MeixnerPoly& m) {
  const MultiPoly mu = MultiPoly::variable(kMu);
  const DiffOp delta = forward_delta();
  MultiPoly lhs = m.numerator;
  for (int k = 0; k < m.n; ++k) lhs = delta.apply(lhs);
  return lhs - factorial(m.n) * (mu - MultiPoly(1)).pow(m.n);
}

/// The cleared Meixner specialization entering the identification:
///   c^n (s-1)^n M_n(1, (s+1)/(s-1), u)  ==  P_n(s, u)  for s != +-1.
inline MultiPoly meixner_identified_polynomial(int n) {
  const MultiPoly s = MultiPoly::variable(Sym::s);
  MeixnerPoly m = meixner(n);
  MultiPoly at_gamma_one = m.numerator.substitute(kGamma, MultiPoly(1));
  MultiPoly cleared = at_gamma_one.substitute_rational(kMu, s + MultiPoly(1),
                                                       s - MultiPoly(1), n);
  return half_i_hbar().pow(n) * cleared;
}

/// Exact residual of the identification P_n(s,u) = [c(s+1)]^n m_n(u).
/// Symbolic in s and hbar; the u-form of P_n comes from the x substitution.
inline MultiPoly identify_residual(int n) {
  return to_u_form(cartan_explicit(n)) - meixner_identified_polynomial(n);
}

/// Recurrence dictionary: the identified polynomials satisfy the Cartan
/// three-term recursion in the u variable; returns the residual for level n
/// (needs n >= 1).
inline MultiPoly recurrence_dictionary_residual(int n) {
  const MultiPoly s = MultiPoly::variable(Sym::s);
  const MultiPoly c = half_i_hbar();
  const MultiPoly u = MultiPoly::variable(Sym::u);
  const MultiPoly x_of_u = c * GaussianRational(2) * u + c;
  MultiPoly pn = meixner_identified_polynomial(n);
  MultiPoly pnext = meixner_identified_polynomial(n + 1);
  MultiPoly pprev = meixner_identified_polynomial(n - 1);
  MultiPoly rhs = (x_of_u + c * s * GaussianRational(2 * n + 1)) * pn +
                  c * c * (MultiPoly(1) - s * s) * GaussianRational(Rational(n) * n) * pprev;
  return pnext - rhs;
}

/// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1).
inline Rational pochhammer(const Rational& a, int n) {
  Rational acc(1);
  for (int j = 0; j < n; ++j) acc *= (a + j);
  return acc;
}

/// Meixner-Pollaczek polynomial P_n^lambda(phi, t) via the analytic
/// continuation mu = exp(-2 i phi), argument -lambda + i t:
///   P_n^lambda(phi,t) = e^{-i n phi} / n! * m_n^(2 lambda, mu)(-lambda + i t).
/// Real for real t; requires 0 < phi < pi and lambda > 0.
inline Complexd meixner_pollaczek_value(int n, double phi, double lambda, double t) {
  constexpr double kPi = 3.14159265358979323846;
  if (!(phi > 0.0 && phi < kPi))
    throw std::domain_error("meixner_pollaczek_value: phi outside (0, pi)");
  if (!(lambda > 0.0)) throw std::domain_error("meixner_pollaczek_value: lambda <= 0");
  const MeixnerPoly m = meixner(n);
  const Complexd mu = std::exp(Complexd(0.0, -2.0 * phi));
  const Complexd arg(-lambda, t);
  Complexd mv = meixner_value(m, Complexd(2.0 * lambda, 0.0), mu, arg);
  Complexd phase = std::exp(Complexd(0.0, -static_cast<double>(n) * phi));
  double nfact = 1.0;
  for (int k = 2; k <= n; ++k) nfact *= k;
  return phase / nfact * mv;
}

/// Numeric value of P_n(s, i x/hbar - 1/2) with s = i cot(phi), through the
/// exact u-form of P_n.
inline Complexd cartan_at_imaginary_argument(int n, double phi, double x_over_hbar,
                                             double hbar) {
  const MultiPoly pn_u = to_u_form(cartan_explicit(n));
  const Complexd s_val(0.0, 1.0 / std::tan(phi));
  const Complexd u_val(-0.5, x_over_hbar);
  MultiPoly::Bindings<Complexd> bind{
      {Sym::s, s_val}, {Sym::u, u_val}, {Sym::hbar, Complexd(hbar, 0.0)}};
  return pn_u.eval_complex(bind);
}

/// Bridge between the two-variable polynomials and Meixner-Pollaczek:
///   P_n(s, i x/hbar - 1/2) = n! (-hbar / 2 sin phi)^n P_n^{1/2}(phi, x/hbar).
/// Returns |lhs - rhs|.
inline double mp_bridge_residual(int n, double phi, double x_over_hbar, double hbar) {
  Complexd lhs = cartan_at_imaginary_argument(n, phi, x_over_hbar, hbar);
  double nfact = 1.0;
  for (int k = 2; k <= n; ++k) nfact *= k;
  double scale = std::pow(-hbar / (2.0 * std::sin(phi)), n);
  Complexd rhs = nfact * scale * meixner_pollaczek_value(n, phi, 0.5, x_over_hbar);
  return std::abs(lhs - rhs);
}

/// Weyl-ordering special case chains:
///   q_n^(0)(x, 1/2) = (1/2)_n P_n^{1/2}(pi/2, x)
///   P_n(0, i x/hbar - 1/2) = n! (-hbar/2)^n [(1/2)_n]^-1 q_n^(0)(x/hbar, 1/2).
/// Returns |lhs - rhs| with both sides evaluated through their own chains.
inline double hahn_chain_residual(int n, double x_over_hbar, double hbar) {
  constexpr double kPi = 3.14159265358979323846;
  Complexd lhs = cartan_at_imaginary_argument(n, kPi / 2.0, x_over_hbar, hbar);
  const double poch = rational_to_double(pochhammer(Rational(1, 2), n));
  Complexd q_n = poch * meixner_pollaczek_value(n, kPi / 2.0, 0.5, x_over_hbar);
  double nfact = 1.0;
  for (int k = 2; k <= n; ++k) nfact *= k;
  Complexd rhs = nfact * std::pow(-hbar / 2.0, n) / poch * q_n;
  return std::abs(lhs - rhs);
}

}  // namespace ordpoly
