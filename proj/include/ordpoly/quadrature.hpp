#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace ordpoly {

struct QuadratureConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_depth = 48;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

namespace detail {
inline void adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                 double fa, double fm, double fb, double whole, double tol,
                                 int depth, const QuadratureConfig& cfg, QuadratureResult& out) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth >= cfg.max_depth) {
    out.value += left + right + delta / 15.0;
    out.error_estimate += std::abs(delta) / 15.0;
    out.converged = false;
    return;
  }
  if (std::abs(delta) <= 15.0 * tol) {
    out.value += left + right + delta / 15.0;
    out.error_estimate += std::abs(delta) / 15.0;
    return;
  }
  adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, cfg, out);
  adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, cfg, out);
}
}  // namespace detail

inline QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a,
                                         double b, double tol, const QuadratureConfig& cfg = {}) {
  QuadratureResult out;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0, cfg, out);
  return out;
}

/// Integral of f over the whole real line for integrands decaying at least
/// like exp(-decay_rate |x|): maps x = scale * atanh(w) and integrates the
/// smooth w-image adaptively over (-w0, w0), where x = +-cutoff maps to -+w0.
/// The dropped tails are covered by the caller's cutoff choice.
inline QuadratureResult integrate_real_line(const std::function<double(double)>& f,
                                            double decay_rate, double cutoff, double tol,
                                            const QuadratureConfig& cfg = {}) {
  if (!(decay_rate > 0.0)) throw std::invalid_argument("integrate_real_line: decay_rate <= 0");
  // decay exponent * scale = 8: the w-image vanishes like (1-w)^3 at the
  // endpoints and tanh(cutoff/scale) stays representably below 1.
  const double scale = 8.0 / decay_rate;
  const double w0 = std::tanh(cutoff / scale);
  auto g = [&f, scale](double w) {
    if (1.0 - std::abs(w) < 1e-15) return 0.0;
    const double x = scale * std::atanh(w);
    const double jac = scale / ((1.0 - w) * (1.0 + w));
    return f(x) * jac;
  };
  return adaptive_simpson(g, -w0, w0, tol, cfg);
}

}  // namespace ordpoly
