#pragma once

#include <stdexcept>
#include <vector>

#include "ordpoly/scalar.hpp"

namespace ordpoly {

/// Truncated power series in one expansion variable with exact GaussianRational
/// coefficients. All arithmetic is exact through the truncation order.
class RationalSeries {
 public:
  explicit RationalSeries(int order) : c_(order + 1) {
    if (order < 0) throw std::invalid_argument("series order < 0");
  }
  RationalSeries(int order, std::vector<GaussianRational> coeffs) : RationalSeries(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = coeffs[k];
  }

  static RationalSeries constant(int order, GaussianRational value) {
    RationalSeries s(order);
    s.c_[0] = std::move(value);
    return s;
  }
  /// The expansion variable itself.
  static RationalSeries identity(int order) {
    RationalSeries s(order);
    if (order >= 1) s.c_[1] = GaussianRational(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const GaussianRational& operator[](int k) const { return c_.at(k); }
  GaussianRational& operator[](int k) { return c_.at(k); }

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    check_orders(a, b);
    RationalSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    check_orders(a, b);
    RationalSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    check_orders(a, b);
    RationalSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= a.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend RationalSeries operator*(const GaussianRational& s, const RationalSeries& a) {
    RationalSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.c_[k] = s * a.c_[k];
    return r;
  }

  /// Multiplicative inverse; requires a nonzero constant term.
  RationalSeries reciprocal() const {
    if (c_[0].is_zero()) throw std::domain_error("series reciprocal: zero constant term");
    RationalSeries r(order());
    r.c_[0] = GaussianRational(1) / c_[0];
    for (int k = 1; k <= order(); ++k) {
      GaussianRational acc;
      for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -(acc / c_[0]);
    }
    return r;
  }

  friend RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
    return a * b.reciprocal();
  }

  RationalSeries derivative() const {
    RationalSeries r(order());
    for (int k = 1; k <= order(); ++k) r.c_[k - 1] = GaussianRational(k) * c_[k];
    return r;
  }

  /// Antiderivative with zero constant term. The top coefficient of the
  /// integrand does not fit in the truncation and must be discarded by the
  /// caller's choice of order.
  RationalSeries integral() const {
    RationalSeries r(order());
    for (int k = 0; k < order(); ++k)
      r.c_[k + 1] = c_[k] / GaussianRational(k + 1);
    return r;
  }

  /// Square root with value 1 at the origin (principal branch); requires
  /// constant term exactly 1. Coefficients solve s*s = this recursively.
  RationalSeries sqrt_one() const {
    if (!(c_[0] == GaussianRational(1)))
      throw std::domain_error("series sqrt_one: constant term must be 1");
    RationalSeries r(order());
    r.c_[0] = GaussianRational(1);
    const GaussianRational two(2);
    for (int k = 1; k <= order(); ++k) {
      GaussianRational acc;
      for (int j = 1; j < k; ++j) acc += r.c_[j] * r.c_[k - j];
      r.c_[k] = (c_[k] - acc) / two;
    }
    return r;
  }

  /// exp of a series with zero constant term, via E' = f' E.
  RationalSeries exp_zero() const {
    if (!c_[0].is_zero()) throw std::domain_error("series exp_zero: constant term must be 0");
    RationalSeries r(order());
    r.c_[0] = GaussianRational(1);
    // k r_k = sum_{j=1..k} j f_j r_{k-j}
    for (int k = 1; k <= order(); ++k) {
      GaussianRational acc;
      for (int j = 1; j <= k; ++j) acc += GaussianRational(j) * c_[j] * r.c_[k - j];
      r.c_[k] = acc / GaussianRational(k);
    }
    return r;
  }

  bool operator==(const RationalSeries& o) const { return c_ == o.c_; }

 private:
  static void check_orders(const RationalSeries& a, const RationalSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  }
  std::vector<GaussianRational> c_;
};

}  // namespace ordpoly
