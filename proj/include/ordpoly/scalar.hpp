#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ordpoly {

using Rational = boost::multiprecision::cpp_rational;
using Complexd = std::complex<double>;

inline std::string render_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

inline double rational_to_double(const Rational& r) {
  return r.convert_to<double>();
}

/// Gaussian rational a + b*i with arbitrary-precision rational a, b.
/// The exact coefficient field for everything symbolic in this library.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}                 // NOLINT(runtime/explicit)
  GaussianRational(long long v) : re_(v) {}           // NOLINT(runtime/explicit)
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
  static GaussianRational from_ratio(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return GaussianRational(Rational(num) / den);
  }
  static GaussianRational imaginary(Rational b) {
    return GaussianRational(Rational(0), std::move(b));
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational d = o.re_ * o.re_ + o.im_ * o.im_;
    if (d == 0) throw std::domain_error("division by zero GaussianRational");
    Rational r = (re_ * o.re_ + im_ * o.im_) / d;
    Rational i = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational pow(unsigned k) const {
    GaussianRational acc(1), base(*this);
    while (k != 0) {
      if (k & 1u) acc *= base;
      base *= base;
      k >>= 1u;
    }
    return acc;
  }

  /// |re| + |im|; a cheap exact upper bound on 2^(1/2)*|z| used in tail certificates.
  Rational l1_norm() const { return abs(re_) + abs(im_); }

  Complexd to_complex() const { return {rational_to_double(re_), rational_to_double(im_)}; }

  /// "a/b", "c/d*i", or "a/b+c/d*i". Unit imaginary parts render as bare "i".
  std::string render() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += render_rational(re_);
    if (im_ != 0) {
      if (!out.empty()) out += im_ > 0 ? "+" : "-";
      else if (im_ < 0) out += "-";
      Rational mag = abs(im_);
      if (mag == 1) out += "i";
      else out += render_rational(mag) + "*i";
    }
    return out;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussianRational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Rational acc(1);
  for (int k = 2; k <= n; ++k) acc *= k;
  return GaussianRational(acc);
}

inline Rational pow2_rational(int k) {
  Rational r(1);
  for (int j = 0; j < k; ++j) r *= 2;
  return r;
}

inline GaussianRational binomial(int n, int k) {
  if (k < 0 || k > n) return GaussianRational(0);
  Rational acc(1);
  for (int j = 0; j < k; ++j) {
    acc *= (n - j);
    acc /= (j + 1);
  }
  return GaussianRational(acc);
}

}  // namespace ordpoly
