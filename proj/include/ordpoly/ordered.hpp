#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ordpoly/weyl.hpp"

namespace ordpoly {

/// t^(s)_{n,m}: n factors of q and m factors of p interleaved by the ordering
/// parameter s (s = 1 standard, s = 0 Weyl-symmetric, s = -1 antistandard).
struct OrderedProductSpec {
  int n = 0;
  int m = 0;
  MultiPoly s;
};

enum class OrderedForm { q_outer, p_outer };

inline MultiPoly sym_s() { return MultiPoly::variable(Sym::s); }

/// Expands the s-ordered product into normal order. The two forms place the
/// binomial sum over the q factors or the p factors; they agree as OpPoly.
inline OpPoly ordered_product(const OrderedProductSpec& spec,
                              OrderedForm form = OrderedForm::q_outer) {
  if (spec.n < 0 || spec.m < 0) throw std::invalid_argument("ordered_product: negative index");
  const MultiPoly one_plus = MultiPoly(1) + spec.s;
  const MultiPoly one_minus = MultiPoly(1) - spec.s;
  OpPoly out;
  if (form == OrderedForm::q_outer) {
    const GaussianRational norm(Rational(1) / pow2_rational(spec.n));
    for (int j = 0; j <= spec.n; ++j) {
      MultiPoly coeff = binomial(spec.n, j) * norm * one_plus.pow(j) * one_minus.pow(spec.n - j);
      out += OpPoly::word(j, 0) * OpPoly::word(0, spec.m) * OpPoly::word(spec.n - j, 0) * coeff;
    }
  } else {
    const GaussianRational norm(Rational(1) / pow2_rational(spec.m));
    for (int k = 0; k <= spec.m; ++k) {
      MultiPoly coeff = binomial(spec.m, k) * norm * one_minus.pow(k) * one_plus.pow(spec.m - k);
      out += OpPoly::word(0, k) * OpPoly::word(spec.n, 0) * OpPoly::word(0, spec.m - k) * coeff;
    }
  }
  return out;
}

/// Linear combination of ordered products t^(s)_{n,m} with a shared s.
class TSum {
 public:
  using TermMap = std::map<std::pair<int, int>, MultiPoly>;

  TSum() = default;
  explicit TSum(MultiPoly s) : s_(std::move(s)) {}

  const MultiPoly& ordering() const { return s_; }
  const TermMap& terms() const { return terms_; }

  void add(int n, int m, const MultiPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({n, m}, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Expansion into normal order via the defining sums.
  OpPoly expand() const {
    OpPoly out;
    for (const auto& [nm, coeff] : terms_)
      out += ordered_product({nm.first, nm.second, s_}) * coeff;
    return out;
  }

 private:
  MultiPoly s_;
  TermMap terms_;
};

/// Change of ordering basis:
///   t^(s)_{n,m} = sum_k 2^-k C(n,k) C(m,k) k! [i hbar (s - s')]^k t^(s')_{n-k,m-k}.
inline TSum reorder(const OrderedProductSpec& spec, const MultiPoly& s_new) {
  TSum out(s_new);
  const MultiPoly i_hbar_ds =
      MultiPoly::variable(Sym::hbar) * GaussianRational::i() * (spec.s - s_new);
  MultiPoly power(1);
  for (int k = 0; k <= std::min(spec.n, spec.m); ++k) {
    if (k > 0) power = power * i_hbar_ds;
    GaussianRational scale = binomial(spec.n, k) * binomial(spec.m, k) * factorial(k) /
                             GaussianRational(pow2_rational(k));
    out.add(spec.n - k, spec.m - k, power * scale);
  }
  return out;
}

enum class BracketKind { commutator, anticommutator };

/// W-infinity structure constants: the bracket of t^(s)_{k,l} with t^(s)_{n,m}
/// expressed back in the same s-basis,
///   [t_{kl}, t_{nm}]_± = sum_j (i^j/j!) [sum_r C(j,r) f^±_{srj} a_{nmkl,rj}]
///                        t_{n+k-j, m+l-j},
/// with f^-_{srj} = (s-)^r (-s+)^(j-r) - (s-)^(j-r) (-s+)^r for the
/// commutator, f^+ its symmetrized variant for the anticommutator, and
/// s± = hbar (1 ± s)/2. Terms whose a-factor has a negative factorial
/// argument are absent; that rule also caps j at min(n,l) + min(m,k).
inline TSum structure_bracket(int k, int l, int n, int m, const MultiPoly& s,
                              BracketKind kind) {
  if (k < 0 || l < 0 || n < 0 || m < 0)
    throw std::invalid_argument("structure_bracket: negative index");
  TSum out(s);
  const MultiPoly hbar = MultiPoly::variable(Sym::hbar);
  const GaussianRational half(Rational(1, 2));
  const MultiPoly s_minus = hbar * (MultiPoly(1) - s) * half;
  const MultiPoly neg_s_plus = hbar * (MultiPoly(1) + s) * (-half);

  const int r_max = std::min(m, k);
  const int j_max = std::min(n + r_max, l + r_max);

  std::vector<MultiPoly> sm_pow{MultiPoly(1)}, nsp_pow{MultiPoly(1)};
  for (int j = 1; j <= j_max; ++j) {
    sm_pow.push_back(sm_pow.back() * s_minus);
    nsp_pow.push_back(nsp_pow.back() * neg_s_plus);
  }

  auto a_factor = [&](int r, int j) -> GaussianRational {
    // n! m! k! l! / [(n+r-j)! (m-r)! (k-r)! (l+r-j)!]
    return factorial(n) * factorial(m) * factorial(k) * factorial(l) /
           (factorial(n + r - j) * factorial(m - r) * factorial(k - r) * factorial(l + r - j));
  };

  for (int j = 0; j <= j_max; ++j) {
    MultiPoly inner;
    for (int r = 0; r <= std::min(j, r_max); ++r) {
      if (n + r - j < 0 || l + r - j < 0) continue;
      MultiPoly f = sm_pow[r] * nsp_pow[j - r];
      MultiPoly f_swapped = sm_pow[j - r] * nsp_pow[r];
      if (kind == BracketKind::commutator) f -= f_swapped;
      else f += f_swapped;
      inner += f * (binomial(j, r) * a_factor(r, j));
    }
    if (inner.is_zero()) continue;
    const GaussianRational i_pow_over_fact = GaussianRational::i().pow(j) / factorial(j);
    out.add(n + k - j, m + l - j, inner * i_pow_over_fact);
  }
  return out;
}

/// Product form of the Cartan generators:
///   t^(+1)_{n,n} = prod_{j=1..n} [x_hat + (2j-1) c_hat],
///   t^(-1)_{n,n} = prod_{j=1..n} [x_hat - (2j-1) c_hat].
inline OpPoly cartan_product_form(int n, int sign) {
  if (n < 0) throw std::invalid_argument("cartan_product_form: negative n");
  if (sign != 1 && sign != -1) throw std::invalid_argument("cartan_product_form: sign must be +-1");
  OpPoly acc = op_identity();
  for (int j = 1; j <= n; ++j) {
    OpPoly factor = x_hat();
    factor += c_hat() * MultiPoly(GaussianRational(sign * (2 * j - 1)));
    acc = acc * factor;
  }
  return acc;
}

}  // namespace ordpoly
