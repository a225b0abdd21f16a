#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "ordpoly/multipoly.hpp"

namespace ordpoly {

/// Normal-ordered word q^q_exp p^p_exp.
struct Word {
  int q = 0;
  int p = 0;
  int total() const { return q + p; }
  friend bool operator==(const Word& a, const Word& b) { return a.q == b.q && a.p == b.p; }
};

/// Longer words first, then more q factors first: the rendering order.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.q > b.q;
  }
};

enum class Gen : char { q, p };
using LetterWord = std::vector<Gen>;

enum class RewriteStrategy { leftmost, rightmost };

/// Finite linear combination of normal-ordered words with MultiPoly
/// coefficients: an element of the Heisenberg-Weyl enveloping algebra.
/// Canonical form: every stored word has all q factors left of all p factors
/// and no zero coefficients. The identity operator is the empty word.
class OpPoly {
 public:
  using TermMap = std::map<Word, MultiPoly, WordOrder>;

  OpPoly() = default;
  explicit OpPoly(MultiPoly c) { add_term(Word{}, std::move(c)); }

  static OpPoly word(int q, int p, MultiPoly coeff = MultiPoly(1)) {
    OpPoly r;
    r.add_term(Word{q, p}, std::move(coeff));
    return r;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const OpPoly& a, const OpPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const OpPoly& a, const OpPoly& b) { return !(a == b); }

  OpPoly operator-() const {
    OpPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }
  OpPoly& operator+=(const OpPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  OpPoly& operator-=(const OpPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
  friend OpPoly operator-(OpPoly a, const OpPoly& b) { return a -= b; }

  friend OpPoly operator*(const MultiPoly& c, const OpPoly& a) {
    OpPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, wc] : a.terms_) r.add_term(w, c * wc);
    return r;
  }
  friend OpPoly operator*(const OpPoly& a, const MultiPoly& c) { return c * a; }

  /// Product with the p^b q^a reordering done by the closed form
  ///   p^b q^a = sum_k k! C(b,k) C(a,k) (-i*hbar)^k q^(a-k) p^(b-k),
  /// which is what the leftmost-innermost rewrite rule produces (the two are
  /// checked against each other in the test suite).
  friend OpPoly operator*(const OpPoly& a, const OpPoly& b) {
    const MultiPoly minus_i_hbar =
        MultiPoly::variable(Sym::hbar) * GaussianRational(Rational(0), Rational(-1));
    OpPoly r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        const MultiPoly cc = ca * cb;
        const int kmax = std::min(wa.p, wb.q);
        MultiPoly swap_factor(1);
        for (int k = 0; k <= kmax; ++k) {
          // running product builds k! C(b,k) C(a,k) (-i*hbar)^k incrementally
          if (k > 0)
            swap_factor = swap_factor * minus_i_hbar *
                          GaussianRational(Rational(wa.p - k + 1) * (wb.q - k + 1) / k);
          Word w{wa.q + wb.q - k, wa.p + wb.p - k};
          r.add_term(w, cc * swap_factor);
        }
      }
    return r;
  }
  OpPoly& operator*=(const OpPoly& o) { return *this = *this * o; }

  /// Hermitian conjugate: reverses each word and conjugates coefficients
  /// (formal variables treated as real).
  OpPoly dagger() const {
    OpPoly r;
    for (const auto& [w, c] : terms_) {
      // (q^a p^b)^dagger = p^b q^a, then reorder.
      r += OpPoly::word(0, w.p) * OpPoly::word(w.q, 0) * c.conjugate_coefficients();
    }
    return r;
  }

  /// Applies fn to every coefficient (e.g. to substitute a numeric s).
  template <typename Fn>
  OpPoly map_coefficients(Fn&& fn) const {
    OpPoly r;
    for (const auto& [w, c] : terms_) r.add_term(w, fn(c));
    return r;
  }

  void add_term(const Word& w, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  TermMap terms_;
};

inline OpPoly op_identity() { return OpPoly(MultiPoly(1)); }
inline OpPoly q_hat() { return OpPoly::word(1, 0); }
inline OpPoly p_hat() { return OpPoly::word(0, 1); }

/// c_hat = (i/2) hbar times the identity.
inline OpPoly c_hat() { return OpPoly(half_i_hbar()); }

/// x_hat = (qp + pq)/2 = qp - (i/2) hbar.
inline OpPoly x_hat() {
  OpPoly r = OpPoly::word(1, 1);
  r.add_term(Word{}, -half_i_hbar());
  return r;
}

inline OpPoly op_pow(const OpPoly& a, unsigned k) {
  OpPoly acc = op_identity(), base = a;
  while (k != 0) {
    if (k & 1u) acc = acc * base;
    base = base * base;
    k >>= 1u;
  }
  return acc;
}

inline OpPoly commutator(const OpPoly& a, const OpPoly& b) { return a * b - b * a; }
inline OpPoly anticommutator(const OpPoly& a, const OpPoly& b) { return a * b + b * a; }

namespace detail {
inline int find_inversion(const LetterWord& w, RewriteStrategy strategy) {
  if (strategy == RewriteStrategy::leftmost) {
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
      if (w[i] == Gen::p && w[i + 1] == Gen::q) return i;
  } else {
    for (int i = static_cast<int>(w.size()) - 2; i >= 0; --i)
      if (w[i] == Gen::p && w[i + 1] == Gen::q) return i;
  }
  return -1;
}
}  // namespace detail

/// Normal-orders a free word in q, p by repeated application of the rewrite
/// rule p q -> q p - i*hbar at the position chosen by the strategy. Each swap
/// strictly reduces the inversion count, so the worklist terminates.
inline OpPoly normal_order_word(const LetterWord& start, MultiPoly coeff = MultiPoly(1),
                                RewriteStrategy strategy = RewriteStrategy::leftmost) {
  const MultiPoly minus_i_hbar =
      MultiPoly::variable(Sym::hbar) * GaussianRational(Rational(0), Rational(-1));
  std::map<LetterWord, MultiPoly> active;
  active.emplace(start, std::move(coeff));
  OpPoly out;
  while (!active.empty()) {
    auto node = active.extract(active.begin());
    const LetterWord& w = node.key();
    const MultiPoly& c = node.mapped();
    const int pos = detail::find_inversion(w, strategy);
    if (pos < 0) {
      Word nw;
      for (Gen g : w) (g == Gen::q ? nw.q : nw.p) += 1;
      out.add_term(nw, c);
      continue;
    }
    LetterWord swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    LetterWord contracted = w;
    contracted.erase(contracted.begin() + pos, contracted.begin() + pos + 2);
    auto push = [&active](LetterWord lw, MultiPoly lc) {
      if (lc.is_zero()) return;
      auto [it, inserted] = active.try_emplace(std::move(lw), lc);
      if (!inserted) {
        it->second += lc;
        if (it->second.is_zero()) active.erase(it);
      }
    };
    push(std::move(swapped), c);
    push(std::move(contracted), c * minus_i_hbar);
  }
  return out;
}

inline LetterWord letters(std::initializer_list<Gen> gens) { return LetterWord(gens); }

}  // namespace ordpoly
