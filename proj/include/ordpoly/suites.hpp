#pragma once

#include <future>

#include "ordpoly/analysis.hpp"
#include "ordpoly/config.hpp"
#include "ordpoly/orthogonality.hpp"
#include "ordpoly/parser.hpp"
#include "ordpoly/report.hpp"
#include "ordpoly/su11.hpp"
#include "ordpoly/tables.hpp"

namespace ordpoly {

inline const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{"weyl", "cartan", "su11", "classical", "analysis"};
  return names;
}

inline VerificationReport run_weyl_suite(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "weyl";
  const MultiPoly s = sym_s();
  const MultiPoly i_hbar = GaussianRational::i() * MultiPoly::variable(Sym::hbar);

  rep.check_exact("hw-defining-relation", "[q,p] = i*hbar",
                  [&] { return commutator(q_hat(), p_hat()) == OpPoly(i_hbar); });

  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m)
      rep.check_exact("ordered-product-two-forms", "n=" + std::to_string(n) + " m=" + std::to_string(m),
                      [&] {
                        OrderedProductSpec spec{n, m, s};
                        return ordered_product(spec, OrderedForm::q_outer) ==
                               ordered_product(spec, OrderedForm::p_outer);
                      });

  rep.check_exact("ordered-product-standard", "s=1 -> q^n p^m", [&] {
    return ordered_product({3, 2, MultiPoly(1)}) == OpPoly::word(3, 2);
  });
  rep.check_exact("ordered-product-antistandard", "s=-1 -> p^m q^n", [&] {
    return ordered_product({2, 2, MultiPoly(-1)}) == OpPoly::word(0, 2) * OpPoly::word(2, 0);
  });

  const MultiPoly sp = MultiPoly::variable(Sym::y);
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      rep.check_exact("basis-change-expansion",
                      "n=" + std::to_string(n) + " m=" + std::to_string(m), [&] {
                        TSum sum = reorder({n, m, s}, sp);
                        OpPoly via;
                        for (const auto& [nm, coeff] : sum.terms())
                          via += ordered_product({nm.first, nm.second, sp}) * coeff;
                        return via == ordered_product({n, m, s});
                      });
      rep.check_exact("basis-change-round-trip",
                      "n=" + std::to_string(n) + " m=" + std::to_string(m), [&] {
                        TSum there = reorder({n, m, s}, sp);
                        TSum back(s);
                        for (const auto& [nm, coeff] : there.terms()) {
                          TSum piece = reorder({nm.first, nm.second, sp}, s);
                          for (const auto& [nm2, c2] : piece.terms())
                            back.add(nm2.first, nm2.second, coeff * c2);
                        }
                        return back.terms().size() == 1 &&
                               back.terms().count({n, m}) == 1 &&
                               back.terms().at({n, m}) == MultiPoly(1);
                      });
    }

  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      rep.check_exact("dagger-s-negation", "n=" + std::to_string(n) + " m=" + std::to_string(m),
                      [&] {
                        return ordered_product({n, m, s}).dagger() ==
                               ordered_product({n, m, -s});
                      });

  auto hermitian_at = [](const GaussianRational& sv, int n, int m) {
    OpPoly t = ordered_product({n, m, MultiPoly(sv)});
    return t.dagger() == t;
  };
  rep.check_exact("hermiticity", "s=0", [&] { return hermitian_at(GaussianRational(0), 2, 1); });
  rep.check_exact("hermiticity", "s=i", [&] { return hermitian_at(GaussianRational::i(), 2, 1); });
  rep.check_exact("hermiticity", "s=2i", [&] {
    return hermitian_at(GaussianRational(Rational(0), Rational(2)), 2, 1);
  });
  rep.check_exact("hermiticity-negative", "s=1 must fail",
                  [&] { return !hermitian_at(GaussianRational(1), 2, 1); });

  // structure constants against the brute-force bracket
  std::vector<MultiPoly> numeric_s{MultiPoly(0), MultiPoly(1), MultiPoly(-1),
                                   MultiPoly(GaussianRational::i()),
                                   MultiPoly(GaussianRational(Rational(1, 2)))};
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l)
      for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
          const std::string params = "k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                     " n=" + std::to_string(n) + " m=" + std::to_string(m);
          rep.check_exact("structure-constants", params, [&] {
            TSum comm = structure_bracket(k, l, n, m, s, BracketKind::commutator);
            TSum anti = structure_bracket(k, l, n, m, s, BracketKind::anticommutator);
            OpPoly a = ordered_product({k, l, s});
            OpPoly b = ordered_product({n, m, s});
            if (comm.expand() != commutator(a, b)) return false;
            if (anti.expand() != anticommutator(a, b)) return false;
            for (const MultiPoly& sv : numeric_s) {
              auto subst = [&sv](const MultiPoly& p) { return p.substitute(Sym::s, sv); };
              OpPoly an = a.map_coefficients(subst);
              OpPoly bn = b.map_coefficients(subst);
              OpPoly comm_n, anti_n;
              for (const auto& [nm, coeff] : comm.terms())
                comm_n += ordered_product({nm.first, nm.second, sv}) * subst(coeff);
              for (const auto& [nm, coeff] : anti.terms())
                anti_n += ordered_product({nm.first, nm.second, sv}) * subst(coeff);
              if (comm_n != commutator(an, bn)) return false;
              if (anti_n != anticommutator(an, bn)) return false;
            }
            return true;
          });
        }

  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k) {
      rep.check_exact("cartan-commutativity-shared-s",
                      "n=" + std::to_string(n) + " k=" + std::to_string(k), [&] {
                        return structure_bracket(n, n, k, k, s, BracketKind::commutator)
                            .terms()
                            .empty();
                      });
      rep.check_exact("cartan-commutativity-independent-s",
                      "n=" + std::to_string(n) + " k=" + std::to_string(k), [&] {
                        return commutator(ordered_product({n, n, s}),
                                          ordered_product({k, k, sp}))
                            .is_zero();
                      });
    }

  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      rep.check_exact("x-anticommutator", "n=" + std::to_string(n) + " m=" + std::to_string(m),
                      [&] {
                        const MultiPoly c = half_i_hbar();
                        OpPoly lhs = anticommutator(x_hat(), ordered_product({n, m, s}));
                        OpPoly rhs = ordered_product({n + 1, m + 1, s}) * GaussianRational(2);
                        rhs -= ordered_product({n, m, s}) *
                               (c * s * GaussianRational(2 * (m + n + 1)));
                        if (n >= 1 && m >= 1)
                          rhs -= ordered_product({n - 1, m - 1, s}) *
                                 (c * c * (MultiPoly(1) - s * s) * GaussianRational(2 * n * m));
                        return lhs == rhs;
                      });

  for (int n = 0; n <= 4; ++n)
    rep.check_exact("cartan-product-form", "n=" + std::to_string(n), [&] {
      return cartan_product_form(n, +1) == ordered_product({n, n, MultiPoly(1)}) &&
             cartan_product_form(n, -1) == ordered_product({n, n, MultiPoly(-1)});
    });

  return rep;
}

inline VerificationReport run_cartan_suite(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "cartan";
  const int route_max = std::min(cfg.n_max > 0 ? cfg.n_max : 8, 12);

  rep.check_exact("table-of-five", "n<=4 canonical rendering", [] {
    const char* expected[] = {kEq24Rendered0, kEq24Rendered1, kEq24Rendered2, kEq24Rendered3,
                              kEq24Rendered4};
    for (int n = 0; n <= 4; ++n)
      if (cartan_explicit(n).render() != expected[n]) return false;
    return true;
  });

  {
    auto rec = cartan_by_recursion(route_max);
    for (int n = 0; n <= route_max; ++n)
      rep.check_exact("route-equivalence", "n=" + std::to_string(n), [&] {
        MultiPoly plus = cartan_explicit(n, ExplicitForm::plus);
        return plus == cartan_explicit(n, ExplicitForm::minus) && plus == rec[n] &&
               plus == cartan_from_operator(n, sym_s());
      });
  }
  for (int n = 0; n <= std::min(route_max, 12); ++n)
    rep.check_exact("operator-route", "n=" + std::to_string(n),
                    [&] { return cartan_operator_route_verified(n, sym_s()); });

  for (int n = 0; n <= 12; ++n)
    rep.check_exact("parity", "n=" + std::to_string(n),
                    [&] { return parity_residual(n).is_zero(); });

  for (int n = 0; n <= 10; ++n) {
    rep.check_exact("derivative-relation", "n=" + std::to_string(n), [&] {
      for (int k = 0; k <= n + 2; ++k)
        if (!d_ds_residual(n, k).is_zero()) return false;
      return true;
    });
    rep.check_exact("shift-relation", "n=" + std::to_string(n), [&] {
      return eq11_residual(n, +1).is_zero() && eq11_residual(n, -1).is_zero();
    });
    rep.check_exact("shift-relation-standard-orders", "n=" + std::to_string(n), [&] {
      return eq12_residual(n, +1).is_zero() && eq12_residual(n, -1).is_zero();
    });
    rep.check_exact("shift-sum-difference", "n=" + std::to_string(n), [&] {
      return eq15_residual(n).is_zero() && eq16_residual(n).is_zero();
    });
    rep.check_exact("central-difference", "n=" + std::to_string(n), [&] {
      return eq17_residual(n).is_zero() && eq18_residual(n).is_zero();
    });
    rep.check_exact("hypergeometric-s", "n=" + std::to_string(n),
                    [&] { return ode_residual(n).is_zero(); });
  }

  for (int n = 0; n <= 8; ++n)
    rep.check_exact("taylor-expansion", "n=" + std::to_string(n),
                    [&] { return taylor_residual(n).is_zero(); });

  for (int n = 0; n <= 12; ++n)
    rep.check_exact("monic-homogeneous", "n=" + std::to_string(n), [&] {
      MultiPoly p = cartan_explicit(n);
      Monomial lead;
      lead[Sym::x] = n;
      if (!(p.degree(Sym::x) == n && p.coefficient(lead) == GaussianRational(1))) return false;
      return hbar_homogeneous(p, n);
    });

  for (int n = 0; n <= 8; ++n)
    rep.check_exact("reality-imaginary-s", "n=" + std::to_string(n), [&] {
      MultiPoly p = cartan_explicit(n)
                        .substitute(Sym::s, GaussianRational::i() * MultiPoly::variable(Sym::y))
                        .substitute(Sym::hbar, MultiPoly(2));
      for (const auto& [m, coeff] : p.terms())
        if (!coeff.is_real()) return false;
      return true;
    });

  return rep;
}

inline VerificationReport run_su11_suite(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "su11";
  const LadderTriple t = ladder_triple(sym_s());

  for (int n = 0; n <= 10; ++n)
    rep.check_exact("ladder-action", "n=" + std::to_string(n),
                    [&] { return ladder_action_residuals(t, n).all_zero(); });

  for (int k = 0; k <= 12; ++k)
    rep.check_exact("su11-brackets", "monomial degree " + std::to_string(k),
                    [&] { return su11_relations_hold_on(t, k); });

  for (int n = 0; n <= 10; ++n)
    rep.check_exact("casimir", "n=" + std::to_string(n),
                    [&] { return casimir_residual(t, n).is_zero(); });

  for (int n = 0; n <= 8; ++n) {
    rep.check_exact("u-shift-relations", "n=" + std::to_string(n), [&] {
      return eq26_residual(n).is_zero() && eq27_residual(n).is_zero();
    });
    rep.check_exact("u-difference-equation", "n=" + std::to_string(n) + " s symbolic",
                    [&] { return u_difference_residual(n, sym_s()).is_zero(); });
  }
  for (const SValue& sv : cfg.s_values) {
    if (sv.symbolic) continue;
    if (sv.value == GaussianRational(1)) {
      rep.check_exact("u-difference-equation", "s=1 rejected", [&] {
        try {
          u_difference_residual(2, MultiPoly(1));
          return false;
        } catch (const std::domain_error&) {
          return true;
        }
      });
      continue;
    }
    rep.check_exact("u-difference-equation", "n<=8 s=" + sv.value.render(), [&] {
      for (int n = 0; n <= 8; ++n)
        if (!u_difference_residual(n, MultiPoly(sv.value)).is_zero()) return false;
      return true;
    });
  }

  for (int k = 0; k <= 10; ++k) {
    rep.check_exact("e2-commutators", "monomial degree " + std::to_string(k),
                    [&] { return e2_commutator_residuals(k).all_zero(); });
    rep.check_exact("e2-contraction", "monomial degree " + std::to_string(k),
                    [&] { return e2_contraction_residuals(k).all_zero(); });
  }

  return rep;
}

inline VerificationReport run_classical_suite(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "classical";
  constexpr double kPi = 3.14159265358979323846;

  {
    auto fam = meixner_family(8);
    for (const auto& m : fam)
      rep.check_exact("meixner-difference-equation", "n=" + std::to_string(m.n),
                      [&] { return meixner_difference_residual(m).is_zero(); });
    for (const auto& m : fam) {
      if (m.n > 6) continue;
      rep.check_exact("meixner-normalization", "n=" + std::to_string(m.n),
                      [&] { return meixner_normalization_residual(m).is_zero(); });
    }
  }

  for (int n = 0; n <= 8; ++n)
    rep.check_exact("meixner-identification", "n=" + std::to_string(n),
                    [&] { return identify_residual(n).is_zero(); });
  for (int n = 1; n <= 8; ++n)
    rep.check_exact("recurrence-dictionary", "n=" + std::to_string(n),
                    [&] { return recurrence_dictionary_residual(n).is_zero(); });

  rep.check_exact("discrete-diagonal-n0", "s=-3 hbar=2: norm is exactly 2", [] {
    return discrete_norm_squared(0, Rational(-3), Rational(2)) == GaussianRational(2);
  });
  for (int n = 0; n <= 6; ++n)
    for (int m = n; m <= 6; ++m)
      rep.check_exact("discrete-orthogonality",
                      "s=-3 hbar=2 n=" + std::to_string(n) + " m=" + std::to_string(m), [&] {
                        DiscreteOrthogonality d =
                            discrete_orthogonality(n, m, Rational(-3), Rational(2), 200,
                                                   Rational(1, 10000000000LL));
                        return d.certified && d.within_tolerance;
                      });

  rep.check_numeric("mp-realness", "n<=6 grid", [&] {
    double worst = 0.0;
    for (int n = 0; n <= 6; ++n)
      for (double tt : {-3.0, -1.0, 0.0, 0.5, 2.0, 4.0})
        for (double phi : {kPi / 6, kPi / 3, kPi / 2, 2 * kPi / 3}) {
          Complexd val = meixner_pollaczek_value(n, phi, 0.5, tt);
          worst = std::max(worst, std::abs(val.imag()) / std::max(1.0, std::abs(val)));
        }
    return worst;
  }, 1e-12);

  for (int n = 0; n <= 6; ++n)
    rep.check_numeric("mp-bridge", "phi=pi/3 n=" + std::to_string(n), [&] {
      double worst = 0.0;
      for (double tt : {0.0, 1.0, -1.0, 2.0})
        worst = std::max(worst, mp_bridge_residual(n, kPi / 3, tt,
                                                   rational_to_double(cfg.hbar)));
      return worst;
    }, 1e-10);

  for (int n = 0; n <= 5; ++n)
    rep.check_numeric("hahn-chain", "phi=pi/2 n=" + std::to_string(n), [&] {
      double worst = 0.0;
      for (double tt : {0.0, 1.0, -1.0, 2.0, -2.0})
        worst = std::max(worst, hahn_chain_residual(n, tt, rational_to_double(cfg.hbar)));
      return worst;
    }, 1e-10);

  const double hbar_d = rational_to_double(cfg.hbar);
  for (double phi : cfg.phi_values) {
    rep.check_numeric("continuous-norm-constant", "phi=" + std::to_string(phi), [&] {
      return std::abs(resolve_continuous_constant(phi, hbar_d) - kContinuousNormConstant);
    }, 1e-9, "normalization chain fixed by the n=0 integral; constant = 2");
    for (int n = 0; n <= 6; ++n)
      for (int m = n; m <= 6; ++m)
        rep.check_numeric("continuous-orthogonality",
                          "phi=" + std::to_string(phi) + " n=" + std::to_string(n) +
                              " m=" + std::to_string(m),
                          [&] {
                            OrthogonalityResult r = continuous_orthogonality(n, m, phi, hbar_d);
                            if (r.flagged) return std::nan("");
                            return r.rel_err;
                          },
                          1e-8);
  }

  return rep;
}

inline VerificationReport run_analysis_suite(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "analysis";

  for (int n = 0; n <= 10; ++n) {
    rep.check_exact("pearson", "n=" + std::to_string(n),
                    [&] { return pearson_residual(n).is_zero(); });
    rep.check_exact("hypergeometric-y", "n=" + std::to_string(n),
                    [&] { return self_adjoint_residual(n).is_zero(); });
  }
  for (int n = 0; n <= 8; ++n) {
    rep.check_exact("rodrigues", "n=" + std::to_string(n),
                    [&] { return rodrigues_residual(n).is_zero(); });
    rep.check_exact("rodrigues-equation-route", "n=" + std::to_string(n), [&] {
      return yv_equation_residual(rodrigues_numerator(n), n).is_zero();
    });
  }

  {
    struct Case {
      int n;
      Complexd y0;
      double v, radius;
    };
    for (const Case& c : {Case{0, {0.0, 0.0}, 1.0, 0.4}, Case{1, {0.3, 0.0}, 1.0, 0.5},
                          Case{4, {-0.2, 0.0}, 2.0, 0.5}}) {
      rep.check_numeric("contour-integral",
                        "n=" + std::to_string(c.n) + " y0=" + std::to_string(c.y0.real()), [&] {
                          MultiPoly::Bindings<Complexd> bind{{Sym::y, c.y0},
                                                             {Sym::v, Complexd(c.v, 0.0)}};
                          Complexd expected = analysis_pn(c.n).eval_complex(bind);
                          Complexd got = contour_integral(c.n, c.y0, c.v, c.radius, 256);
                          return std::abs(got - expected);
                        },
                        1e-8);
      rep.check_numeric("contour-node-doubling",
                        "n=" + std::to_string(c.n) + " y0=" + std::to_string(c.y0.real()), [&] {
                          Complexd a = contour_integral(c.n, c.y0, c.v, c.radius, 256);
                          Complexd b = contour_integral(c.n, c.y0, c.v, c.radius, 512);
                          return std::abs(a - b);
                        },
                        1e-10);
    }
  }

  {
    struct Point {
      Rational y0, v;
    };
    for (const Point& pt : {Point{Rational(0), Rational(0)}, Point{Rational(3, 10), Rational(1)},
                            Point{Rational(-1, 2), Rational(2)}}) {
      rep.check_numeric("generating-function",
                        "y0=" + render_rational(pt.y0) + " v=" + render_rational(pt.v),
                        [&] { return generating_function_check(pt.y0, pt.v, 8).max_abs_err; },
                        1e-9, "series coefficients are exact rationals");
    }
  }

  {
    std::vector<double> grid;
    for (double yv = -8.0; yv <= 8.0 + 1e-9; yv += 0.25) grid.push_back(yv);
    for (int n = 0; n <= 5; ++n) {
      rep.check_exact("schrodinger-exact", "n=" + std::to_string(n),
                      [&] { return schrodinger_residual_symbolic(n).is_zero(); });
      for (double vv : cfg.v_values)
        rep.check_numeric("schrodinger-grid",
                          "n=" + std::to_string(n) + " v=" + std::to_string(vv),
                          [&] { return schrodinger_run(n, vv, grid).relative_residual(); },
                          1e-10);
      rep.check_exact("schrodinger-parity", "n=" + std::to_string(n), [&] {
        const WaveFunction psi = schrodinger_wavefunction(n);
        for (double yv : {0.25, 1.0, 3.5, 7.0}) {
          double left = psi.value(-yv, 0.0);
          double right = (n % 2 == 0) ? psi.value(yv, 0.0) : -psi.value(yv, 0.0);
          if (std::abs(left - right) > 1e-12 * std::max(1.0, std::abs(right))) return false;
        }
        return true;
      });
    }
  }

  return rep;
}

inline VerificationReport run_suite_by_name(const std::string& name, const RunConfig& cfg) {
  if (name == "weyl") return run_weyl_suite(cfg);
  if (name == "cartan") return run_cartan_suite(cfg);
  if (name == "su11") return run_su11_suite(cfg);
  if (name == "classical") return run_classical_suite(cfg);
  if (name == "analysis") return run_analysis_suite(cfg);
  throw ConfigError("unknown suite '" + name + "'");
}

/// Runs the named suites, up to cfg.jobs in flight at once.
inline std::vector<VerificationReport> run_suites(const std::vector<std::string>& names,
                                                  const RunConfig& cfg) {
  std::vector<VerificationReport> out(names.size());
  std::size_t next = 0;
  while (next < names.size()) {
    std::size_t batch = std::min<std::size_t>(cfg.jobs, names.size() - next);
    std::vector<std::future<VerificationReport>> futures;
    for (std::size_t j = 0; j < batch; ++j)
      futures.push_back(std::async(std::launch::async, [&names, &cfg, idx = next + j] {
        return run_suite_by_name(names[idx], cfg);
      }));
    for (std::size_t j = 0; j < batch; ++j) out[next + j] = futures[j].get();
    next += batch;
  }
  return out;
}

}  // namespace ordpoly
