#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opair/chain/checks.hpp"
#include "opair/cli/report.hpp"
#include "opair/correspondences/chain_maps.hpp"
#include "opair/diagonal/diagonal.hpp"
#include "opair/diagonal/transport.hpp"
#include "opair/families/box_realization.hpp"
#include "opair/families/family.hpp"
#include "opair/operad/generators.hpp"
#include "opair/operad/omega.hpp"
#include "opair/operad/pair.hpp"

namespace opair::cli {

using families::Family;

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"d2",       "iso",      "chainmaps", "diagram", "pair-axioms",
                                              "diagonal", "coassoc", "homotopy",  "posets"};
  return names;
}

// Default --max-n per suite; the whole set runs in well under two minutes.
inline std::size_t default_max_n(const std::string& suite) {
  static const std::map<std::string, std::size_t> d{
      {"d2", 6},       {"iso", 6},      {"chainmaps", 5}, {"diagram", 5}, {"pair-axioms", 5},
      {"diagonal", 5}, {"coassoc", 4}, {"homotopy", 3},  {"posets", 5}};
  return d.at(suite);
}

namespace detail {

inline std::map<std::string, std::string> at_n(std::size_t n) { return {{"n", std::to_string(n)}}; }

inline void absorb(InstanceResult& r, const chain::CheckReport& c, const std::string& prefix = "") {
  if (c.pass) return;
  r.pass = false;
  for (const auto& w : c.counterexamples) r.counterexamples.push_back(prefix + w);
}

inline std::string family_instance(Family f, std::size_t n) {
  return families::to_string(f) + "(" + std::to_string(n) + ")";
}

}  // namespace detail

// d² = 0 on every family complex, and on Ω and T.
inline VerificationReport suite_d2(std::size_t max_n) {
  VerificationReport rep{"d2", {}};
  for (auto f : {Family::K, Family::J, Family::Cube, Family::Freehedron}) {
    const auto range = families::supported_range(f);
    // K(n+1) and J(n+1) have dimensions n - 1 and n.
    const std::size_t hi = std::min(range.max, f == Family::K ? max_n + 1 : max_n);
    for (std::size_t n = std::max<std::size_t>(range.min, 1); n <= hi; ++n)
      rep.run(detail::family_instance(f, n), detail::at_n(n), [&](InstanceResult& r) {
        detail::absorb(r, chain::check_d_squared(families::complex(f, n)));
      });
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    rep.run("Omega(" + std::to_string(n) + ")", detail::at_n(n), [&](InstanceResult& r) {
      detail::absorb(r, chain::check_d_squared(operad::omega_complex(n)));
    });
    rep.run("T(" + std::to_string(n) + ")", detail::at_n(n), [&](InstanceResult& r) {
      detail::absorb(r, chain::check_d_squared(operad::t_complex(n)));
    });
  }
  return rep;
}

// I: C_*(F_n) ≅ T(aⁿ, m; m) as chain complexes, with both round trips.
inline VerificationReport suite_iso(std::size_t max_n) {
  VerificationReport rep{"iso", {}};
  for (std::size_t n = 0; n <= max_n; ++n) {
    rep.run("I on F(" + std::to_string(n) + ")", detail::at_n(n), [&](InstanceResult& r) {
      const auto f = chain::share(families::complex(Family::Freehedron, n));
      const auto t = chain::share(operad::t_complex(n));
      if (f->ranks() != t->ranks()) {
        r.pass = false;
        r.counterexamples.push_back("rank vectors differ");
        return;
      }
      const auto iso = correspondences::bijection_map(f, t);
      const auto inv = correspondences::inverse_bijection_map(t, f);
      detail::absorb(r, chain::check_chain_map(iso), "I: ");
      detail::absorb(r, chain::check_chain_map(inv), "I^-1: ");
      if (!(chain::compose(inv, iso) == chain::LinearMap::identity(f))) {
        r.pass = false;
        r.counterexamples.push_back("I^-1 ∘ I is not the identity");
      }
      if (!(chain::compose(iso, inv) == chain::LinearMap::identity(t))) {
        r.pass = false;
        r.counterexamples.push_back("I ∘ I^-1 is not the identity");
      }
    });
  }
  return rep;
}

// The maps of the projection diagram are chain maps; π is onto the basis.
inline VerificationReport suite_chainmaps(std::size_t max_n) {
  VerificationReport rep{"chainmaps", {}};
  for (std::size_t n = 1; n <= max_n + 1; ++n) {
    rep.run("word map Omega(" + std::to_string(n) + ") -> Cube(" + std::to_string(n - 1) + ")", detail::at_n(n),
            [&](InstanceResult& r) {
              const auto omega = chain::share(operad::omega_complex(n));
              const auto cube = chain::share(families::complex(Family::Cube, n - 1));
              const auto w = correspondences::word_chain_map(omega, cube);
              detail::absorb(r, chain::check_chain_map(w));
              // Bijective on bases: every column has one entry and all rows are hit.
              std::set<std::pair<std::size_t, std::uint32_t>> hit;
              for (std::size_t k = 0; k < omega->degrees(); ++k)
                for (std::size_t i = 0; i < omega->rank(k); ++i) {
                  const auto& col = w.block(k).column(i);
                  if (col.size() != 1) r.counterexamples.push_back("not a basis map at " + omega->label(k, i));
                  else hit.insert({k, col.front()});
                }
              if (hit.size() != cube->total_rank() || omega->total_rank() != cube->total_rank()) {
                r.pass = false;
                r.counterexamples.push_back("word map is not a bijection on bases");
              }
              if (!r.counterexamples.empty()) r.pass = false;
            });
  }
  for (std::size_t n = 2; n <= max_n; ++n) {
    rep.run("projection pi J(" + std::to_string(n) + ") -> F(" + std::to_string(n - 1) + ")", detail::at_n(n),
            [&](InstanceResult& r) {
              const auto j = chain::share(families::complex(Family::J, n));
              const auto f = chain::share(families::complex(Family::Freehedron, n - 1));
              const auto pi = correspondences::projection_map(j, f);
              detail::absorb(r, chain::check_chain_map(pi));
              std::set<std::pair<std::size_t, std::uint32_t>> hit;
              for (std::size_t k = 0; k < j->degrees(); ++k)
                for (std::size_t i = 0; i < j->rank(k); ++i)
                  for (auto row : pi.block(k).column(i)) hit.insert({k, row});
              if (hit.size() != f->total_rank()) {
                r.pass = false;
                r.counterexamples.push_back("pi misses " + std::to_string(f->total_rank() - hit.size()) + " faces");
              }
              // π on vertices by the prose rule agrees with the quotient.
              for (const auto& v : j->labels(0)) {
                const auto t = combinat::PaintedTree::parse(v);
                if (correspondences::projection_pi(t) != *operad::quotient_multipl(t)) {
                  r.pass = false;
                  r.counterexamples.push_back("vertex rule disagrees at " + v);
                }
              }
            });
    rep.run("forget J(" + std::to_string(n) + ") -> K(" + std::to_string(n) + ")", detail::at_n(n),
            [&](InstanceResult& r) {
              const auto j = chain::share(families::complex(Family::J, n));
              const auto k = chain::share(families::complex(Family::K, n));
              detail::absorb(r, chain::check_chain_map(correspondences::forget_map(j, k)));
            });
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    rep.run("F(" + std::to_string(n) + ") -> Cube(" + std::to_string(n - 1) + ") two ways", detail::at_n(n),
            [&](InstanceResult& r) {
              const auto f = chain::share(families::complex(Family::Freehedron, n));
              const auto t = chain::share(operad::t_complex(n));
              const auto omega = chain::share(operad::omega_complex(n));
              const auto cube = chain::share(families::complex(Family::Cube, n - 1));
              const auto direct = correspondences::freehedron_cube_map(f, cube);
              const auto via = chain::compose(correspondences::word_chain_map(omega, cube),
                                              chain::compose(correspondences::eps_map(t, omega),
                                                             correspondences::bijection_map(f, t)));
              detail::absorb(r, chain::check_chain_map(direct));
              if (!(direct == via)) {
                r.pass = false;
                r.counterexamples.push_back("collapse differs from word ∘ ε ∘ I");
              }
            });
  }
  return rep;
}

inline VerificationReport suite_diagram(std::size_t max_n) {
  VerificationReport rep{"diagram", {}};
  for (std::size_t n = 2; n <= max_n; ++n) {
    rep.run("square J(" + std::to_string(n) + ")", detail::at_n(n), [&](InstanceResult& r) {
      const auto s = correspondences::check_projection_square(n);
      detail::absorb(r, s.forget, "J->K: ");
      detail::absorb(r, s.quotient_assoc, "K->Omega: ");
      detail::absorb(r, s.word, "Omega->Cube: ");
      detail::absorb(r, s.projection, "J->F: ");
      detail::absorb(r, s.bijection, "F->T: ");
      detail::absorb(r, s.eps, "T->Omega: ");
      detail::absorb(r, s.commutes, "square: ");
    });
  }
  return rep;
}

// Chain-map, counit, coassociativity and bimodule checks for (Ω, T), plus the
// generator formulas against polytope boundaries.
inline VerificationReport suite_pair_axioms(std::size_t max_n) {
  using combinat::Composite;
  VerificationReport rep{"pair-axioms", {}};
  for (std::size_t n = 0; n <= max_n; ++n) {
    const auto at = detail::at_n(n);
    const std::string sn = std::to_string(n);
    rep.run("eps chain map, arity " + sn, at, [&](InstanceResult& r) {
      const auto t = chain::share(operad::t_complex(n));
      const auto omega = chain::share(operad::omega_complex(n));
      detail::absorb(r, chain::check_chain_map(correspondences::eps_map(t, omega)));
    });
    rep.run("c chain map, arity " + sn, at, [&](InstanceResult& r) {
      const auto t = chain::share(operad::t_complex(n));
      const auto tt = chain::share(operad::composite_complex(n, 2));
      const auto c = chain::LinearMap::from_labels(t, tt, 0, [](const std::string& s) {
        std::vector<std::string> out;
        for (const auto& x : operad::comult_c(Composite::parse(s))) out.push_back(x.str());
        return out;
      });
      detail::absorb(r, chain::check_chain_map(c));
    });
    rep.run("counit laws and coassociativity, arity " + sn, at, [&](InstanceResult& r) {
      for (const auto& x : operad::enumerate_triples(n)) {
        const auto c = operad::comult_c(x);
        const operad::TElement self{x};
        if (operad::counit_at(c, 0) != self) r.counterexamples.push_back("(eps x id)c at " + x.str());
        if (operad::counit_at(c, 1) != self) r.counterexamples.push_back("(id x eps)c at " + x.str());
        if (operad::comult_at(c, 0) != operad::comult_at(c, 1)) r.counterexamples.push_back("coassociativity at " + x.str());
      }
      r.pass = r.counterexamples.empty();
    });
    rep.run("bimodule axioms, total arity " + sn, at, [&](InstanceResult& r) {
      auto fail = [&](const std::string& what) { r.counterexamples.push_back(what); };
      for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = 0; a + b <= n; ++b) {
          const std::size_t c = n - a - b;
          for (const auto& w1 : operad::enumerate_forests(a))
            for (const auto& w2 : operad::enumerate_forests(b))
              for (const auto& x : operad::enumerate_triples(c)) {
                const auto w12 = operad::compose_m(w1, w2);
                if (operad::act_left(w12, x) != operad::act_left(w1, operad::act_left(w2, x)))
                  fail("left associativity at " + w1.str() + ", " + w2.str() + ", " + x.str());
                if (operad::act_right(x, w12) != operad::act_right(operad::act_right(x, w1), w2))
                  fail("right associativity at " + x.str());
                if (operad::act_right(operad::act_left(w1, x), w2) != operad::act_left(w1, operad::act_right(x, w2)))
                  fail("left/right commutation at " + x.str());
              }
        }
      for (std::size_t a = 0; a <= n; ++a) {
        for (const auto& w : operad::enumerate_forests(a))
          for (const auto& x : operad::enumerate_triples(n - a)) {
            // Leibniz rule for both actions.
            operad::TElement lhs_l = operad::d_T(operad::act_left(w, x)), rhs_l;
            for (const auto& dw : operad::d_omega(w)) rhs_l.toggle(operad::act_left(dw, x));
            for (const auto& dx : operad::d_T(x)) rhs_l.toggle(operad::act_left(w, dx));
            if (lhs_l != rhs_l) fail("left Leibniz at " + w.str() + ", " + x.str());
            operad::TElement lhs_r = operad::d_T(operad::act_right(x, w)), rhs_r;
            for (const auto& dw : operad::d_omega(w)) rhs_r.toggle(operad::act_right(x, dw));
            for (const auto& dx : operad::d_T(x)) rhs_r.toggle(operad::act_right(dx, w));
            if (lhs_r != rhs_r) fail("right Leibniz at " + x.str() + ", " + w.str());
            // c and ε are bimodule maps.
            operad::TElement cl, cr;
            for (const auto& y : operad::comult_c(x)) {
              cl.toggle(operad::act_left(w, y));
              cr.toggle(operad::act_right(y, w));
            }
            if (operad::comult_c(operad::act_left(w, x)) != cl) fail("c not left-linear at " + x.str());
            if (operad::comult_c(operad::act_right(x, w)) != cr) fail("c not right-linear at " + x.str());
            const auto e = operad::counit_eps(x);
            const auto el = operad::counit_eps(operad::act_left(w, x));
            const auto er = operad::counit_eps(operad::act_right(x, w));
            if (el != (e ? std::optional{operad::compose_m(w, *e)} : std::nullopt)) fail("eps not left-linear at " + x.str());
            if (er != (e ? std::optional{operad::compose_m(*e, w)} : std::nullopt)) fail("eps not right-linear at " + x.str());
          }
      }
      // Algebra-input actions compose by multiplying leaf factors.
      for (const auto& x : operad::enumerate_triples(std::min<std::size_t>(n, 4))) {
        const std::size_t l = x.leaves();
        std::vector<std::size_t> k1(l), k2;
        for (std::size_t i = 0; i < l; ++i) k1[i] = 1 + i % 2;
        const auto y = operad::act_leaves(x, k1);
        k2.assign(y.leaves(), 1);
        if (!k2.empty()) k2.front() = 2;
        // Composite factors: leaf i of x receives Σ of k2 over the leaves it became.
        std::vector<std::size_t> k12;
        std::size_t cursor = 0;
        for (std::size_t i = 0; i < l; ++i) {
          std::size_t s = 0;
          for (std::size_t j = 0; j < k1[i]; ++j) s += k2[cursor++];
          k12.push_back(s);
        }
        if (operad::act_leaves(y, k2) != operad::act_leaves(x, k12)) fail("leaf action associativity at " + x.str());
        operad::TElement lhs = operad::d_T(y), rhs;
        for (const auto& dx : operad::d_T(x)) rhs.toggle(operad::act_leaves(dx, k1));
        if (lhs != rhs) fail("leaf action Leibniz at " + x.str());
      }
      r.pass = r.counterexamples.empty();
    });
  }
  for (std::size_t n = 2; n <= max_n + 1; ++n) {
    rep.run("d(mu_" + std::to_string(n) + ") vs K(" + std::to_string(n) + ") corolla", detail::at_n(n),
            [&](InstanceResult& r) {
              const auto top = families::top_cell(Family::K, n);
              operad::TreeSum polytope;
              for (const auto& s : families::boundary(Family::K, top)) polytope.toggle(s);
              if (polytope != operad::d_mu(n)) r.pass = false;
            });
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    rep.run("d(f_" + std::to_string(n) + ") vs J(" + std::to_string(n) + ") top cell", detail::at_n(n),
            [&](InstanceResult& r) {
              const auto top = families::top_cell(Family::J, n);
              operad::TreeSum polytope;
              for (const auto& s : families::boundary(Family::J, top)) polytope.toggle(s);
              if (polytope != operad::d_f(n)) r.pass = false;
            });
  }
  return rep;
}

// Co-Leibniz and counit for the cubical and freehedral diagonals (and the
// diagonal transported to T).
inline VerificationReport suite_diagonal(std::size_t max_n) {
  VerificationReport rep{"diagonal", {}};
  for (auto f : {Family::Cube, Family::Freehedron})
    for (std::size_t n = 1; n <= max_n; ++n)
      rep.run(detail::family_instance(f, n), detail::at_n(n), [&](InstanceResult& r) {
        const auto g = diag::face_geometry(f, n);
        const auto table = diag::diagonal_table(g);
        detail::absorb(r, diag::check_coleibniz(g.complex, table), "co-Leibniz: ");
        detail::absorb(r, diag::check_counit(*g.complex, table), "counit: ");
        if (f == Family::Freehedron) {
          const auto t = diag::transport_to_T(g, table);
          detail::absorb(r, diag::check_coleibniz(t.t, t.table), "T co-Leibniz: ");
          detail::absorb(r, diag::check_counit(*t.t, t.table), "T counit: ");
        }
      });
  return rep;
}

// Coassociativity defects: zero for cubes, measured for freehedra.
inline VerificationReport suite_coassoc(std::size_t max_n) {
  VerificationReport rep{"coassoc", {}};
  std::optional<std::size_t> first_nonzero;
  for (std::size_t n = 1; n <= max_n; ++n) {
    rep.run("Cube(" + std::to_string(n) + ") defect is zero", detail::at_n(n), [&](InstanceResult& r) {
      const auto g = diag::face_geometry(Family::Cube, n);
      const auto s = diag::summarize_defect(g, diag::diagonal_table(g));
      r.pass = s.zero();
      r.counterexamples = s.witnesses;
    });
    rep.run("Freehedron(" + std::to_string(n) + ") defect", detail::at_n(n), [&](InstanceResult& r) {
      const auto g = diag::face_geometry(Family::Freehedron, n);
      const auto s = diag::summarize_defect(g, diag::diagonal_table(g));
      r.note = std::to_string(s.nonzero_faces) + " faces with nonzero defect, " + std::to_string(s.total_terms) +
               " terms";
      if (!s.zero() && !first_nonzero) first_nonzero = n;
    });
  }
  if (!rep.instances.empty())
    rep.instances.back().note += first_nonzero ? "; smallest n with nonzero defect: " + std::to_string(*first_nonzero)
                                               : "; defect zero throughout";
  return rep;
}

inline VerificationReport suite_homotopy(std::size_t max_n) {
  VerificationReport rep{"homotopy", {}};
  for (std::size_t n = 1; n <= max_n; ++n)
    rep.run("Freehedron(" + std::to_string(n) + ")", detail::at_n(n), [&](InstanceResult& r) {
      const auto cert = diag::certify_homotopy_coassoc(n);
      if (!cert.defect_is_chain_map) r.counterexamples.push_back("defect is not a chain map");
      if (!cert.homotopy) r.counterexamples.push_back("no homotopy: obstruction at " + cert.obstruction);
      else if (!cert.verified) r.counterexamples.push_back("homotopy fails re-substitution");
      r.pass = r.counterexamples.empty();
      r.note = cert.defect_is_zero ? "defect is zero" : "nonzero defect, homotopy found";
    });
  return rep;
}

// Box realization: facet-set matching is a bijection and an order isomorphism;
// every face is the meet of its facets.
inline VerificationReport suite_posets(std::size_t max_n) {
  VerificationReport rep{"posets", {}};
  for (std::size_t n = 1; n <= max_n; ++n)
    rep.run("Freehedron(" + std::to_string(n) + ")", detail::at_n(n), [&](InstanceResult& r) {
      const families::FreehedronPoset poset(n);
      const auto boxes = families::box_realization(n);
      const auto sets = poset.facet_sets();
      const auto& labels = poset.labels();
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (boxes.at(labels[i]).dimension() != families::face_dimension(Family::Freehedron, labels[i]))
          r.counterexamples.push_back("dimension mismatch at " + labels[i]);
        for (std::size_t j = 0; j < labels.size(); ++j) {
          const bool combinatorial = poset.contains(i, j);
          if (combinatorial != boxes.at(labels[i]).contains(boxes.at(labels[j])))
            r.counterexamples.push_back("order mismatch at " + labels[i] + " / " + labels[j]);
          const bool meet = std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end());
          if (combinatorial != meet) r.counterexamples.push_back("not the meet of its facets: " + labels[i]);
        }
      }
      r.pass = r.counterexamples.empty();
    });
  return rep;
}

inline VerificationReport run_suite(const std::string& suite, std::size_t max_n) {
  if (suite == "d2") return suite_d2(max_n);
  if (suite == "iso") return suite_iso(max_n);
  if (suite == "chainmaps") return suite_chainmaps(max_n);
  if (suite == "diagram") return suite_diagram(max_n);
  if (suite == "pair-axioms") return suite_pair_axioms(max_n);
  if (suite == "diagonal") return suite_diagonal(max_n);
  if (suite == "coassoc") return suite_coassoc(max_n);
  if (suite == "homotopy") return suite_homotopy(max_n);
  if (suite == "posets") return suite_posets(max_n);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace opair::cli
