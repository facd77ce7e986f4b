// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "opair/chain/checks.hpp"
#include "opair/correspondences/bijection.hpp"
#include "opair/correspondences/chain_maps.hpp"
#include "opair/correspondences/projections.hpp"
#include "opair/diagonal/diagonal.hpp"
#include "opair/families/box_realization.hpp"
#include "opair/families/family.hpp"
#include "opair/operad/generators.hpp"
#include "opair/operad/omega.hpp"
#include "opair/operad/pair.hpp"
#include "opair/operad/quotients.hpp"

using namespace opair;
using families::Family;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string name(Family f, std::size_t n) { return families::to_string(f) + "(" + std::to_string(n) + ")"; }

std::size_t catalan(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

const std::vector<std::pair<Family, std::size_t>>& complex_ranges() {
  static const std::vector<std::pair<Family, std::size_t>> r{
      {Family::K, 7}, {Family::J, 5}, {Family::Freehedron, 6}, {Family::Cube, 6}};
  return r;
}

std::size_t first_n(Family f) { return f == Family::K || f == Family::J ? 1 : 0; }

Outcome d_squared() {
  Outcome o;
  for (auto [f, hi] : complex_ranges())
    for (std::size_t n = first_n(f); n <= hi; ++n)
      o.expect(chain::check_d_squared(families::complex(f, n)).pass, name(f, n));
  return o;
}

Outcome f_vectors() {
  Outcome o;
  using V = std::vector<std::size_t>;
  const std::vector<std::tuple<Family, std::size_t, V>> table{
      {Family::K, 3, {2, 1}},        {Family::K, 4, {5, 5, 1}},          {Family::J, 2, {2, 1}},
      {Family::J, 3, {6, 6, 1}},     {Family::Freehedron, 1, {2, 1}},    {Family::Freehedron, 2, {5, 5, 1}},
      {Family::Freehedron, 3, {12, 18, 8, 1}}};
  for (const auto& [f, n, v] : table) o.expect(families::f_vector(f, n) == v, "f-vector of " + name(f, n));
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto v = families::f_vector(Family::Freehedron, n);
    o.expect(v.size() == n + 1 && v[n - 1] == 3 * n - 1, "facet count of " + name(Family::Freehedron, n));
  }
  for (std::size_t n = 1; n <= 7; ++n)
    o.expect(families::f_vector(Family::K, n).front() == catalan(n - 1), "vertex count of " + name(Family::K, n));
  for (auto [f, hi] : complex_ranges())
    for (std::size_t n = first_n(f); n <= hi; ++n)
      o.expect(families::complex(f, n).euler_characteristic() == 1, "Euler characteristic of " + name(f, n));
  return o;
}

Outcome main_theorem() {
  Outcome o;
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto f = chain::share(families::complex(Family::Freehedron, n));
    const auto t = chain::share(operad::t_complex(n));
    const std::string at = "n=" + std::to_string(n);
    o.expect(f->ranks() == t->ranks(), "rank vectors differ at " + at);
    for (const auto& e : combinat::enumerate_nice_expressions(n)) {
      const auto x = correspondences::bijection_I(e);
      o.expect(x.dimension() == e.dimension(), "degree changes at " + e.str());
      o.expect(correspondences::inverse_I(x).str() == e.str(), "I^-1 I differs at " + e.str());
    }
    for (const auto& x : operad::enumerate_triples(n))
      o.expect(correspondences::bijection_I(correspondences::inverse_I(x)) == x, "I I^-1 differs at " + x.str());
    if (f->ranks() != t->ranks()) continue;
    o.expect(chain::check_chain_map(correspondences::bijection_map(f, t)).pass, "I is not a chain map at " + at);
    o.expect(chain::check_chain_map(correspondences::inverse_bijection_map(t, f)).pass,
             "I^-1 is not a chain map at " + at);
  }
  return o;
}

Outcome box_posets() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    const families::FreehedronPoset poset(n);
    std::map<std::string, families::GeomBox> boxes;
    try {
      boxes = families::box_realization(n);  // throws unless facet-set matching is a bijection
    } catch (const std::exception& e) {
      o.expect(false, e.what());
      continue;
    }
    o.expect(boxes.size() == families::freehedron_boxes(n).faces.size(), "box count at n=" + std::to_string(n));
    std::set<families::GeomBox> distinct;
    for (const auto& [l, b] : boxes) distinct.insert(b);
    o.expect(distinct.size() == boxes.size(), "matching is not injective at n=" + std::to_string(n));
    const auto& labels = poset.labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = 0; j < labels.size(); ++j)
        o.expect(poset.contains(i, j) == boxes.at(labels[i]).contains(boxes.at(labels[j])),
                 "order differs at " + labels[i] + " / " + labels[j]);
  }
  return o;
}

Outcome projections() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto omega = chain::share(operad::omega_complex(n));
    const auto cube = chain::share(families::complex(Family::Cube, n - 1));
    o.expect(chain::check_chain_map(correspondences::word_chain_map(omega, cube)).pass,
             "word map at n=" + std::to_string(n));
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto j = chain::share(families::complex(Family::J, n));
    const auto f = chain::share(families::complex(Family::Freehedron, n - 1));
    o.expect(chain::check_chain_map(correspondences::projection_map(j, f)).pass, "pi at " + name(Family::J, n));
    for (const auto& v : j->labels(0)) {
      const auto t = combinat::PaintedTree::parse(v);
      o.expect(correspondences::projection_pi(t) == *operad::quotient_multipl(t), "vertex rule at " + v);
    }
    o.expect(correspondences::check_projection_square(n).pass(), "square at " + name(Family::J, n));
  }
  // Pentagon red edge ((ab)c)m to (a(bc))m.
  using combinat::PlanarTree;
  const auto k1 = operad::quotient_assoc(PlanarTree::parse("(((**)*)*)"));
  const auto k2 = operad::quotient_assoc(PlanarTree::parse("((*(**))*)"));
  o.expect(k1 && k2 && *k1 == *k2 && !operad::quotient_assoc(PlanarTree::parse("((***)*)")),
           "pentagon red edge does not collapse");
  // Hexagon red edge (f(a)f(b))f(m) to f(ab)f(m).
  using combinat::PaintedTree;
  const auto j1 = correspondences::projection_pi(PaintedTree::parse("!(!(!(*)!(*))!(*))"));
  const auto j2 = correspondences::projection_pi(PaintedTree::parse("!(!((**))!(*))"));
  o.expect(j1 == j2 && !correspondences::projection_pi_face(PaintedTree::parse("!(!(**)!(*))")),
           "hexagon red edge does not collapse");
  return o;
}

Outcome pair_axioms() {
  Outcome o;
  using operad::TElement;
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto t = chain::share(operad::t_complex(n));
    const auto omega = chain::share(operad::omega_complex(n));
    o.expect(chain::check_chain_map(correspondences::eps_map(t, omega)).pass, "eps at arity " + std::to_string(n));
    for (const auto& x : operad::enumerate_triples(n)) {
      const auto c = operad::comult_c(x);
      TElement dc;
      for (const auto& y : operad::d_T(x)) dc += operad::comult_c(y);
      o.expect(operad::d_T(c) == dc, "c is not a chain map at " + x.str());
      o.expect(operad::counit_at(c, 0) == TElement{x}, "left counit at " + x.str());
      o.expect(operad::counit_at(c, 1) == TElement{x}, "right counit at " + x.str());
      o.expect(operad::comult_at(c, 0) == operad::comult_at(c, 1), "coassociativity at " + x.str());
    }
    for (std::size_t a = 0; a <= n; ++a)
      for (std::size_t b = 0; a + b <= n; ++b)
        for (const auto& w1 : operad::enumerate_forests(a))
          for (const auto& w2 : operad::enumerate_forests(b))
            for (const auto& x : operad::enumerate_triples(n - a - b)) {
              const auto w12 = operad::compose_m(w1, w2);
              o.expect(operad::act_left(w12, x) == operad::act_left(w1, operad::act_left(w2, x)),
                       "left action at " + x.str());
              o.expect(operad::act_right(x, w12) == operad::act_right(operad::act_right(x, w1), w2),
                       "right action at " + x.str());
              o.expect(operad::act_right(operad::act_left(w1, x), w2) == operad::act_left(w1, operad::act_right(x, w2)),
                       "actions do not commute at " + x.str());
            }
  }
  return o;
}

Outcome generators() {
  Outcome o;
  auto polytope = [](Family f, std::size_t n) {
    operad::TreeSum s;
    for (const auto& b : families::boundary(f, families::top_cell(f, n))) s.toggle(b);
    return s;
  };
  for (std::size_t n = 2; n <= 6; ++n) o.expect(operad::d_mu(n) == polytope(Family::K, n), "d(mu_" + std::to_string(n) + ")");
  for (std::size_t n = 1; n <= 5; ++n) o.expect(operad::d_f(n) == polytope(Family::J, n), "d(f_" + std::to_string(n) + ")");
  return o;
}

// Δ on a cube word by the product rule Δa = a⊗a, Δc = c⊗c, Δb = a⊗b + b⊗c.
std::set<std::pair<std::string, std::string>> serre(const std::string& w) {
  std::set<std::pair<std::string, std::string>> terms{{"", ""}};
  for (char ch : w) {
    std::set<std::pair<std::string, std::string>> next;
    for (const auto& [l, r] : terms) {
      if (ch == 'b') {
        next.insert({l + 'a', r + 'b'});
        next.insert({l + 'b', r + 'c'});
      } else {
        next.insert({l + ch, r + ch});
      }
    }
    terms = std::move(next);
  }
  return terms;
}

Outcome diagonals() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    o.expect(diag::coassoc_defect(Family::Cube, n).is_zero(), "cube defect at n=" + std::to_string(n));
    // Brute force: the product-rule diagonal agrees with the box diagonal and is coassociative.
    const auto g = diag::face_geometry(Family::Cube, n);
    const auto table = diag::diagonal_table(g);
    for (std::uint32_t k = 0; k < table.size(); ++k)
      for (std::uint32_t i = 0; i < table[k].size(); ++i) {
        std::set<std::pair<std::string, std::string>> boxes;
        for (auto [a, b] : table[k][i]) boxes.insert({g.label(a), g.label(b)});
        const std::string w = g.label({k, i});
        std::set<std::pair<std::string, std::string>> rule;
        for (const auto& [l, r] : serre(w == "-" ? "" : w)) rule.insert({l.empty() ? "-" : l, r.empty() ? "-" : r});
        o.expect(boxes == rule, "cube diagonal differs from the product rule at " + w);
        std::map<std::vector<std::string>, int> parity;
        for (const auto& [l, r] : serre(w == "-" ? "" : w)) {
          for (const auto& [ll, lr] : serre(l)) parity[{ll, lr, r}] ^= 1;
          for (const auto& [rl, rr] : serre(r)) parity[{l, rl, rr}] ^= 1;
        }
        for (const auto& [term, p] : parity) o.expect(p == 0, "product rule not coassociative at " + w);
      }
  }
  for (auto f : {Family::Cube, Family::Freehedron})
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto g = diag::face_geometry(f, n);
      const auto table = diag::diagonal_table(g);
      o.expect(diag::check_coleibniz(g.complex, table).pass, "co-Leibniz at " + name(f, n));
      o.expect(diag::check_counit(*g.complex, table).pass, "counit at " + name(f, n));
    }
  std::string defects;
  std::size_t smallest = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto g = diag::face_geometry(Family::Freehedron, n);
    const auto s = diag::summarize_defect(g, diag::diagonal_table(g));
    if (!s.zero() && smallest == 0) smallest = n;
    defects += (n > 1 ? ", " : "") + std::to_string(s.nonzero_faces);
    o.expect(chain::check_chain_map(diag::coassoc_defect(Family::Freehedron, n)).pass,
             "freehedral defect is not a chain map at n=" + std::to_string(n));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto cert = diag::certify_homotopy_coassoc(n);
    o.expect(cert.homotopy.has_value() && cert.verified, "no verified homotopy at n=" + std::to_string(n));
  }
  o.note = "faces with nonzero freehedral defect for n=1..4: " + defects + "; smallest nonzero n = " +
           (smallest ? std::to_string(smallest) : std::string("none"));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"d^2 = 0 on K(n<=7), J(n<=5), F_n (n<=6), I^n (n<=6)", d_squared},
      {"f-vectors, facet counts, Catalan vertex counts, Euler characteristic 1", f_vectors},
      {"I: C_*(F_n) -> T(a^n,m;m) is an isomorphism of chain complexes, n<=6", main_theorem},
      {"box realization is a poset isomorphism, n<=5", box_posets},
      {"word map and pi are chain maps, the square commutes, red edges collapse", projections},
      {"operadic pair axioms for (Omega, T), arity<=5", pair_axioms},
      {"generator differentials match polytope boundaries", generators},
      {"diagonals: co-Leibniz, counit, cube coassociativity, freehedral defect and homotopy", diagonals},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool pass = o.failures.empty();
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << "\n";
    for (std::size_t k = 0; k < o.failures.size() && k < 5; ++k) std::cout << "    " << o.failures[k] << "\n";
  }
  return all ? 0 : 1;
}
