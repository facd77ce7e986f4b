#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opair/chain/checks.hpp"
#include "opair/chain/linear_map.hpp"
#include "opair/correspondences/bijection.hpp"
#include "opair/correspondences/projections.hpp"
#include "opair/families/family.hpp"
#include "opair/operad/omega.hpp"
#include "opair/operad/pair.hpp"
#include "opair/operad/quotients.hpp"

namespace opair::correspondences {

using chain::ComplexPtr;
using chain::LinearMap;

// A basis-to-basis-or-zero map given on labels.
inline LinearMap label_map(ComplexPtr source, ComplexPtr target,
                           const std::function<std::optional<std::string>(const std::string&)>& f) {
  return LinearMap::from_labels(std::move(source), std::move(target), 0, [&](const std::string& s) {
    std::vector<std::string> out;
    if (auto image = f(s)) out.push_back(std::move(*image));
    return out;
  });
}

// The complexes the maps below run between, for J(n) with n >= 2.
struct Complexes {
  std::size_t n;
  ComplexPtr j, k, freehedron, t, omega, cube;

  explicit Complexes(std::size_t n_)
      : n(n_),
        j(chain::share(families::complex(families::Family::J, n_))),
        k(chain::share(families::complex(families::Family::K, n_))),
        freehedron(chain::share(families::complex(families::Family::Freehedron, n_ - 1))),
        t(chain::share(operad::t_complex(n_ - 1))),
        omega(chain::share(operad::omega_complex(n_ - 1))),
        cube(chain::share(families::complex(families::Family::Cube, n_ - 2))) {}
};

// C_*(F_m) → T(a^m, m; m).
inline LinearMap bijection_map(ComplexPtr freehedron, ComplexPtr t) {
  return label_map(std::move(freehedron), std::move(t), [](const std::string& s) {
    return bijection_I(NiceExpression::parse(s)).str();
  });
}

inline LinearMap inverse_bijection_map(ComplexPtr t, ComplexPtr freehedron) {
  return label_map(std::move(t), std::move(freehedron), [](const std::string& s) {
    return inverse_I(FTFTriple::parse(s)).str();
  });
}

// Ω(a^m, m; m) → C_*(I^{m-1}).
inline LinearMap word_chain_map(ComplexPtr omega, ComplexPtr cube) {
  return label_map(std::move(omega), std::move(cube), [](const std::string& s) {
    return word_map(ShortForest::parse(s)).str();
  });
}

inline LinearMap eps_map(ComplexPtr t, ComplexPtr omega) {
  return label_map(std::move(t), std::move(omega), [](const std::string& s) -> std::optional<std::string> {
    if (auto e = operad::counit_eps(FTFTriple::parse(s))) return e->str();
    return std::nullopt;
  });
}

inline LinearMap quotient_assoc_map(ComplexPtr k, ComplexPtr omega) {
  return label_map(std::move(k), std::move(omega), [](const std::string& s) -> std::optional<std::string> {
    if (auto f = operad::quotient_assoc(PlanarTree::parse(s))) return f->str();
    return std::nullopt;
  });
}

// π on all faces of J(n), landing in T(a^{n-1}, m; m).
inline LinearMap quotient_multipl_map(ComplexPtr j, ComplexPtr t) {
  return label_map(std::move(j), std::move(t), [](const std::string& s) -> std::optional<std::string> {
    if (auto x = operad::quotient_multipl(PaintedTree::parse(s))) return x->str();
    return std::nullopt;
  });
}

// π: C_*(J(n)) → C_*(F_{n-1}).
inline LinearMap projection_map(ComplexPtr j, ComplexPtr freehedron) {
  return label_map(std::move(j), std::move(freehedron), [](const std::string& s) -> std::optional<std::string> {
    if (auto x = operad::quotient_multipl(PaintedTree::parse(s))) return inverse_I(*x).str();
    return std::nullopt;
  });
}

inline LinearMap forget_map(ComplexPtr j, ComplexPtr k) {
  return label_map(std::move(j), std::move(k), [](const std::string& s) -> std::optional<std::string> {
    if (auto t = forget_to_K(PaintedTree::parse(s))) return t->str();
    return std::nullopt;
  });
}

// C_*(F_m) → C_*(I^{m-1}) read directly off nice expressions.
inline LinearMap freehedron_cube_map(ComplexPtr freehedron, ComplexPtr cube) {
  return label_map(std::move(freehedron), std::move(cube), [](const std::string& s) -> std::optional<std::string> {
    if (auto w = freehedron_to_cube(NiceExpression::parse(s))) return w->str();
    return std::nullopt;
  });
}

struct SquareReport {
  chain::CheckReport forget, quotient_assoc, word, projection, bijection, eps;
  // Faces of J(n) on which the two composites differ.
  chain::CheckReport commutes;

  bool pass() const {
    return forget.pass && quotient_assoc.pass && word.pass && projection.pass && bijection.pass &&
           eps.pass && commutes.pass;
  }
};

// J(n) → K(n) → I^{n-2} against J(n) → F_{n-1} → I^{n-2}, the second route
// being ε transported through I. Every arrow is also checked to be a chain map.
inline SquareReport check_projection_square(std::size_t n) {
  if (n < 2) throw std::invalid_argument("check_projection_square: need n >= 2");
  Complexes c(n);
  const auto forget = forget_map(c.j, c.k);
  const auto qa = quotient_assoc_map(c.k, c.omega);
  const auto word = word_chain_map(c.omega, c.cube);
  const auto pi = projection_map(c.j, c.freehedron);
  const auto iso = bijection_map(c.freehedron, c.t);
  const auto eps = eps_map(c.t, c.omega);

  SquareReport r;
  r.forget = chain::check_chain_map(forget);
  r.quotient_assoc = chain::check_chain_map(qa);
  r.word = chain::check_chain_map(word);
  r.projection = chain::check_chain_map(pi);
  r.bijection = chain::check_chain_map(iso);
  r.eps = chain::check_chain_map(eps);

  const auto route1 = chain::compose(word, chain::compose(qa, forget));
  const auto route2 = chain::compose(word, chain::compose(eps, chain::compose(iso, pi)));
  for (std::size_t k = 0; k < c.j->degrees(); ++k)
    for (std::size_t i = 0; i < c.j->rank(k); ++i)
      if (route1.block(k).column(i) != route2.block(k).column(i)) r.commutes.fail(c.j->label(k, i));
  return r;
}

}  // namespace opair::correspondences
