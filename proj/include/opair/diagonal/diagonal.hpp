#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opair/chain/checks.hpp"
#include "opair/chain/homotopy.hpp"
#include "opair/chain/linear_map.hpp"
#include "opair/chain/tensor.hpp"
#include "opair/combinat/cube_word.hpp"
#include "opair/families/box_realization.hpp"
#include "opair/families/family.hpp"

namespace opair::diag {

using chain::ComplexPtr;
using families::Family;
using families::GeomBox;

// A face addressed by (degree, index) in its complex.
struct FaceRef {
  std::uint32_t degree;
  std::uint32_t index;
  auto operator<=>(const FaceRef&) const = default;
};

// A complex together with a box for every basis element.
struct FaceGeometry {
  Family family;
  std::size_t n;
  ComplexPtr complex;
  std::vector<std::vector<GeomBox>> boxes;

  const GeomBox& box(FaceRef f) const { return boxes[f.degree][f.index]; }
  std::string label(FaceRef f) const { return complex->label(f.degree, f.index); }
};

inline FaceGeometry face_geometry(Family family, std::size_t n) {
  if (family != Family::Cube && family != Family::Freehedron)
    throw std::invalid_argument("diagonals are defined for cubes and freehedra only");
  FaceGeometry g{family, n, chain::share(families::complex(family, n)), {}};
  std::map<std::string, GeomBox> realization;
  if (family == Family::Freehedron) realization = families::box_realization(n);
  g.boxes.resize(g.complex->degrees());
  for (std::size_t k = 0; k < g.complex->degrees(); ++k)
    for (const auto& s : g.complex->labels(k))
      g.boxes[k].push_back(family == Family::Cube ? families::cube_box(combinat::CubeWord::parse(s)) : realization.at(s));
  return g;
}

// F₁ ≤ F₂ when max F₁ ≤ min F₂ coordinatewise.
inline bool precedes(const GeomBox& a, const GeomBox& b) {
  for (std::size_t i = 0; i < a.sides.size(); ++i)
    if (a.sides[i].second > b.sides[i].first) return false;
  return true;
}

using DiagonalTerm = std::pair<FaceRef, FaceRef>;
// table[k][i]: the terms of Δ on basis element i of degree k.
using DiagonalTable = std::vector<std::vector<std::vector<DiagonalTerm>>>;

// Δ(F) = Σ F₁ ⊗ F₂ over subfaces F₁, F₂ of F with F₁ ≤ F₂ and dim F₁ + dim F₂ = dim F.
inline std::vector<DiagonalTerm> diagonal_terms(const FaceGeometry& g, FaceRef face) {
  const GeomBox& outer = g.box(face);
  std::vector<std::vector<FaceRef>> sub(face.degree + 1);
  for (std::uint32_t k = 0; k <= face.degree; ++k)
    for (std::uint32_t i = 0; i < g.boxes[k].size(); ++i)
      if (outer.contains(g.boxes[k][i])) sub[k].push_back({k, i});
  std::vector<DiagonalTerm> out;
  for (std::uint32_t p = 0; p <= face.degree; ++p)
    for (auto a : sub[p])
      for (auto b : sub[face.degree - p])
        if (precedes(g.box(a), g.box(b))) out.emplace_back(a, b);
  return out;
}

inline DiagonalTable diagonal_table(const FaceGeometry& g) {
  DiagonalTable t(g.complex->degrees());
  for (std::uint32_t k = 0; k < t.size(); ++k)
    for (std::uint32_t i = 0; i < g.complex->rank(k); ++i) t[k].push_back(diagonal_terms(g, {k, i}));
  return t;
}

// Δ on a single face, as "x ⊗ y" strings.
inline std::vector<std::string> diagonal(Family family, std::string_view label) {
  const std::size_t n = family == Family::Cube ? combinat::CubeWord::parse(label).length()
                                               : combinat::NiceExpression::parse(label).n();
  const auto g = face_geometry(family, n);
  const std::size_t k = families::face_dimension(family, label);
  const auto idx = g.complex->find(k, label);
  if (!idx) throw std::invalid_argument("diagonal: unknown face '" + std::string(label) + "'");
  std::vector<std::string> out;
  for (auto [a, b] : diagonal_terms(g, {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(*idx)}))
    out.push_back(g.label(a) + std::string(chain::kTensorSeparator) + g.label(b));
  return out;
}

// C ⊗ C, truncated at the top degree of C.
inline ComplexPtr square_target(const ComplexPtr& c) {
  return chain::share(chain::tensor(c, c, c->degrees() - 1));
}

inline chain::LinearMap diagonal_map(const ComplexPtr& c, const ComplexPtr& cc, const DiagonalTable& table) {
  chain::TensorLayout layout(c->ranks(), c->ranks(), c->degrees() - 1);
  if (layout.ranks() != cc->ranks()) throw std::invalid_argument("diagonal_map: target is not C ⊗ C");
  return chain::LinearMap::from_indices(c, cc, 0, [&](std::size_t k, std::size_t i) {
    chain::Column col;
    for (auto [a, b] : table[k][i]) col.push_back(static_cast<std::uint32_t>(layout.index(a.degree, a.index, b.degree, b.index)));
    return chain::normalize(std::move(col));
  });
}

// Δ ∘ d = (d ⊗ 1 + 1 ⊗ d) ∘ Δ.
inline chain::CheckReport check_coleibniz(const ComplexPtr& c, const DiagonalTable& table) {
  const auto cc = square_target(c);
  return chain::check_chain_map(diagonal_map(c, cc, table));
}

inline chain::CheckReport check_coleibniz(Family family, std::size_t n) {
  const auto g = face_geometry(family, n);
  return check_coleibniz(g.complex, diagonal_table(g));
}

// (aug ⊗ 1)Δ = id = (1 ⊗ aug)Δ, where aug sends every vertex to 1.
inline chain::CheckReport check_counit(const chain::ChainComplex& c, const DiagonalTable& table) {
  chain::CheckReport r;
  for (std::uint32_t k = 0; k < table.size(); ++k) {
    for (std::uint32_t i = 0; i < table[k].size(); ++i) {
      std::vector<FaceRef> left, right;
      for (auto [a, b] : table[k][i]) {
        if (a.degree == 0) left.push_back(b);
        if (b.degree == 0) right.push_back(a);
      }
      const FaceRef self{k, i};
      // Over GF(2) a repeated term cancels; terms are distinct by construction.
      if (left != std::vector<FaceRef>{self} || right != std::vector<FaceRef>{self}) r.fail(c.label(k, i));
    }
  }
  return r;
}

using TripleTerm = std::array<FaceRef, 3>;

// (Δ ⊗ 1)Δ + (1 ⊗ Δ)Δ on every basis element, as sorted lists of surviving terms.
inline std::vector<std::vector<std::vector<TripleTerm>>> coassoc_defect_terms(const DiagonalTable& table) {
  std::vector<std::vector<std::vector<TripleTerm>>> out(table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    for (std::size_t i = 0; i < table[k].size(); ++i) {
      std::vector<TripleTerm> all;
      for (auto [u, v] : table[k][i]) {
        for (auto [u1, u2] : table[u.degree][u.index]) all.push_back({u1, u2, v});
        for (auto [v1, v2] : table[v.degree][v.index]) all.push_back({u, v1, v2});
      }
      std::sort(all.begin(), all.end());
      std::vector<TripleTerm> odd;
      for (std::size_t a = 0; a < all.size();) {
        std::size_t b = a;
        while (b < all.size() && all[b] == all[a]) ++b;
        if ((b - a) % 2 == 1) odd.push_back(all[a]);
        a = b;
      }
      out[k].push_back(std::move(odd));
    }
  }
  return out;
}

struct DefectSummary {
  std::size_t nonzero_faces = 0;
  std::size_t total_terms = 0;
  std::vector<std::string> witnesses;  // faces with a nonzero defect
  bool zero() const { return nonzero_faces == 0; }
};

inline DefectSummary summarize_defect(const FaceGeometry& g, const DiagonalTable& table) {
  DefectSummary s;
  const auto terms = coassoc_defect_terms(table);
  for (std::uint32_t k = 0; k < terms.size(); ++k)
    for (std::uint32_t i = 0; i < terms[k].size(); ++i)
      if (!terms[k][i].empty()) {
        ++s.nonzero_faces;
        s.total_terms += terms[k][i].size();
        s.witnesses.push_back(g.label({k, i}));
      }
  return s;
}

// (C ⊗ C) ⊗ C truncated one degree above the top of C, enough room for a homotopy.
struct CubeTarget {
  ComplexPtr cc;
  ComplexPtr ccc;
};

inline CubeTarget triple_target(const ComplexPtr& c) {
  const std::size_t top = c->degrees();
  auto cc = chain::share(chain::tensor(c, c, top));
  auto ccc = chain::share(chain::tensor(cc, c, top));
  return {cc, ccc};
}

// The defect as a degree-0 map C → (C ⊗ C) ⊗ C.
inline chain::LinearMap coassoc_defect_map(const ComplexPtr& c, const CubeTarget& target,
                                           const DiagonalTable& table) {
  const std::size_t top = c->degrees();
  chain::TensorLayout inner(c->ranks(), c->ranks(), top);
  chain::TensorLayout outer(target.cc->ranks(), c->ranks(), top);
  const auto terms = coassoc_defect_terms(table);
  return chain::LinearMap::from_indices(c, target.ccc, 0, [&](std::size_t k, std::size_t i) {
    chain::Column col;
    for (const auto& t : terms[k][i]) {
      const std::size_t p = t[0].degree + t[1].degree;
      const std::size_t ab = inner.index(t[0].degree, t[0].index, t[1].degree, t[1].index);
      col.push_back(static_cast<std::uint32_t>(outer.index(p, ab, t[2].degree, t[2].index)));
    }
    return chain::normalize(std::move(col));
  });
}

inline chain::LinearMap coassoc_defect(Family family, std::size_t n) {
  const auto g = face_geometry(family, n);
  return coassoc_defect_map(g.complex, triple_target(g.complex), diagonal_table(g));
}

struct HomotopyCertificate {
  std::optional<chain::LinearMap> defect;
  std::optional<chain::LinearMap> homotopy;
  bool defect_is_zero = false;
  bool defect_is_chain_map = false;
  bool verified = false;  // dH + Hd == defect by re-substitution
  std::string obstruction;
};

// Finds H with dH + Hd = (Δ⊗1)Δ + (1⊗Δ)Δ on the freehedron F_n.
inline HomotopyCertificate certify_homotopy_coassoc(std::size_t n) {
  const auto g = face_geometry(Family::Freehedron, n);
  const auto target = triple_target(g.complex);
  HomotopyCertificate cert;
  cert.defect = coassoc_defect_map(g.complex, target, diagonal_table(g));
  cert.defect_is_zero = cert.defect->is_zero();
  cert.defect_is_chain_map = chain::check_chain_map(*cert.defect).pass;
  auto solved = chain::solve_null_homotopy(*cert.defect);
  cert.obstruction = solved.obstruction;
  if (solved.homotopy) {
    cert.verified = chain::verify_null_homotopy(*solved.homotopy, *cert.defect);
    cert.homotopy = std::move(solved.homotopy);
  }
  return cert;
}

}  // namespace opair::diag
