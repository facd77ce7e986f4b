#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opair/combinat/contractions.hpp"
#include "opair/combinat/cube_word.hpp"
#include "opair/combinat/forest.hpp"
#include "opair/combinat/nice_expression.hpp"
#include "opair/combinat/tree.hpp"
#include "opair/correspondences/bijection.hpp"
#include "opair/operad/quotients.hpp"

namespace opair::correspondences {

using combinat::CubeWord;
using combinat::PaintedTree;
using combinat::PlanarTree;
using combinat::TreeNode;

// Letter i compares leaves i and i+1: a when they share a branch, b when they
// share only a tree, c when they lie in different trees.
inline CubeWord word_map(const ShortForest& f) {
  std::string w;
  bool first = true;
  for (const auto& tree : f.trees()) {
    if (!first) w += 'c';
    first = false;
    for (std::size_t b = 0; b < tree.size(); ++b) {
      if (b) w += 'b';
      w += std::string(tree[b] - 1, 'a');
    }
  }
  return CubeWord(std::move(w));
}

// J(n) → K(n): paint forgotten, unary vertices contracted. Faces whose
// dimension drops map to zero.
inline std::optional<PlanarTree> forget_to_K(const PaintedTree& t) {
  PlanarTree k(combinat::forget_paint(t.root()));
  if (k.dimension() != t.dimension()) return std::nullopt;
  return k;
}

namespace detail {

inline bool is_binary_painted(const TreeNode& t) {
  if (t.is_leaf()) return true;
  if (t.is_paint_boundary() ? t.arity() != 1 : t.arity() != 2) return false;
  for (const auto& c : t.children)
    if (!is_binary_painted(c)) return false;
  return true;
}

// Right-strand conversion of a binary tree: each strand vertex contributes the
// one-branch tree [size of its left subtree], starting from the root.
inline std::vector<BranchList> strand_forest(const TreeNode& t) {
  std::vector<BranchList> out;
  for (const TreeNode* v = &t; !v->is_leaf(); v = &v->children.back())
    out.push_back({v->children.front().leaf_count()});
  return out;
}

// Replaces the subtree below the strand's paint-boundary vertex by a leaf.
inline TreeNode cut_at_boundary(const TreeNode& v) {
  if (v.is_paint_boundary()) return combinat::leaf();
  TreeNode out{v.painted, v.children};
  out.children.back() = cut_at_boundary(v.children.back());
  return out;
}

}  // namespace detail

// π on a vertex of J(n) (a binary painted tree): the middle tree is the unit,
// G comes from the unpainted subtree T' hanging from the strand's
// paint-boundary vertex, F from T \ T' with the paint forgotten.
inline FTFTriple projection_pi(const PaintedTree& t) {
  if (!detail::is_binary_painted(t.root()))
    throw std::invalid_argument("projection_pi: '" + t.str() + "' is not a vertex of J(n)");
  const TreeNode* v = &t.root();
  while (!v->is_paint_boundary()) v = &v->children.back();
  const TreeNode& lower = v->children.front();
  const TreeNode upper = combinat::forget_paint(detail::cut_at_boundary(t.root()));
  return combinat::make_triple(ShortForest(detail::strand_forest(upper)), combinat::MiddleTree(),
                               ShortForest(detail::strand_forest(lower)));
}

// π on any face: the quotient map (agrees with projection_pi on vertices).
inline std::optional<FTFTriple> projection_pi_face(const PaintedTree& t) {
  return operad::quotient_multipl(t);
}

// F_n → I^{n-1} read directly off a nice expression: zero unless the bar
// stretch is a single symbol; letter i looks at the symbol p = n − i, giving
// c when p ends a stretch, b when p is inside one, a when p is missing.
inline std::optional<CubeWord> freehedron_to_cube(const NiceExpression& e) {
  if (e.stretch(e.bar()).size() != 1) return std::nullopt;
  const std::size_t n = e.n();
  std::vector<char> kind(n + 1, 'a');
  for (const auto& s : e.stretches())
    for (std::size_t j = 0; j < s.size(); ++j) kind[s[j]] = (j == 0 || j + 1 == s.size()) ? 'c' : 'b';
  std::string w;
  for (std::size_t i = 1; i < n; ++i) w += kind[n - i];
  return CubeWord(std::move(w));
}

}  // namespace opair::correspondences
