#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "opair/combinat/forest.hpp"
#include "opair/combinat/tree.hpp"

namespace opair::operad {

using combinat::FTFTriple;
using combinat::PaintedTree;
using combinat::PlanarTree;
using combinat::ShortForest;
using combinat::TreeNode;

// Trees are read as colored: the last leaf carries the module color m, all
// other leaves the algebra color a. The module strand is the path from the
// root to that last leaf.

namespace detail {

// An off-strand subtree survives the quotient when it only uses binary
// algebra products and unary paint-boundary vertices.
inline bool survives_off_strand(const TreeNode& t) {
  if (t.is_leaf()) return true;
  if (t.is_paint_boundary()) {
    if (t.arity() != 1) return false;
  } else if (t.arity() != 2) {
    return false;
  }
  for (const auto& c : t.children)
    if (!survives_off_strand(c)) return false;
  return true;
}

// Leaf counts of the algebra subtrees of a strand vertex, or nullopt when one
// of them dies in the quotient.
inline std::optional<combinat::BranchList> strand_branches(const TreeNode& v) {
  combinat::BranchList out;
  for (std::size_t i = 0; i + 1 < v.arity(); ++i) {
    if (!survives_off_strand(v.children[i])) return std::nullopt;
    out.push_back(v.children[i].leaf_count());
  }
  return out;
}

}  // namespace detail

// K^Col(aⁿ, m; m) → Ω(aⁿ, m; m): zero if an algebra vertex has arity ≥ 3,
// otherwise one tree per strand vertex, root first.
inline std::optional<ShortForest> quotient_assoc(const PlanarTree& t) {
  std::vector<combinat::BranchList> trees;
  for (const TreeNode* v = &t.root(); !v->is_leaf(); v = &v->children.back()) {
    auto b = detail::strand_branches(*v);
    if (!b) return std::nullopt;
    trees.push_back(std::move(*b));
  }
  return ShortForest(std::move(trees));
}

// K^Col(aⁿ; a) → Ω(aⁿ; a), which is one-dimensional in every arity: returns
// the arity when the tree is binary, nullopt (zero) otherwise.
inline std::optional<std::size_t> quotient_assoc_arity(const PlanarTree& t) {
  if (!detail::survives_off_strand(t.root())) return std::nullopt;
  return t.leaves();
}

// J^Col(aⁿ, m; m) → T(aⁿ, m; m): zero if an algebra vertex has arity ≥ 3 or an
// off-strand paint-boundary vertex has arity ≥ 2; otherwise painted strand
// vertices give F, the strand's paint-boundary vertex gives the middle tree and
// unpainted strand vertices give G.
inline std::optional<FTFTriple> quotient_multipl(const PaintedTree& t) {
  std::vector<combinat::BranchList> f, g;
  std::optional<combinat::BranchList> middle;
  for (const TreeNode* v = &t.root(); !v->is_leaf(); v = &v->children.back()) {
    auto b = detail::strand_branches(*v);
    if (!b) return std::nullopt;
    if (v->is_paint_boundary())
      middle = std::move(*b);
    else if (v->painted)
      f.push_back(std::move(*b));
    else
      g.push_back(std::move(*b));
  }
  return combinat::make_triple(ShortForest(std::move(f)), combinat::MiddleTree(std::move(*middle)),
                               ShortForest(std::move(g)));
}

}  // namespace opair::operad
