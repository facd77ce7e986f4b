#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "opair/combinat/tree.hpp"

namespace opair::combinat {

namespace detail {

// Applies `local` at every vertex: each tree in local(v) replaces v in a copy of `t`.
template <class Local>
std::vector<TreeNode> rewrite_each(const TreeNode& t, const Local& local) {
  std::vector<TreeNode> out = local(t);
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    for (auto& c : rewrite_each(t.children[i], local)) {
      TreeNode copy = t;
      copy.children[i] = std::move(c);
      out.push_back(std::move(copy));
    }
  }
  return out;
}

// Children [first, first + size) of v moved under a new vertex.
inline TreeNode group_block(const TreeNode& v, std::size_t first, std::size_t size, bool painted) {
  TreeNode out{v.painted, {}};
  for (std::size_t i = 0; i < first; ++i) out.children.push_back(v.children[i]);
  TreeNode inner{painted, {}};
  for (std::size_t i = first; i < first + size; ++i) inner.children.push_back(v.children[i]);
  out.children.push_back(std::move(inner));
  for (std::size_t i = first + size; i < v.arity(); ++i) out.children.push_back(v.children[i]);
  return out;
}

inline void all_blocks(const TreeNode& v, std::size_t min_size, std::size_t max_size, bool painted,
                       std::vector<TreeNode>& out) {
  for (std::size_t size = min_size; size <= max_size && size <= v.arity(); ++size)
    for (std::size_t first = 0; first + size <= v.arity(); ++first)
      out.push_back(group_block(v, first, size, painted));
}

// Child i of v replaced by its own children.
inline TreeNode absorb_child(const TreeNode& v, std::size_t i) {
  TreeNode out{v.painted, {}};
  for (std::size_t j = 0; j < v.arity(); ++j) {
    if (j == i)
      out.children.insert(out.children.end(), v.children[j].children.begin(),
                          v.children[j].children.end());
    else
      out.children.push_back(v.children[j]);
  }
  return out;
}

// Every split of `v`'s children into r >= 2 contiguous nonempty blocks, each
// under a new paint-boundary vertex.
inline void boundary_splits(const TreeNode& v, std::vector<TreeNode>& out) {
  const std::size_t a = v.arity();
  if (a < 2) return;
  // Bit i of `cuts` set: a cut between child i and child i + 1.
  for (std::size_t cuts = 1; cuts < (std::size_t{1} << (a - 1)); ++cuts) {
    TreeNode res{true, {}};
    TreeNode block{true, {}};
    for (std::size_t i = 0; i < a; ++i) {
      block.children.push_back(v.children[i]);
      if (i + 1 == a || (cuts >> i & 1)) {
        res.children.push_back(std::move(block));
        block = TreeNode{true, {}};
      }
    }
    out.push_back(std::move(res));
  }
}

}  // namespace detail

// Codimension-one subfaces of a face of K(n): one inner edge inserted.
inline std::vector<PlanarTree> associahedron_expansions(const PlanarTree& t) {
  auto local = [](const TreeNode& v) {
    std::vector<TreeNode> out;
    if (v.arity() >= 3) detail::all_blocks(v, 2, v.arity() - 1, false, out);
    return out;
  };
  std::vector<PlanarTree> out;
  for (auto& r : detail::rewrite_each(t.root(), local)) out.emplace_back(std::move(r));
  return out;
}

// Codimension-one superfaces of a face of K(n): one inner edge contracted.
inline std::vector<PlanarTree> associahedron_contractions(const PlanarTree& t) {
  auto local = [](const TreeNode& v) {
    std::vector<TreeNode> out;
    for (std::size_t i = 0; i < v.arity(); ++i)
      if (!v.children[i].is_leaf()) out.push_back(detail::absorb_child(v, i));
    return out;
  };
  std::vector<PlanarTree> out;
  for (auto& r : detail::rewrite_each(t.root(), local)) out.emplace_back(std::move(r));
  return out;
}

// The painted trees one admissible contraction away from `t` (its codimension-one
// superfaces in J(n)). Three kinds:
//   an unpainted inner edge below an unpainted or paint-boundary vertex;
//   an edge between two painted vertices that are not on the paint boundary;
//   a painted vertex whose children all lie on the paint boundary absorbs them
//   and becomes a paint-boundary vertex itself.
inline std::vector<PaintedTree> admissible_contractions(const PaintedTree& t) {
  auto local = [](const TreeNode& v) {
    std::vector<TreeNode> out;
    if (v.is_leaf()) return out;
    const bool boundary = v.is_paint_boundary();
    for (std::size_t i = 0; i < v.arity(); ++i) {
      const auto& c = v.children[i];
      if (c.is_leaf()) continue;
      if (!c.painted && (!v.painted || boundary)) out.push_back(detail::absorb_child(v, i));
      if (c.painted && v.painted && !boundary && !c.is_paint_boundary())
        out.push_back(detail::absorb_child(v, i));
    }
    if (v.painted && !boundary) {
      bool all_boundary = true;
      for (const auto& c : v.children) all_boundary = all_boundary && c.is_paint_boundary();
      if (all_boundary) {
        TreeNode merged{true, {}};
        for (const auto& c : v.children)
          merged.children.insert(merged.children.end(), c.children.begin(), c.children.end());
        out.push_back(std::move(merged));
      }
    }
    return out;
  };
  std::vector<PaintedTree> out;
  for (auto& r : detail::rewrite_each(t.root(), local)) out.emplace_back(std::move(r));
  return out;
}

// Codimension-one subfaces of a face of J(n): the inverses of the three
// contraction kinds.
inline std::vector<PaintedTree> multiplihedron_expansions(const PaintedTree& t) {
  auto local = [](const TreeNode& v) {
    std::vector<TreeNode> out;
    if (v.is_leaf()) return out;
    if (!v.painted) {
      if (v.arity() >= 3) detail::all_blocks(v, 2, v.arity() - 1, false, out);
    } else if (v.is_paint_boundary()) {
      detail::all_blocks(v, 2, v.arity(), false, out);
      detail::boundary_splits(v, out);
    } else if (v.arity() >= 3) {
      detail::all_blocks(v, 2, v.arity() - 1, true, out);
    }
    return out;
  };
  std::vector<PaintedTree> out;
  for (auto& r : detail::rewrite_each(t.root(), local)) out.emplace_back(std::move(r));
  return out;
}

// Paint removed and unary vertices contracted.
inline TreeNode forget_paint(const TreeNode& t) {
  if (t.is_leaf()) return leaf();
  if (t.arity() == 1) return forget_paint(t.children.front());
  TreeNode out;
  for (const auto& c : t.children) out.children.push_back(forget_paint(c));
  return out;
}

// Every internal vertex painted, every leaf replaced by f_1 = "!(*)".
inline TreeNode maximal_painting(const TreeNode& t) {
  if (t.is_leaf()) return node({leaf()}, true);
  TreeNode out{true, {}};
  for (const auto& c : t.children) out.children.push_back(maximal_painting(c));
  return out;
}

namespace detail {

// Replaces leaf number `pos` (1-based) of `t` with `inner`.
inline bool graft_at(TreeNode& t, std::size_t& pos, const TreeNode& inner) {
  if (t.is_leaf()) {
    if (--pos == 0) {
      t = inner;
      return true;
    }
    return false;
  }
  for (auto& c : t.children)
    if (graft_at(c, pos, inner)) return true;
  return false;
}

inline void check_position(std::size_t pos, std::size_t leaves) {
  if (pos == 0 || pos > leaves)
    throw std::out_of_range("graft: position " + std::to_string(pos) + " outside 1.." +
                            std::to_string(leaves));
}

}  // namespace detail

// Operadic composition in K: `inner` grafted onto leaf `pos` (1-based) of `outer`.
inline PlanarTree graft(const PlanarTree& outer, std::size_t pos, const PlanarTree& inner) {
  detail::check_position(pos, outer.leaves());
  TreeNode t = outer.root();
  detail::graft_at(t, pos, inner.root());
  return PlanarTree(std::move(t));
}

// An associahedron tree after a multiplihedron tree: `outer` takes the maximal
// painting and `inner` replaces the f_1 sitting on leaf `pos`.
inline PaintedTree graft(const PlanarTree& outer, std::size_t pos, const PaintedTree& inner) {
  detail::check_position(pos, outer.leaves());
  TreeNode painted = maximal_painting(outer.root());
  std::size_t p = pos;
  // In the maximal painting each leaf sits under a unary "!(*)"; graft at the
  // unary vertex instead of the leaf.
  struct Walker {
    static bool at(TreeNode& v, std::size_t& p, const TreeNode& inner) {
      if (v.painted && v.arity() == 1 && v.children.front().is_leaf()) {
        if (--p == 0) {
          v = inner;
          return true;
        }
        return false;
      }
      for (auto& c : v.children)
        if (at(c, p, inner)) return true;
      return false;
    }
  };
  Walker::at(painted, p, inner.root());
  return PaintedTree(std::move(painted));
}

// A multiplihedron tree before an associahedron tree: `inner` is grafted onto
// leaf `pos` of `outer` and stays unpainted.
inline PaintedTree graft(const PaintedTree& outer, std::size_t pos, const PlanarTree& inner) {
  detail::check_position(pos, outer.leaves());
  TreeNode t = outer.root();
  detail::graft_at(t, pos, inner.root());
  return PaintedTree(std::move(t));
}

}  // namespace opair::combinat
