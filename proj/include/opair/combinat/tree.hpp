#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opair::combinat {

// A rooted planar tree node. A node without children is a leaf.
struct TreeNode {
  bool painted = false;
  std::vector<TreeNode> children;

  bool is_leaf() const { return children.empty(); }
  std::size_t arity() const { return children.size(); }

  std::size_t leaf_count() const {
    if (is_leaf()) return 1;
    std::size_t n = 0;
    for (const auto& c : children) n += c.leaf_count();
    return n;
  }

  std::size_t internal_count() const {
    if (is_leaf()) return 0;
    std::size_t n = 1;
    for (const auto& c : children) n += c.internal_count();
    return n;
  }

  // Painted with every child unpainted: the vertices where the paint stops.
  bool is_paint_boundary() const {
    if (!painted || is_leaf()) return false;
    for (const auto& c : children)
      if (c.painted) return false;
    return true;
  }

  friend bool operator==(const TreeNode& a, const TreeNode& b) {
    return a.painted == b.painted && a.children == b.children;
  }
};

inline TreeNode leaf() { return {}; }
inline TreeNode node(std::vector<TreeNode> children, bool painted = false) {
  return {painted, std::move(children)};
}

// Leaves are "*", internal vertices "(...)", painted vertices carry a "!" prefix.
inline void encode_into(const TreeNode& t, std::string& out) {
  if (t.is_leaf()) {
    out += '*';
    return;
  }
  if (t.painted) out += '!';
  out += '(';
  for (const auto& c : t.children) encode_into(c, out);
  out += ')';
}

inline std::string encode(const TreeNode& t) {
  std::string s;
  encode_into(t, s);
  return s;
}

namespace detail {

inline TreeNode parse_node(std::string_view s, std::size_t& pos) {
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("tree '" + std::string(s) + "': " + what + " at position " +
                                std::to_string(pos));
  };
  if (pos >= s.size()) fail("unexpected end");
  if (s[pos] == '*') {
    ++pos;
    return leaf();
  }
  TreeNode t;
  if (s[pos] == '!') {
    t.painted = true;
    ++pos;
    if (pos >= s.size() || s[pos] != '(') fail("'!' must precede an internal vertex");
  }
  if (s[pos] != '(') fail("expected '*', '!' or '('");
  ++pos;
  while (pos < s.size() && s[pos] != ')') t.children.push_back(parse_node(s, pos));
  if (pos >= s.size()) fail("missing ')'");
  ++pos;
  if (t.children.empty()) fail("internal vertex without children");
  return t;
}

}  // namespace detail

inline TreeNode parse_tree(std::string_view s) {
  std::size_t pos = 0;
  TreeNode t = detail::parse_node(s, pos);
  if (pos != s.size())
    throw std::invalid_argument("tree '" + std::string(s) + "': trailing characters");
  return t;
}

// Faces of associahedra: every internal vertex has at least two children,
// nothing is painted.
class PlanarTree {
 public:
  explicit PlanarTree(TreeNode root) : root_(std::move(root)) { validate(root_); }
  static PlanarTree parse(std::string_view s) { return PlanarTree(parse_tree(s)); }
  static PlanarTree corolla(std::size_t n) {
    if (n == 0) throw std::invalid_argument("corolla: need at least one leaf");
    if (n == 1) return PlanarTree(leaf());
    return PlanarTree(node(std::vector<TreeNode>(n)));
  }

  const TreeNode& root() const { return root_; }
  std::size_t leaves() const { return root_.leaf_count(); }
  // n - 1 - #internal vertices; K(1) is a point.
  std::size_t dimension() const {
    const std::size_t n = leaves();
    return n == 1 ? 0 : n - 1 - root_.internal_count();
  }
  std::string str() const { return encode(root_); }

  friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.root_ == b.root_; }
  friend bool operator<(const PlanarTree& a, const PlanarTree& b) { return a.str() < b.str(); }

 private:
  static void validate(const TreeNode& t) {
    if (t.painted) throw std::invalid_argument("planar tree: painted vertex");
    if (!t.is_leaf() && t.arity() < 2)
      throw std::invalid_argument("planar tree: internal vertex of arity " +
                                  std::to_string(t.arity()));
    for (const auto& c : t.children) validate(c);
  }

  TreeNode root_;
};

// Faces of multiplihedra. The painted vertices form a subtree containing the
// root and no leaf; arity-1 vertices are paint-boundary vertices; a painted
// vertex has either only painted or only unpainted children.
class PaintedTree {
 public:
  explicit PaintedTree(TreeNode root) : root_(std::move(root)) {
    if (auto why = violation(root_); !why.empty())
      throw std::invalid_argument("painted tree '" + encode(root_) + "': " + why);
  }
  static PaintedTree parse(std::string_view s) { return PaintedTree(parse_tree(s)); }
  // C_n: the painted corolla labelling the top cell of J(n).
  static PaintedTree corolla(std::size_t n) {
    if (n == 0) throw std::invalid_argument("painted corolla: need at least one leaf");
    return PaintedTree(node(std::vector<TreeNode>(n), true));
  }

  // Empty string when `t` satisfies all painted-tree invariants.
  static std::string violation(const TreeNode& t) {
    if (!t.painted) return "root is not painted";
    return violation_below(t);
  }

  const TreeNode& root() const { return root_; }
  std::size_t leaves() const { return root_.leaf_count(); }
  // Σ(arity - 2) over ordinary vertices + Σ(arity - 1) over paint-boundary vertices.
  std::size_t dimension() const { return dimension_of(root_); }
  std::string str() const { return encode(root_); }

  friend bool operator==(const PaintedTree& a, const PaintedTree& b) { return a.root_ == b.root_; }
  friend bool operator<(const PaintedTree& a, const PaintedTree& b) { return a.str() < b.str(); }

  static std::size_t dimension_of(const TreeNode& t) {
    if (t.is_leaf()) return 0;
    std::size_t d = t.is_paint_boundary() ? t.arity() - 1 : t.arity() - 2;
    for (const auto& c : t.children) d += dimension_of(c);
    return d;
  }

 private:
  static std::string violation_below(const TreeNode& t) {
    if (t.is_leaf()) return t.painted ? "painted leaf" : "";
    if (t.painted) {
      bool any_painted = false, any_unpainted = false;
      for (const auto& c : t.children) (c.painted ? any_painted : any_unpainted) = true;
      if (any_painted && any_unpainted) return "painted vertex with mixed children";
    } else {
      for (const auto& c : t.children)
        if (c.painted) return "painted vertex below an unpainted one";
    }
    if (t.arity() == 1 && !t.is_paint_boundary()) return "arity-1 vertex off the paint boundary";
    for (const auto& c : t.children)
      if (auto why = violation_below(c); !why.empty()) return why;
    return "";
  }

  TreeNode root_;
};

}  // namespace opair::combinat
