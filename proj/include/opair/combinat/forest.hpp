#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opair::combinat {

// A depth-2 tree, stored as the leaf counts of its branches, left to right.
using BranchList = std::vector<std::size_t>;

inline std::size_t leaf_sum(const BranchList& b) {
  return std::accumulate(b.begin(), b.end(), std::size_t{0});
}

inline void append_branch_list(std::string& out, const BranchList& b) {
  out += '[';
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(b[i]);
  }
  out += ']';
}

namespace detail {

// Parses "[c1,c2,...]" starting at `pos`; allows the empty list "[]".
inline BranchList parse_branch_list(std::string_view s, std::size_t& pos) {
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("branch list in '" + std::string(s) + "': " + what);
  };
  if (pos >= s.size() || s[pos] != '[') fail("expected '['");
  ++pos;
  BranchList out;
  if (pos < s.size() && s[pos] == ']') {
    ++pos;
    return out;
  }
  while (true) {
    std::size_t v = 0;
    std::size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      v = v * 10 + static_cast<std::size_t>(s[pos] - '0');
      ++pos;
      ++digits;
    }
    if (digits == 0) fail("expected a branch size");
    if (v == 0) fail("branch sizes must be positive");
    out.push_back(v);
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < s.size() && s[pos] == ']') {
      ++pos;
      return out;
    }
    fail("expected ',' or ']'");
  }
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace detail

// Position of two neighbouring branches: tree index and index of the left
// branch, both 0-based. For triples the tree index runs over the trees of F,
// then the middle tree, then the trees of G.
struct BranchGap {
  std::size_t tree = 0;
  std::size_t left_branch = 0;
  bool operator==(const BranchGap&) const = default;
};

class ShortForest {
 public:
  ShortForest() = default;
  explicit ShortForest(std::vector<BranchList> trees) : trees_(std::move(trees)) {
    for (const auto& t : trees_) {
      if (t.empty()) throw std::invalid_argument("short forest: tree without branches");
      for (auto c : t)
        if (c == 0) throw std::invalid_argument("short forest: empty branch");
    }
  }

  // "[1,2][1,1,1]"; the empty forest is "-".
  static ShortForest parse(std::string_view s) {
    s = detail::trim(s);
    if (s == "-") return {};
    std::vector<BranchList> trees;
    std::size_t pos = 0;
    while (pos < s.size()) trees.push_back(detail::parse_branch_list(s, pos));
    if (trees.empty()) throw std::invalid_argument("short forest: empty encoding");
    return ShortForest(std::move(trees));
  }

  const std::vector<BranchList>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  std::size_t tree_count() const { return trees_.size(); }
  std::size_t branch_count() const {
    std::size_t b = 0;
    for (const auto& t : trees_) b += t.size();
    return b;
  }
  std::size_t leaves() const {
    std::size_t l = 0;
    for (const auto& t : trees_) l += leaf_sum(t);
    return l;
  }
  // b(F) - t(F).
  std::size_t dimension() const { return branch_count() - tree_count(); }

  std::string str() const {
    if (trees_.empty()) return "-";
    std::string out;
    for (const auto& t : trees_) append_branch_list(out, t);
    return out;
  }

  bool operator==(const ShortForest&) const = default;
  auto operator<=>(const ShortForest&) const = default;

 private:
  std::vector<BranchList> trees_;
};

// F then G, left to right.
inline ShortForest concat(const ShortForest& f, const ShortForest& g) {
  auto trees = f.trees();
  trees.insert(trees.end(), g.trees().begin(), g.trees().end());
  return ShortForest(std::move(trees));
}

inline ShortForest concat(const ShortForest& f, const BranchList& tree) {
  auto trees = f.trees();
  trees.push_back(tree);
  return ShortForest(std::move(trees));
}

inline ShortForest concat(const BranchList& tree, const ShortForest& g) {
  std::vector<BranchList> trees{tree};
  trees.insert(trees.end(), g.trees().begin(), g.trees().end());
  return ShortForest(std::move(trees));
}

inline std::vector<BranchGap> gaps(const ShortForest& f) {
  std::vector<BranchGap> out;
  for (std::size_t t = 0; t < f.tree_count(); ++t)
    for (std::size_t b = 0; b + 1 < f.trees()[t].size(); ++b) out.push_back({t, b});
  return out;
}

namespace detail {

inline void check_gap(const std::vector<BranchList>& trees, BranchGap g) {
  if (g.tree >= trees.size() || g.left_branch + 1 >= trees[g.tree].size())
    throw std::out_of_range("branch gap (" + std::to_string(g.tree) + "," +
                            std::to_string(g.left_branch) + ") does not address two neighbouring branches");
}

inline BranchList unite_branches(const BranchList& t, std::size_t left) {
  BranchList out(t.begin(), t.begin() + static_cast<long>(left));
  out.push_back(t[left] + t[left + 1]);
  out.insert(out.end(), t.begin() + static_cast<long>(left) + 2, t.end());
  return out;
}

inline std::pair<BranchList, BranchList> split_branches(const BranchList& t, std::size_t left) {
  return {BranchList(t.begin(), t.begin() + static_cast<long>(left) + 1),
          BranchList(t.begin() + static_cast<long>(left) + 1, t.end())};
}

}  // namespace detail

// U(F, B): the two branches at B merge into one.
inline ShortForest unite(const ShortForest& f, BranchGap g) {
  detail::check_gap(f.trees(), g);
  auto trees = f.trees();
  trees[g.tree] = detail::unite_branches(trees[g.tree], g.left_branch);
  return ShortForest(std::move(trees));
}

// S(F, B): the tree containing B splits into two trees at B.
inline ShortForest separate(const ShortForest& f, BranchGap g) {
  detail::check_gap(f.trees(), g);
  auto trees = f.trees();
  auto [l, r] = detail::split_branches(trees[g.tree], g.left_branch);
  trees[g.tree] = std::move(r);
  trees.insert(trees.begin() + static_cast<long>(g.tree), std::move(l));
  return ShortForest(std::move(trees));
}

// A possibly empty sequence of branches; the empty sequence is the unit "1".
class MiddleTree {
 public:
  MiddleTree() = default;
  explicit MiddleTree(BranchList branches) : branches_(std::move(branches)) {
    for (auto c : branches_)
      if (c == 0) throw std::invalid_argument("middle tree: empty branch");
  }
  static MiddleTree parse(std::string_view s) {
    s = detail::trim(s);
    std::size_t pos = 0;
    auto b = detail::parse_branch_list(s, pos);
    if (pos != s.size()) throw std::invalid_argument("middle tree: trailing characters");
    return MiddleTree(std::move(b));
  }

  const BranchList& branches() const { return branches_; }
  bool is_unit() const { return branches_.empty(); }
  std::size_t leaves() const { return leaf_sum(branches_); }
  std::size_t dimension() const { return branches_.size(); }
  std::string str() const {
    std::string out;
    append_branch_list(out, branches_);
    return out;
  }

  bool operator==(const MiddleTree&) const = default;
  auto operator<=>(const MiddleTree&) const = default;

 private:
  BranchList branches_;
};

// r composable factors: forests F_1..F_r, middle trees T_1..T_r and a final
// forest G, read left to right as F_1 T_1 F_2 T_2 ... F_r T_r G. The right
// forest of each factor has been absorbed into the left forest of the next.
// r = 1 is a triple (F, T, G), r = 2 the quintuple normal form of T ⊗_Ω T.
class Composite {
 public:
  Composite() : forests_(1), middles_(1) {}
  Composite(std::vector<ShortForest> forests, std::vector<MiddleTree> middles, ShortForest g)
      : forests_(std::move(forests)), middles_(std::move(middles)), g_(std::move(g)) {
    if (forests_.empty() || forests_.size() != middles_.size())
      throw std::invalid_argument("composite: need r >= 1 forests and r middle trees");
  }
  Composite(ShortForest f, MiddleTree t, ShortForest g)
      : Composite(std::vector<ShortForest>{std::move(f)}, std::vector<MiddleTree>{std::move(t)},
                  std::move(g)) {}

  // "F1 | T1 | F2 | T2 | G" with an odd number of fields.
  static Composite parse(std::string_view s) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t pos = s.find('|'); pos != std::string_view::npos; pos = s.find('|', start)) {
      fields.push_back(s.substr(start, pos - start));
      start = pos + 1;
    }
    fields.push_back(s.substr(start));
    if (fields.size() < 3 || fields.size() % 2 == 0)
      throw std::invalid_argument("composite '" + std::string(s) + "': expected F | T | ... | G");
    std::vector<ShortForest> forests;
    std::vector<MiddleTree> middles;
    for (std::size_t i = 0; i + 1 < fields.size(); i += 2) {
      forests.push_back(ShortForest::parse(fields[i]));
      middles.push_back(MiddleTree::parse(fields[i + 1]));
    }
    return Composite(std::move(forests), std::move(middles), ShortForest::parse(fields.back()));
  }

  std::size_t factors() const { return middles_.size(); }
  const std::vector<ShortForest>& forests() const { return forests_; }
  const std::vector<MiddleTree>& middles() const { return middles_; }
  const ShortForest& forest(std::size_t i) const { return forests_.at(i); }
  const MiddleTree& middle(std::size_t i) const { return middles_.at(i); }
  const ShortForest& g() const { return g_; }
  // Triple accessors (factor 0).
  const ShortForest& f() const { return forests_.front(); }
  const MiddleTree& t() const { return middles_.front(); }

  std::size_t leaves() const {
    std::size_t n = g_.leaves();
    for (std::size_t i = 0; i < factors(); ++i) n += forests_[i].leaves() + middles_[i].leaves();
    return n;
  }
  std::size_t dimension() const {
    std::size_t d = g_.dimension();
    for (std::size_t i = 0; i < factors(); ++i) d += forests_[i].dimension() + middles_[i].dimension();
    return d;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < factors(); ++i) out += forests_[i].str() + " | " + middles_[i].str() + " | ";
    return out + g_.str();
  }

  bool operator==(const Composite&) const = default;
  auto operator<=>(const Composite&) const = default;

 private:
  std::vector<ShortForest> forests_;
  std::vector<MiddleTree> middles_;
  ShortForest g_;
};

// Basis elements of T(aⁿ, m; m).
using FTFTriple = Composite;

inline FTFTriple make_triple(ShortForest f, MiddleTree t, ShortForest g) {
  return FTFTriple(std::move(f), std::move(t), std::move(g));
}

// Which tree of a triple a flattened tree index refers to.
struct TripleTreeRef {
  enum class Part { F, T, G } part;
  std::size_t index;  // tree index inside F or G; 0 for T
};

inline TripleTreeRef locate_tree(const FTFTriple& x, std::size_t flat) {
  if (x.factors() != 1) throw std::invalid_argument("locate_tree: expected a triple");
  const std::size_t tf = x.f().tree_count();
  if (flat < tf) return {TripleTreeRef::Part::F, flat};
  if (flat == tf) return {TripleTreeRef::Part::T, 0};
  if (flat - tf - 1 < x.g().tree_count()) return {TripleTreeRef::Part::G, flat - tf - 1};
  throw std::out_of_range("triple tree index " + std::to_string(flat) + " out of range");
}

// All neighbouring-branch positions of a triple, in flattened addressing.
inline std::vector<BranchGap> gaps(const FTFTriple& x) {
  std::vector<BranchGap> out;
  std::size_t flat = 0;
  for (const auto& t : x.f().trees()) {
    for (std::size_t b = 0; b + 1 < t.size(); ++b) out.push_back({flat, b});
    ++flat;
  }
  for (std::size_t b = 0; b + 1 < x.t().branches().size(); ++b) out.push_back({flat, b});
  ++flat;
  for (const auto& t : x.g().trees()) {
    for (std::size_t b = 0; b + 1 < t.size(); ++b) out.push_back({flat, b});
    ++flat;
  }
  return out;
}

inline FTFTriple unite(const FTFTriple& x, BranchGap g) {
  const auto ref = locate_tree(x, g.tree);
  switch (ref.part) {
    case TripleTreeRef::Part::F:
      return make_triple(unite(x.f(), {ref.index, g.left_branch}), x.t(), x.g());
    case TripleTreeRef::Part::G:
      return make_triple(x.f(), x.t(), unite(x.g(), {ref.index, g.left_branch}));
    case TripleTreeRef::Part::T:
      break;
  }
  detail::check_gap({x.t().branches()}, {0, g.left_branch});
  return make_triple(x.f(), MiddleTree(detail::unite_branches(x.t().branches(), g.left_branch)),
                     x.g());
}

// S on a gap inside F or G. The middle tree has the two one-sided variants below.
inline FTFTriple separate(const FTFTriple& x, BranchGap g) {
  const auto ref = locate_tree(x, g.tree);
  switch (ref.part) {
    case TripleTreeRef::Part::F:
      return make_triple(separate(x.f(), {ref.index, g.left_branch}), x.t(), x.g());
    case TripleTreeRef::Part::G:
      return make_triple(x.f(), x.t(), separate(x.g(), {ref.index, g.left_branch}));
    case TripleTreeRef::Part::T:
      break;
  }
  throw std::invalid_argument("separate: gap lies in the middle tree; use separate_middle");
}

enum class Side { Left, Right };

// S_l = (F ∘ T_l, T_r, G) and S_r = (F, T_l, T_r ∘ G), `left_branch` indexing the middle tree.
inline FTFTriple separate_middle(const FTFTriple& x, std::size_t left_branch, Side side) {
  detail::check_gap({x.t().branches()}, {0, left_branch});
  auto [l, r] = detail::split_branches(x.t().branches(), left_branch);
  if (side == Side::Left) return make_triple(concat(x.f(), l), MiddleTree(std::move(r)), x.g());
  return make_triple(x.f(), MiddleTree(std::move(l)), concat(r, x.g()));
}

inline FTFTriple separate_middle(const FTFTriple& x, BranchGap g, Side side) {
  if (locate_tree(x, g.tree).part != TripleTreeRef::Part::T)
    throw std::invalid_argument("separate_middle: gap is not in the middle tree");
  return separate_middle(x, g.left_branch, side);
}

}  // namespace opair::combinat
