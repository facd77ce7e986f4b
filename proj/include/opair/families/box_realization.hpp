#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "opair/combinat/cube_word.hpp"
#include "opair/combinat/nice_expression.hpp"
#include "opair/families/family.hpp"

namespace opair::families {

// An axis-parallel box in [0,1]^n. Coordinates are stored in units of 1/2,
// so every endpoint is 0, 1 or 2.
struct GeomBox {
  std::vector<std::pair<int, int>> sides;

  std::size_t dimension() const {
    std::size_t d = 0;
    for (auto [lo, hi] : sides) d += lo != hi;
    return d;
  }
  std::vector<int> min_vertex() const {
    std::vector<int> v;
    for (auto [lo, hi] : sides) v.push_back(lo);
    return v;
  }
  std::vector<int> max_vertex() const {
    std::vector<int> v;
    for (auto [lo, hi] : sides) v.push_back(hi);
    return v;
  }
  bool contains(const GeomBox& other) const {
    if (other.sides.size() != sides.size()) return false;
    for (std::size_t i = 0; i < sides.size(); ++i)
      if (other.sides[i].first < sides[i].first || other.sides[i].second > sides[i].second)
        return false;
    return true;
  }
  GeomBox times(int lo, int hi) const {
    GeomBox b = *this;
    b.sides.emplace_back(lo, hi);
    return b;
  }
  // "(1, [0,1/2])"-style rendering.
  std::string str() const {
    auto num = [](int h) -> std::string { return h == 0 ? "0" : h == 1 ? "1/2" : "1"; };
    std::string out = "(";
    for (std::size_t i = 0; i < sides.size(); ++i) {
      if (i) out += ", ";
      auto [lo, hi] = sides[i];
      out += lo == hi ? num(lo) : "[" + num(lo) + "," + num(hi) + "]";
    }
    return out + ")";
  }

  bool operator==(const GeomBox&) const = default;
  auto operator<=>(const GeomBox&) const = default;
};

// The face of [0,1]^m named by a cube word.
inline GeomBox cube_box(const combinat::CubeWord& w) {
  GeomBox b;
  for (char ch : w.letters())
    b.sides.push_back(ch == 'a' ? std::pair{0, 0} : ch == 'b' ? std::pair{0, 2} : std::pair{2, 2});
  return b;
}

// Facet names of F_n: d⁰_i (1 <= i <= n), d¹_i (2 <= i <= n), d²_i (1 <= i <= n).
struct FacetLabel {
  int kind = 0;
  std::size_t index = 1;

  std::string str() const { return "d" + std::to_string(kind) + "_" + std::to_string(index); }
  bool operator==(const FacetLabel&) const = default;
  auto operator<=>(const FacetLabel&) const = default;
};

using FacetSet = std::set<FacetLabel>;

struct BoxComplex {
  std::vector<GeomBox> faces;
  std::map<FacetLabel, GeomBox> facets;
};

// F_1 is the interval; F_n comes from F_{n-1} × [0,1] with X_{n-1} × [0,1]
// split at 1/2, where X_1 = {1} and X_n = X_{n-1} × [1/2,1].
inline BoxComplex freehedron_boxes(std::size_t n) {
  if (n == 0) return {{GeomBox{}}, {}};
  BoxComplex c;
  c.faces = {GeomBox{{{0, 0}}}, GeomBox{{{2, 2}}}, GeomBox{{{0, 2}}}};
  c.facets[{0, 1}] = GeomBox{{{0, 0}}};
  c.facets[{2, 1}] = GeomBox{{{2, 2}}};
  GeomBox x{{{2, 2}}};
  for (std::size_t m = 2; m <= n; ++m) {
    BoxComplex next;
    for (const auto& f : c.faces) {
      next.faces.push_back(f.times(0, 0));
      next.faces.push_back(f.times(2, 2));
      if (!x.contains(f)) {
        next.faces.push_back(f.times(0, 2));
      } else {
        next.faces.push_back(f.times(0, 1));
        next.faces.push_back(f.times(1, 1));
        next.faces.push_back(f.times(1, 2));
      }
    }
    for (const auto& [label, box] : c.facets) {
      if (label.kind == 2 && label.index == m - 1) {
        next.facets[{2, m - 1}] = box.times(0, 1);
        next.facets[{2, m}] = box.times(1, 2);
      } else {
        next.facets[label] = box.times(0, 2);
      }
    }
    GeomBox whole;
    for (std::size_t i = 0; i + 1 < m; ++i) whole.sides.emplace_back(0, 2);
    next.facets[{0, m}] = whole.times(0, 0);
    next.facets[{1, m}] = whole.times(2, 2);
    x = x.times(1, 2);
    c = std::move(next);
  }
  std::sort(c.faces.begin(), c.faces.end());
  return c;
}

inline FacetSet box_facet_set(const GeomBox& b, const std::map<FacetLabel, GeomBox>& facets) {
  FacetSet out;
  for (const auto& [label, box] : facets)
    if (box.contains(b)) out.insert(label);
  return out;
}

// The nice expression naming a facet:
//   d⁰_i ↔ 0…i−1][i−1…n]|,  d¹_i ↔ 0…n without i−1 ]|,  d²_i ↔ i…n]|[0…i].
inline combinat::NiceExpression facet_expression(FacetLabel f, std::size_t n) {
  auto range = [](std::size_t a, std::size_t b) {
    combinat::Stretch s;
    for (std::size_t v = a; v <= b; ++v) s.push_back(v);
    return s;
  };
  const std::size_t i = f.index;
  switch (f.kind) {
    case 0: return combinat::NiceExpression({range(0, i - 1), range(i - 1, n)}, 0);
    case 1: {
      auto s = range(0, n);
      s.erase(s.begin() + static_cast<long>(i - 1));
      return combinat::NiceExpression({s}, 0);
    }
    default: return combinat::NiceExpression({range(0, i), range(i, n)}, 1);
  }
}

inline std::vector<FacetLabel> facet_labels(std::size_t n) {
  std::vector<FacetLabel> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back({0, i});
  for (std::size_t i = 2; i <= n; ++i) out.push_back({1, i});
  for (std::size_t i = 1; i <= n; ++i) out.push_back({2, i});
  return out;
}

// The face poset of F_n read off from face transformations.
class FreehedronPoset {
 public:
  explicit FreehedronPoset(std::size_t n) : n_(n) {
    for (const auto& g : enumerate_faces(Family::Freehedron, n))
      for (const auto& s : g) {
        index_.emplace(s, labels_.size());
        labels_.push_back(s);
      }
    children_.resize(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (const auto& b : boundary(Family::Freehedron, labels_[i])) children_[i].push_back(index_.at(b));
    // Labels are graded ascending, so every child precedes its parent.
    below_.assign(labels_.size(), std::vector<bool>(labels_.size(), false));
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      below_[i][i] = true;
      for (auto c : children_[i])
        for (std::size_t j = 0; j < labels_.size(); ++j)
          if (below_[c][j]) below_[i][j] = true;
    }
  }

  std::size_t n() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index(const std::string& s) const { return index_.at(s); }
  const std::vector<std::size_t>& children(std::size_t i) const { return children_[i]; }
  // Is face j contained in face i?
  bool contains(std::size_t i, std::size_t j) const { return below_[i][j]; }

  // The facets whose closure contains each face, by downward reachability.
  std::vector<FacetSet> facet_sets() const {
    std::map<std::string, FacetLabel> named;
    for (auto f : facet_labels(n_)) named.emplace(facet_expression(f, n_).str(), f);
    std::vector<FacetSet> out(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      for (std::size_t j = 0; j < labels_.size(); ++j) {
        if (!below_[j][i] || i == j) continue;
        if (auto it = named.find(labels_[j]); it != named.end()) out[i].insert(it->second);
      }
      if (auto it = named.find(labels_[i]); it != named.end()) out[i].insert(it->second);
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::vector<bool>> below_;
};

inline FacetSet facet_set(const combinat::NiceExpression& e) {
  FreehedronPoset p(e.n());
  return p.facet_sets()[p.index(e.str())];
}

// Nice expression ↦ box, matched through facet sets. Throws when the match is
// not a bijection.
inline std::map<std::string, GeomBox> box_realization(std::size_t n) {
  const FreehedronPoset poset(n);
  const auto sets = poset.facet_sets();
  const auto boxes = freehedron_boxes(n);
  std::map<FacetSet, std::size_t> by_set;
  for (std::size_t i = 0; i < boxes.faces.size(); ++i) {
    if (!by_set.emplace(box_facet_set(boxes.faces[i], boxes.facets), i).second)
      throw std::runtime_error("box_realization: two boxes share the facet set of " +
                               boxes.faces[i].str());
  }
  if (boxes.faces.size() != poset.labels().size())
    throw std::runtime_error("box_realization: " + std::to_string(boxes.faces.size()) + " boxes but " +
                             std::to_string(poset.labels().size()) + " expressions");
  std::map<std::string, GeomBox> out;
  std::set<std::size_t> used;
  for (std::size_t i = 0; i < poset.labels().size(); ++i) {
    auto it = by_set.find(sets[i]);
    if (it == by_set.end() || !used.insert(it->second).second)
      throw std::runtime_error("box_realization: no unique box for " + poset.labels()[i]);
    out.emplace(poset.labels()[i], boxes.faces[it->second]);
  }
  return out;
}

}  // namespace opair::families
