#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "opair/chain/chain_complex.hpp"
#include "opair/combinat/contractions.hpp"
#include "opair/combinat/cube_word.hpp"
#include "opair/combinat/nice_expression.hpp"
#include "opair/combinat/tree.hpp"
#include "opair/families/trees.hpp"

namespace opair::families {

enum class Family { K, J, Cube, Freehedron };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::K: return "K";
    case Family::J: return "J";
    case Family::Cube: return "Cube";
    case Family::Freehedron: return "Freehedron";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "K") return Family::K;
  if (s == "J") return Family::J;
  if (s == "Cube" || s == "I") return Family::Cube;
  if (s == "Freehedron" || s == "F") return Family::Freehedron;
  return std::nullopt;
}

struct Range {
  std::size_t min;
  std::size_t max;
};

// Supported parameters. K(n), J(n): n leaves. Cube: I^n. Freehedron: F_n.
inline Range supported_range(Family f) {
  switch (f) {
    case Family::K: return {1, 8};
    case Family::J: return {1, 6};
    case Family::Cube: return {0, 8};
    case Family::Freehedron: return {0, 7};
  }
  return {0, 0};
}

inline void check_range(Family f, std::size_t n) {
  const auto r = supported_range(f);
  if (n < r.min || n > r.max)
    throw std::out_of_range(to_string(f) + "(" + std::to_string(n) + ") is outside the supported range " +
                            std::to_string(r.min) + ".." + std::to_string(r.max));
}

// Dimension of a face given by its canonical encoding.
inline std::size_t face_dimension(Family f, std::string_view label) {
  switch (f) {
    case Family::K: return combinat::PlanarTree::parse(label).dimension();
    case Family::J: return combinat::PaintedTree::parse(label).dimension();
    case Family::Cube: return combinat::CubeWord::parse(label).dimension();
    case Family::Freehedron: return combinat::NiceExpression::parse(label).dimension();
  }
  return 0;
}

// The polytope's dimension.
inline std::size_t top_dimension(Family f, std::size_t n) {
  switch (f) {
    case Family::K: return n - 1 == 0 ? 0 : n - 2;
    case Family::J: return n - 1;
    case Family::Cube:
    case Family::Freehedron: return n;
  }
  return 0;
}

// All faces, graded by dimension, each degree sorted lexicographically.
inline std::vector<std::vector<std::string>> enumerate_faces(Family f, std::size_t n) {
  check_range(f, n);
  std::vector<std::vector<std::string>> graded(top_dimension(f, n) + 1);
  auto put = [&](std::size_t dim, std::string label) {
    if (dim >= graded.size()) throw std::logic_error("enumerate_faces: dimension out of range");
    graded[dim].push_back(std::move(label));
  };
  switch (f) {
    case Family::K:
      for (const auto& t : planar_trees(n)) {
        combinat::PlanarTree p(t);
        put(p.dimension(), p.str());
      }
      break;
    case Family::J:
      for (const auto& t : painted_trees(n)) {
        combinat::PaintedTree p(t);
        put(p.dimension(), p.str());
      }
      break;
    case Family::Cube:
      for (const auto& w : combinat::enumerate_cube_words(n)) put(w.dimension(), w.str());
      break;
    case Family::Freehedron:
      for (const auto& e : combinat::enumerate_nice_expressions(n)) put(e.dimension(), e.str());
      break;
  }
  for (auto& g : graded) std::sort(g.begin(), g.end());
  return graded;
}

inline std::vector<std::size_t> f_vector(Family f, std::size_t n) {
  std::vector<std::size_t> out;
  for (const auto& g : enumerate_faces(f, n)) out.push_back(g.size());
  return out;
}

// Codimension-one subfaces of a face, as canonical encodings.
inline std::vector<std::string> boundary(Family f, std::string_view label) {
  std::vector<std::string> out;
  switch (f) {
    case Family::K:
      for (const auto& t : combinat::associahedron_expansions(combinat::PlanarTree::parse(label)))
        out.push_back(t.str());
      break;
    case Family::J:
      for (const auto& t : combinat::multiplihedron_expansions(combinat::PaintedTree::parse(label)))
        out.push_back(t.str());
      break;
    case Family::Cube:
      for (const auto& w : combinat::cube_boundary(combinat::CubeWord::parse(label)))
        out.push_back(w.str());
      break;
    case Family::Freehedron:
      for (const auto& e : combinat::face_transformations(combinat::NiceExpression::parse(label)))
        out.push_back(e.str());
      break;
  }
  return out;
}

inline chain::ChainComplex complex(Family f, std::size_t n) {
  return chain::complex_from_boundary(enumerate_faces(f, n), [f](std::size_t, const std::string& label) {
    return boundary(f, label);
  });
}

// Encoding of the top cell.
inline std::string top_cell(Family f, std::size_t n) {
  switch (f) {
    case Family::K: return combinat::PlanarTree::corolla(n).str();
    case Family::J: return combinat::PaintedTree::corolla(n).str();
    case Family::Cube: return combinat::CubeWord(std::string(n, 'b')).str();
    case Family::Freehedron: return combinat::NiceExpression::top(n).str();
  }
  return "";
}

}  // namespace opair::families
