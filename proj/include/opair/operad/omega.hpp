#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "opair/chain/chain_complex.hpp"
#include "opair/chain/gf2_sum.hpp"
#include "opair/combinat/forest.hpp"

namespace opair::operad {

using combinat::BranchList;
using combinat::ShortForest;

using OmegaElement = chain::Gf2Sum<ShortForest>;

// d(F) = Σ U(F,B) + Σ S(F,B) over neighbouring branch pairs B.
inline OmegaElement d_omega(const ShortForest& f) {
  OmegaElement out;
  for (auto g : combinat::gaps(f)) {
    out.toggle(combinat::unite(f, g));
    out.toggle(combinat::separate(f, g));
  }
  return out;
}

inline OmegaElement d_omega(const OmegaElement& x) {
  return x.map([](const ShortForest& f) { return d_omega(f); });
}

// Every branch grows by the sum of `factors` over its leaves: the result of
// feeding Ω(a^k; a) into each algebra input (that space is one-dimensional).
inline BranchList multiply_leaves(const BranchList& tree, const std::vector<std::size_t>& factors,
                                  std::size_t& cursor) {
  BranchList out;
  for (auto c : tree) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < c; ++i) {
      const std::size_t k = factors.at(cursor++);
      if (k == 0) throw std::invalid_argument("leaf multiplication by zero inputs");
      s += k;
    }
    out.push_back(s);
  }
  return out;
}

inline ShortForest multiply_leaves(const ShortForest& f, const std::vector<std::size_t>& factors) {
  if (factors.size() != f.leaves())
    throw std::invalid_argument("multiply_leaves: need one factor per leaf");
  std::size_t cursor = 0;
  std::vector<BranchList> trees;
  for (const auto& t : f.trees()) trees.push_back(multiply_leaves(t, factors, cursor));
  return ShortForest(std::move(trees));
}

// Inputs of an operation of Ω(aⁿ, m; m): arities of the a-colored operations
// fed into the n algebra inputs, and the forest fed into the module input.
struct OmegaInputs {
  std::vector<std::size_t> a_arities;
  ShortForest m_input;
};

// Operadic composition: leaf multiplication at the algebra inputs,
// concatenation at the module input (the outer forest's trees stay on the left).
inline ShortForest compose_omega(const ShortForest& outer, const OmegaInputs& in) {
  return combinat::concat(multiply_leaves(outer, in.a_arities), in.m_input);
}

// Partial composition at the module input.
inline ShortForest compose_m(const ShortForest& outer, const ShortForest& inner) {
  return combinat::concat(outer, inner);
}

// All short forests with n leaves.
inline std::vector<ShortForest> enumerate_forests(std::size_t n) {
  std::vector<ShortForest> out;
  if (n == 0) return {ShortForest()};
  // `cuts` splits the leaves into branches, `split` the branches into trees.
  for (std::size_t cuts = 0; cuts < (std::size_t{1} << (n - 1)); ++cuts) {
    BranchList branches;
    std::size_t run = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (cuts >> i & 1) {
        branches.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    branches.push_back(run);
    const std::size_t b = branches.size();
    for (std::size_t split = 0; split < (std::size_t{1} << (b - 1)); ++split) {
      std::vector<BranchList> trees{{branches[0]}};
      for (std::size_t i = 1; i < b; ++i) {
        if (split >> (i - 1) & 1) trees.emplace_back();
        trees.back().push_back(branches[i]);
      }
      out.emplace_back(std::move(trees));
    }
  }
  return out;
}

namespace detail {

template <class T, class Boundary>
chain::ChainComplex graded_complex(const std::vector<T>& elements, Boundary&& boundary) {
  std::vector<std::vector<std::string>> basis;
  for (const auto& e : elements) {
    const std::size_t d = e.dimension();
    if (basis.size() <= d) basis.resize(d + 1);
    basis[d].push_back(e.str());
  }
  for (auto& b : basis) std::sort(b.begin(), b.end());
  return chain::complex_from_boundary(std::move(basis), std::forward<Boundary>(boundary));
}

}  // namespace detail

// Ω(aⁿ, m; m) with the forest differential.
inline chain::ChainComplex omega_complex(std::size_t n) {
  return detail::graded_complex(
      enumerate_forests(n), [](std::size_t, const std::string& label) {
        std::vector<std::string> out;
        for (const auto& f : d_omega(ShortForest::parse(label))) out.push_back(f.str());
        return out;
      });
}

}  // namespace opair::operad
