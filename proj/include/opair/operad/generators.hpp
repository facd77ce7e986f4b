#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opair/chain/gf2_sum.hpp"
#include "opair/combinat/tree.hpp"

namespace opair::operad {

using TreeSum = chain::Gf2Sum<std::string>;

namespace detail {

inline combinat::TreeNode corolla_node(std::size_t n, bool painted) {
  return combinat::node(std::vector<combinat::TreeNode>(n), painted);
}

}  // namespace detail

// d(μ_n) = Σ μ_{i+1+k}(id^i ⊗ μ_j ⊗ id^k) over i + j + k = n, 2 <= j < n,
// as trees of K(n).
inline TreeSum d_mu(std::size_t n) {
  TreeSum out;
  for (std::size_t j = 2; j < n; ++j) {
    for (std::size_t i = 0; i + j <= n; ++i) {
      const std::size_t k = n - i - j;
      auto outer = detail::corolla_node(i + 1 + k, false);
      outer.children[i] = detail::corolla_node(j, false);
      out.toggle(combinat::encode(outer));
    }
  }
  return out;
}

// d(f_n) = Σ f_{r+1+t}(id^r ⊗ μ_s ⊗ id^t) over r + s + t = n, s >= 2
//        + Σ μ_r(f_{i_1}, ..., f_{i_r}) over r >= 2, i_1 + ... + i_r = n,
// as painted trees of J(n): f_k is a paint-boundary corolla, μ_r a painted one.
inline TreeSum d_f(std::size_t n) {
  TreeSum out;
  for (std::size_t s = 2; s <= n; ++s) {
    for (std::size_t r = 0; r + s <= n; ++r) {
      const std::size_t t = n - r - s;
      auto outer = detail::corolla_node(r + 1 + t, true);
      outer.children[r] = detail::corolla_node(s, false);
      out.toggle(combinat::encode(outer));
    }
  }
  // Compositions of n into at least two parts.
  for (std::size_t cuts = 1; n >= 2 && cuts < (std::size_t{1} << (n - 1)); ++cuts) {
    combinat::TreeNode top{true, {}};
    std::size_t run = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (cuts >> i & 1) {
        top.children.push_back(detail::corolla_node(run, true));
        run = 1;
      } else {
        ++run;
      }
    }
    top.children.push_back(detail::corolla_node(run, true));
    out.toggle(combinat::encode(top));
  }
  return out;
}

}  // namespace opair::operad
