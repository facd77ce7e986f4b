#pragma once

#include <cstddef>
#include <vector>

#include "opair/combinat/forest.hpp"
#include "opair/combinat/nice_expression.hpp"

namespace opair::correspondences {

using combinat::BranchList;
using combinat::FTFTriple;
using combinat::NiceExpression;
using combinat::ShortForest;
using combinat::Stretch;

// ι(a_1 < ... < a_m): one branch per gap, the gap a_2 − a_1 rightmost.
inline BranchList iota(const Stretch& s) {
  BranchList out;
  for (std::size_t j = s.size(); j-- > 1;) out.push_back(s[j] - s[j - 1]);
  return out;
}

// Every stretch gives a tree: s_l the middle tree, s_k .. s_{l+1} the trees of
// F from left to right, s_{l-1} .. s_0 those of G.
inline FTFTriple bijection_I(const NiceExpression& e) {
  const auto& ss = e.stretches();
  const std::size_t l = e.bar();
  std::vector<BranchList> f, g;
  for (std::size_t i = ss.size(); i-- > l + 1;) f.push_back(iota(ss[i]));
  for (std::size_t i = l; i-- > 0;) g.push_back(iota(ss[i]));
  return combinat::make_triple(ShortForest(std::move(f)), combinat::MiddleTree(iota(ss[l])),
                               ShortForest(std::move(g)));
}

// Reads the triple from its rightmost branch leftwards, starting at 0.
inline NiceExpression inverse_I(const FTFTriple& x) {
  std::vector<Stretch> stretches;
  std::size_t p = 0;
  auto take = [&](const BranchList& tree) {
    Stretch s{p};
    for (std::size_t j = tree.size(); j-- > 0;) {
      p += tree[j];
      s.push_back(p);
    }
    stretches.push_back(std::move(s));
  };
  const auto& g = x.g().trees();
  for (std::size_t i = g.size(); i-- > 0;) take(g[i]);
  const std::size_t bar = stretches.size();
  take(x.t().branches());
  const auto& f = x.f().trees();
  for (std::size_t i = f.size(); i-- > 0;) take(f[i]);
  return NiceExpression(std::move(stretches), bar);
}

}  // namespace opair::correspondences
