#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

#include "opair/combinat/tree.hpp"

namespace opair::families {

using combinat::TreeNode;

namespace detail {

// Ordered compositions of n into at least `min_parts` positive parts.
inline std::vector<std::vector<std::size_t>> compositions(std::size_t n, std::size_t min_parts) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  for (std::size_t cuts = 0; cuts < (std::size_t{1} << (n - 1)); ++cuts) {
    std::vector<std::size_t> parts;
    std::size_t run = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (cuts >> i & 1) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    if (parts.size() >= min_parts) out.push_back(std::move(parts));
  }
  return out;
}

// Every way of choosing one tree from each slot, as vertices over those choices.
inline void product_into(const std::vector<const std::vector<TreeNode>*>& slots, bool painted,
                         std::vector<TreeNode>& out) {
  std::vector<std::size_t> pick(slots.size(), 0);
  for (const auto* s : slots)
    if (s->empty()) return;
  while (true) {
    TreeNode v{painted, {}};
    for (std::size_t i = 0; i < slots.size(); ++i) v.children.push_back((*slots[i])[pick[i]]);
    out.push_back(std::move(v));
    std::size_t i = slots.size();
    while (i > 0) {
      --i;
      if (++pick[i] < slots[i]->size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
    if (slots.empty()) return;
  }
}

inline std::recursive_mutex& memo_mutex() {
  static std::recursive_mutex m;
  return m;
}

}  // namespace detail

// Unpainted planar trees with n leaves whose internal vertices have arity >= 2.
inline const std::vector<TreeNode>& planar_trees(std::size_t n) {
  static std::map<std::size_t, std::vector<TreeNode>> memo;
  std::lock_guard lock(detail::memo_mutex());
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<TreeNode> out;
  if (n == 1) {
    out.push_back(combinat::leaf());
  } else {
    for (const auto& parts : detail::compositions(n, 2)) {
      std::vector<const std::vector<TreeNode>*> slots;
      for (auto p : parts) slots.push_back(&planar_trees(p));
      detail::product_into(slots, false, out);
    }
  }
  return memo.emplace(n, std::move(out)).first->second;
}

// Painted trees with n leaves: a paint-boundary vertex over unpainted trees, or
// a painted vertex with at least two painted subtrees.
inline const std::vector<TreeNode>& painted_trees(std::size_t n) {
  static std::map<std::size_t, std::vector<TreeNode>> memo;
  std::lock_guard lock(detail::memo_mutex());
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<TreeNode> out;
  for (const auto& parts : detail::compositions(n, 1)) {
    std::vector<const std::vector<TreeNode>*> slots;
    for (auto p : parts) slots.push_back(&planar_trees(p));
    detail::product_into(slots, true, out);
  }
  for (const auto& parts : detail::compositions(n, 2)) {
    std::vector<const std::vector<TreeNode>*> slots;
    for (auto p : parts) slots.push_back(&painted_trees(p));
    detail::product_into(slots, true, out);
  }
  return memo.emplace(n, std::move(out)).first->second;
}

}  // namespace opair::families
