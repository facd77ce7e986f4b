#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opair/chain/chain_complex.hpp"
#include "opair/chain/gf2_sum.hpp"
#include "opair/combinat/forest.hpp"
#include "opair/operad/omega.hpp"

namespace opair::operad {

using combinat::Composite;
using combinat::FTFTriple;
using combinat::MiddleTree;

using TElement = chain::Gf2Sum<Composite>;
// Elements of T ⊗_Ω T: two-factor composites (F₁, T₁, F₂, T₂, G₂).
using TTensorTElement = chain::Gf2Sum<Composite>;

namespace detail {

inline Composite with_forest(const Composite& x, std::size_t i, ShortForest f) {
  auto forests = x.forests();
  forests[i] = std::move(f);
  return Composite(std::move(forests), x.middles(), x.g());
}

inline Composite with_g(const Composite& x, ShortForest g) {
  return Composite(x.forests(), x.middles(), std::move(g));
}

// The forest to the right of middle tree i.
inline const ShortForest& after_middle(const Composite& x, std::size_t i) {
  return i + 1 < x.factors() ? x.forest(i + 1) : x.g();
}

inline Composite with_after_middle(Composite x, std::size_t i, ShortForest f) {
  return i + 1 < x.factors() ? with_forest(x, i + 1, std::move(f)) : with_g(x, std::move(f));
}

inline Composite with_middle(const Composite& x, std::size_t i, MiddleTree t) {
  auto middles = x.middles();
  middles[i] = std::move(t);
  return Composite(x.forests(), std::move(middles), x.g());
}

}  // namespace detail

// Factor-wise differential. Forests carry U and S terms; a middle tree carries
// U terms, the one-sided separations S_l, S_r, and, when it is not the unit,
// the two terms that move it whole into a neighbouring forest.
inline TElement d_T(const Composite& x) {
  TElement out;
  for (std::size_t i = 0; i < x.factors(); ++i)
    for (const auto& f : d_omega(x.forest(i))) out.toggle(detail::with_forest(x, i, f));
  for (const auto& g : d_omega(x.g())) out.toggle(detail::with_g(x, g));
  for (std::size_t i = 0; i < x.factors(); ++i) {
    const auto& t = x.middle(i).branches();
    for (std::size_t b = 0; b + 1 < t.size(); ++b) {
      BranchList united(t.begin(), t.begin() + static_cast<long>(b));
      united.push_back(t[b] + t[b + 1]);
      united.insert(united.end(), t.begin() + static_cast<long>(b) + 2, t.end());
      out.toggle(detail::with_middle(x, i, MiddleTree(std::move(united))));

      BranchList lo(t.begin(), t.begin() + static_cast<long>(b) + 1);
      BranchList hi(t.begin() + static_cast<long>(b) + 1, t.end());
      auto left = detail::with_middle(x, i, MiddleTree(hi));
      out.toggle(detail::with_forest(left, i, combinat::concat(x.forest(i), lo)));
      auto right = detail::with_middle(x, i, MiddleTree(lo));
      out.toggle(detail::with_after_middle(right, i, combinat::concat(hi, detail::after_middle(x, i))));
    }
    if (!x.middle(i).is_unit()) {
      auto unit = detail::with_middle(x, i, MiddleTree());
      out.toggle(detail::with_forest(unit, i, combinat::concat(x.forest(i), t)));
      out.toggle(detail::with_after_middle(unit, i, combinat::concat(t, detail::after_middle(x, i))));
    }
  }
  return out;
}

inline TElement d_T(const TElement& x) {
  return x.map([](const Composite& c) { return d_T(c); });
}

// Left action ω·x: ω composed at the module output of x, i.e. placed before F₁.
inline Composite act_left(const ShortForest& omega, const Composite& x) {
  return detail::with_forest(x, 0, combinat::concat(omega, x.forest(0)));
}

// Right action x·ω at the module input: ω placed after G.
inline Composite act_right(const Composite& x, const ShortForest& omega) {
  return detail::with_g(x, combinat::concat(x.g(), omega));
}

// Right action at the algebra inputs: leaf i receives an a-colored operation
// of arity factors[i].
inline Composite act_leaves(const Composite& x, const std::vector<std::size_t>& factors) {
  if (factors.size() != x.leaves()) throw std::invalid_argument("act_leaves: need one factor per leaf");
  std::size_t cursor = 0;
  auto grow = [&](const ShortForest& f) {
    std::vector<BranchList> trees;
    for (const auto& t : f.trees()) trees.push_back(multiply_leaves(t, factors, cursor));
    return ShortForest(std::move(trees));
  };
  std::vector<ShortForest> forests;
  std::vector<MiddleTree> middles;
  for (std::size_t i = 0; i < x.factors(); ++i) {
    forests.push_back(grow(x.forest(i)));
    middles.emplace_back(multiply_leaves(x.middle(i).branches(), factors, cursor));
  }
  auto g = grow(x.g());
  return Composite(std::move(forests), std::move(middles), std::move(g));
}

enum class ActionSide { Left, Right };

// act_T(ω, x, side): ω·x or x·ω.
inline Composite act_T(const ShortForest& omega, const Composite& x, ActionSide side) {
  return side == ActionSide::Left ? act_left(omega, x) : act_right(x, omega);
}

// ε(F, T, G) = F ∘ G when T is the unit, else 0.
inline std::optional<ShortForest> counit_eps(const FTFTriple& x) {
  if (x.factors() != 1) throw std::invalid_argument("counit_eps: expected a triple");
  if (!x.t().is_unit()) return std::nullopt;
  return combinat::concat(x.f(), x.g());
}

inline OmegaElement counit_eps(const TElement& x) {
  OmegaElement out;
  for (const auto& c : x)
    if (auto e = counit_eps(c)) out.toggle(*e);
  return out;
}

// ε applied to factor i of a composite with at least two factors.
inline std::optional<Composite> counit_at(const Composite& x, std::size_t i) {
  if (x.factors() < 2 || i >= x.factors())
    throw std::invalid_argument("counit_at: factor index out of range");
  if (!x.middle(i).is_unit()) return std::nullopt;
  std::vector<ShortForest> forests;
  std::vector<MiddleTree> middles;
  ShortForest g = x.g();
  for (std::size_t j = 0; j < x.factors(); ++j) {
    if (j == i) continue;
    if (j == i + 1) {
      forests.push_back(combinat::concat(x.forest(i), x.forest(j)));
    } else {
      forests.push_back(x.forest(j));
    }
    middles.push_back(x.middle(j));
  }
  if (i + 1 == x.factors()) {
    g = combinat::concat(x.forest(i), x.g());
  }
  return Composite(std::move(forests), std::move(middles), std::move(g));
}

inline TElement counit_at(const TElement& x, std::size_t i) {
  TElement out;
  for (const auto& c : x)
    if (auto e = counit_at(c, i)) out.toggle(*e);
  return out;
}

// c applied to factor i: Σ over splittings T = T'·T'' of its middle tree, with
// T' in the outer factor and an empty forest between the two halves.
inline TElement comult_at(const Composite& x, std::size_t i) {
  if (i >= x.factors()) throw std::invalid_argument("comult_at: factor index out of range");
  TElement out;
  const auto& t = x.middle(i).branches();
  for (std::size_t j = 0; j <= t.size(); ++j) {
    auto forests = x.forests();
    auto middles = x.middles();
    middles[i] = MiddleTree(BranchList(t.begin(), t.begin() + static_cast<long>(j)));
    middles.insert(middles.begin() + static_cast<long>(i) + 1,
                   MiddleTree(BranchList(t.begin() + static_cast<long>(j), t.end())));
    forests.insert(forests.begin() + static_cast<long>(i) + 1, ShortForest());
    out.toggle(Composite(std::move(forests), std::move(middles), x.g()));
  }
  return out;
}

inline TTensorTElement comult_c(const FTFTriple& x) {
  if (x.factors() != 1) throw std::invalid_argument("comult_c: expected a triple");
  return comult_at(x, 0);
}

inline TElement comult_at(const TElement& x, std::size_t i) {
  return x.map([i](const Composite& c) { return comult_at(c, i); });
}

namespace detail {

inline std::vector<MiddleTree> middle_trees(std::size_t n) {
  if (n == 0) return {MiddleTree()};
  std::vector<MiddleTree> out;
  for (std::size_t cuts = 0; cuts < (std::size_t{1} << (n - 1)); ++cuts) {
    BranchList b;
    std::size_t run = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (cuts >> i & 1) {
        b.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    b.push_back(run);
    out.emplace_back(std::move(b));
  }
  return out;
}

}  // namespace detail

// All r-factor composites with n leaves; r = 1 gives the basis of T(aⁿ, m; m).
inline std::vector<Composite> enumerate_composites(std::size_t n, std::size_t r) {
  if (r == 0) throw std::invalid_argument("enumerate_composites: need at least one factor");
  std::vector<Composite> out;
  std::vector<ShortForest> forests;
  std::vector<MiddleTree> middles;
  auto rec = [&](auto&& self, std::size_t slot, std::size_t left) -> void {
    if (slot == 2 * r) {
      for (const auto& g : enumerate_forests(left)) out.emplace_back(forests, middles, g);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      if (slot % 2 == 0) {
        for (const auto& f : enumerate_forests(k)) {
          forests.push_back(f);
          self(self, slot + 1, left - k);
          forests.pop_back();
        }
      } else {
        for (const auto& t : detail::middle_trees(k)) {
          middles.push_back(t);
          self(self, slot + 1, left - k);
          middles.pop_back();
        }
      }
    }
  };
  rec(rec, 0, n);
  return out;
}

inline std::vector<FTFTriple> enumerate_triples(std::size_t n) { return enumerate_composites(n, 1); }

// Composites with n leaves and r factors under d_T; r = 1 is T(aⁿ, m; m).
inline chain::ChainComplex composite_complex(std::size_t n, std::size_t r) {
  return detail::graded_complex(enumerate_composites(n, r), [](std::size_t, const std::string& label) {
    std::vector<std::string> out;
    for (const auto& c : d_T(Composite::parse(label))) out.push_back(c.str());
    return out;
  });
}

inline chain::ChainComplex t_complex(std::size_t n) { return composite_complex(n, 1); }

}  // namespace opair::operad
