#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "opair/chain/chain_complex.hpp"
#include "opair/chain/linear_map.hpp"

namespace opair::chain {

inline constexpr std::size_t kNoTruncation = std::numeric_limits<std::size_t>::max();
inline constexpr std::string_view kTensorSeparator = " ⊗ ";

// Index bookkeeping for (A ⊗ B)_k = ⊕_{p+q=k} A_p ⊗ B_q, blocks ordered by p,
// then by (i, j) lexicographically.
class TensorLayout {
 public:
  TensorLayout(std::vector<std::size_t> a, std::vector<std::size_t> b,
               std::size_t max_degree = kNoTruncation)
      : a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty() || b_.empty()) return;
    std::size_t top = a_.size() - 1 + b_.size() - 1;
    if (max_degree != kNoTruncation) top = std::min(top, max_degree);
    offsets_.resize(top + 1);
    ranks_.assign(top + 1, 0);
    for (std::size_t k = 0; k <= top; ++k) {
      offsets_[k].assign(a_.size(), kAbsent);
      for (std::size_t p = 0; p < a_.size() && p <= k; ++p) {
        const std::size_t q = k - p;
        if (q >= b_.size()) continue;
        offsets_[k][p] = ranks_[k];
        ranks_[k] += a_[p] * b_[q];
      }
    }
  }

  const std::vector<std::size_t>& ranks() const { return ranks_; }
  std::size_t degrees() const { return ranks_.size(); }

  bool contains(std::size_t p, std::size_t q) const {
    const std::size_t k = p + q;
    return k < offsets_.size() && p < a_.size() && q < b_.size() && offsets_[k][p] != kAbsent;
  }

  std::size_t index(std::size_t p, std::size_t i, std::size_t q, std::size_t j) const {
    if (!contains(p, q)) throw std::out_of_range("TensorLayout::index: degree outside layout");
    return offsets_[p + q][p] + i * b_[q] + j;
  }

  // (p, i, q, j) for basis element `idx` of degree k.
  std::tuple<std::size_t, std::size_t, std::size_t, std::size_t> decode(std::size_t k,
                                                                        std::size_t idx) const {
    const auto& off = offsets_.at(k);
    for (std::size_t p = off.size(); p-- > 0;) {
      if (off[p] == kAbsent || off[p] > idx) continue;
      const std::size_t q = k - p;
      const std::size_t local = idx - off[p];
      if (local >= a_[p] * b_[q]) break;
      return {p, local / b_[q], q, local % b_[q]};
    }
    throw std::out_of_range("TensorLayout::decode: index outside degree");
  }

 private:
  static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> a_, b_;
  std::vector<std::vector<std::size_t>> offsets_;
  std::vector<std::size_t> ranks_;
};

// A ⊗ B with the Leibniz differential (signless over GF(2)), optionally
// truncated above `max_degree`.
inline ChainComplex tensor(ComplexPtr a, ComplexPtr b, std::size_t max_degree = kNoTruncation) {
  if (a->ring() != b->ring()) throw std::invalid_argument("tensor: coefficient rings differ");
  auto layout = std::make_shared<const TensorLayout>(a->ranks(), b->ranks(), max_degree);
  std::vector<SparseMatrix> d;
  for (std::size_t k = 0; k < layout->degrees(); ++k) {
    const std::size_t rows = k == 0 ? 0 : layout->ranks()[k - 1];
    std::vector<Column> cols(layout->ranks()[k]);
    if (k > 0) {
      for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        auto [p, i, q, j] = layout->decode(k, idx);
        std::vector<std::uint32_t> raw;
        if (p > 0)
          for (auto r : a->d(p).column(i))
            raw.push_back(static_cast<std::uint32_t>(layout->index(p - 1, r, q, j)));
        if (q > 0)
          for (auto r : b->d(q).column(j))
            raw.push_back(static_cast<std::uint32_t>(layout->index(p, i, q - 1, r)));
        cols[idx] = normalize(std::move(raw));
      }
    }
    d.emplace_back(rows, std::move(cols));
  }
  auto label = [a, b, layout](std::size_t k, std::size_t idx) {
    auto [p, i, q, j] = layout->decode(k, idx);
    return a->label(p, i) + std::string(kTensorSeparator) + b->label(q, j);
  };
  auto find = [a, b, layout](std::size_t k,
                             std::string_view s) -> std::optional<std::size_t> {
    for (std::size_t pos = s.find(kTensorSeparator); pos != std::string_view::npos;
         pos = s.find(kTensorSeparator, pos + 1)) {
      auto left = s.substr(0, pos);
      auto right = s.substr(pos + kTensorSeparator.size());
      for (std::size_t p = 0; p <= k && p < a->degrees(); ++p) {
        if (!layout->contains(p, k - p)) continue;
        auto i = a->find(p, left);
        if (!i) continue;
        auto j = b->find(k - p, right);
        if (j) return layout->index(p, *i, k - p, *j);
      }
    }
    return std::nullopt;
  };
  return ChainComplex(layout->ranks(), std::move(d), label, find, a->ring());
}

// f ⊗ g : A ⊗ B -> A' ⊗ B' for degree-0 maps, between the (equally truncated)
// tensor complexes `source` and `target`.
inline LinearMap tensor_maps(const LinearMap& f, const LinearMap& g, ComplexPtr source,
                             ComplexPtr target, std::size_t max_degree = kNoTruncation) {
  if (f.shift() != 0 || g.shift() != 0)
    throw std::invalid_argument("tensor_maps: only degree-0 maps are supported");
  TensorLayout in(f.source().ranks(), g.source().ranks(), max_degree);
  TensorLayout out(f.target().ranks(), g.target().ranks(), max_degree);
  if (in.ranks() != source->ranks() || out.ranks() != target->ranks())
    throw std::invalid_argument("tensor_maps: complexes do not match the factor layouts");
  return LinearMap::from_indices(source, target, 0, [&](std::size_t k, std::size_t idx) {
    auto [p, i, q, j] = in.decode(k, idx);
    std::vector<std::uint32_t> raw;
    for (auto r : f.block(p).column(i))
      for (auto s : g.block(q).column(j)) raw.push_back(static_cast<std::uint32_t>(out.index(p, r, q, s)));
    return normalize(std::move(raw));
  });
}

}  // namespace opair::chain
