#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "opair/chain/sparse_matrix.hpp"

namespace opair::chain {

// Only GF(2) is implemented; every differential in this project is defined
// up to sign.
enum class Ring { GF2 };

inline std::string to_string(Ring) { return "GF(2)"; }

// A finite graded free module C_0, ..., C_top with differential d_k : C_k -> C_{k-1}.
//
// Basis elements carry string labels. Explicit-basis complexes store them;
// derived complexes (tensor products) generate them on demand.
class ChainComplex {
 public:
  using LabelFn = std::function<std::string(std::size_t degree, std::size_t index)>;
  using FindFn = std::function<std::optional<std::size_t>(std::size_t degree, std::string_view)>;

  ChainComplex() : ChainComplex(std::vector<std::vector<std::string>>{}, {}) {}

  // d[k] is the matrix of d_k : C_k -> C_{k-1}; d[0] must have zero rows.
  // `d` may be shorter than `basis`, missing entries being zero maps.
  ChainComplex(std::vector<std::vector<std::string>> basis, std::vector<SparseMatrix> d,
               Ring ring = Ring::GF2)
      : ring_(ring) {
    auto labels = std::make_shared<Labels>();
    labels->basis = std::move(basis);
    labels->index.resize(labels->basis.size());
    for (std::size_t k = 0; k < labels->basis.size(); ++k) {
      ranks_.push_back(labels->basis[k].size());
      for (std::size_t i = 0; i < labels->basis[k].size(); ++i) {
        if (!labels->index[k].emplace(labels->basis[k][i], i).second)
          throw std::invalid_argument("ChainComplex: duplicate basis label '" +
                                      labels->basis[k][i] + "' in degree " + std::to_string(k));
      }
    }
    label_ = [labels](std::size_t k, std::size_t i) { return labels->basis.at(k).at(i); };
    find_ = [labels](std::size_t k, std::string_view s) -> std::optional<std::size_t> {
      if (k >= labels->index.size()) return std::nullopt;
      auto it = labels->index[k].find(std::string(s));
      if (it == labels->index[k].end()) return std::nullopt;
      return it->second;
    };
    install_differentials(std::move(d));
  }

  ChainComplex(std::vector<std::size_t> ranks, std::vector<SparseMatrix> d, LabelFn label,
               FindFn find, Ring ring = Ring::GF2)
      : ring_(ring), ranks_(std::move(ranks)), label_(std::move(label)), find_(std::move(find)) {
    install_differentials(std::move(d));
  }

  Ring ring() const { return ring_; }
  // Number of stored degrees (top degree + 1); zero for the zero complex.
  std::size_t degrees() const { return ranks_.size(); }
  std::size_t rank(std::size_t k) const { return k < ranks_.size() ? ranks_[k] : 0; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  std::size_t total_rank() const {
    std::size_t t = 0;
    for (auto r : ranks_) t += r;
    return t;
  }

  // d_k : C_k -> C_{k-1}.
  const SparseMatrix& d(std::size_t k) const {
    if (k >= d_.size()) throw std::out_of_range("ChainComplex::d: degree out of range");
    return d_[k];
  }

  std::string label(std::size_t k, std::size_t i) const { return label_(k, i); }
  std::optional<std::size_t> find(std::size_t k, std::string_view s) const { return find_(k, s); }
  std::vector<std::string> labels(std::size_t k) const {
    std::vector<std::string> out;
    out.reserve(rank(k));
    for (std::size_t i = 0; i < rank(k); ++i) out.push_back(label(k, i));
    return out;
  }

  long euler_characteristic() const {
    long chi = 0;
    for (std::size_t k = 0; k < ranks_.size(); ++k)
      chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(ranks_[k]);
    return chi;
  }

  // Same ranks, labels and differentials.
  friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
    if (a.ring_ != b.ring_ || a.ranks_ != b.ranks_ || a.d_ != b.d_) return false;
    for (std::size_t k = 0; k < a.ranks_.size(); ++k)
      for (std::size_t i = 0; i < a.ranks_[k]; ++i)
        if (a.label(k, i) != b.label(k, i)) return false;
    return true;
  }

 private:
  struct Labels {
    std::vector<std::vector<std::string>> basis;
    std::vector<std::unordered_map<std::string, std::size_t>> index;
  };

  void install_differentials(std::vector<SparseMatrix> d) {
    if (d.size() > ranks_.size())
      throw std::invalid_argument("ChainComplex: more differentials than degrees");
    d.resize(ranks_.size());
    for (std::size_t k = 0; k < ranks_.size(); ++k) {
      const std::size_t want_rows = k == 0 ? 0 : ranks_[k - 1];
      if (d[k].cols() == 0 && d[k].rows() == 0) d[k] = SparseMatrix(want_rows, ranks_[k]);
      if (d[k].cols() != ranks_[k] || d[k].rows() != want_rows)
        throw std::invalid_argument("ChainComplex: d_" + std::to_string(k) + " has shape " +
                                    std::to_string(d[k].rows()) + "x" +
                                    std::to_string(d[k].cols()) + ", expected " +
                                    std::to_string(want_rows) + "x" + std::to_string(ranks_[k]));
    }
    d_ = std::move(d);
  }

  Ring ring_ = Ring::GF2;
  std::vector<std::size_t> ranks_;
  std::vector<SparseMatrix> d_;
  LabelFn label_;
  FindFn find_;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

inline ComplexPtr share(ChainComplex c) { return std::make_shared<const ChainComplex>(std::move(c)); }

// The one-point complex: a single basis element "pt" in degree 0.
inline ChainComplex point_complex() { return ChainComplex({{"pt"}}, {}); }

// Builds a complex from a graded basis and a boundary function on labels.
// Boundary labels must live one degree down.
inline ChainComplex complex_from_boundary(
    std::vector<std::vector<std::string>> basis,
    const std::function<std::vector<std::string>(std::size_t, const std::string&)>& boundary) {
  std::vector<std::unordered_map<std::string, std::uint32_t>> index(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < basis[k].size(); ++i)
      index[k].emplace(basis[k][i], static_cast<std::uint32_t>(i));
  std::vector<SparseMatrix> d;
  d.emplace_back(0, basis.empty() ? 0 : basis[0].size());
  for (std::size_t k = 1; k < basis.size(); ++k) {
    std::vector<Column> cols(basis[k].size());
    for (std::size_t i = 0; i < basis[k].size(); ++i) {
      std::vector<std::uint32_t> raw;
      for (const auto& face : boundary(k, basis[k][i])) {
        auto it = index[k - 1].find(face);
        if (it == index[k - 1].end())
          throw std::invalid_argument("boundary of '" + basis[k][i] + "' contains '" + face +
                                      "', which is not a basis element of degree " +
                                      std::to_string(k - 1));
        raw.push_back(it->second);
      }
      cols[i] = normalize(std::move(raw));
    }
    d.emplace_back(basis[k - 1].size(), std::move(cols));
  }
  return ChainComplex(std::move(basis), std::move(d));
}

}  // namespace opair::chain
