#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opair/chain/chain_complex.hpp"

namespace opair::chain {

// A graded GF(2)-linear map source -> target of degree `shift`.
// block(k) has columns indexed by source degree k and rows by target degree k + shift.
class LinearMap {
 public:
  LinearMap(ComplexPtr source, ComplexPtr target, int shift, std::vector<SparseMatrix> blocks)
      : source_(std::move(source)), target_(std::move(target)), shift_(shift),
        blocks_(std::move(blocks)) {
    if (!source_ || !target_) throw std::invalid_argument("LinearMap: null complex");
    if (blocks_.size() != source_->degrees())
      throw std::invalid_argument("LinearMap: need one block per source degree");
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if (blocks_[k].cols() != source_->rank(k) || blocks_[k].rows() != target_rank(k))
        throw std::invalid_argument("LinearMap: block " + std::to_string(k) + " has shape " +
                                    std::to_string(blocks_[k].rows()) + "x" +
                                    std::to_string(blocks_[k].cols()) + ", expected " +
                                    std::to_string(target_rank(k)) + "x" +
                                    std::to_string(source_->rank(k)));
    }
  }

  static LinearMap zero(ComplexPtr source, ComplexPtr target, int shift) {
    std::vector<SparseMatrix> blocks;
    for (std::size_t k = 0; k < source->degrees(); ++k) {
      const long t = static_cast<long>(k) + shift;
      blocks.emplace_back(t < 0 ? 0 : target->rank(static_cast<std::size_t>(t)), source->rank(k));
    }
    return LinearMap(source, target, shift, std::move(blocks));
  }

  static LinearMap identity(ComplexPtr c) {
    std::vector<SparseMatrix> blocks;
    for (std::size_t k = 0; k < c->degrees(); ++k) blocks.push_back(identity_matrix(c->rank(k)));
    return LinearMap(c, c, 0, std::move(blocks));
  }

  // Builds a map from index-level images.
  static LinearMap from_indices(ComplexPtr source, ComplexPtr target, int shift,
                                const std::function<Column(std::size_t, std::size_t)>& image) {
    std::vector<SparseMatrix> blocks;
    for (std::size_t k = 0; k < source->degrees(); ++k) {
      const long t = static_cast<long>(k) + shift;
      const std::size_t rows = t < 0 ? 0 : target->rank(static_cast<std::size_t>(t));
      std::vector<Column> cols(source->rank(k));
      for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = image(k, i);
      blocks.emplace_back(rows, std::move(cols));
    }
    return LinearMap(std::move(source), std::move(target), shift, std::move(blocks));
  }

  // Builds a map from label-level images. An image label that is not a basis
  // element of the expected target degree is a structural error.
  static LinearMap from_labels(
      ComplexPtr source, ComplexPtr target, int shift,
      const std::function<std::vector<std::string>(const std::string&)>& image) {
    const auto& tgt = *target;
    const auto& src = *source;
    return from_indices(source, target, shift, [&](std::size_t k, std::size_t i) {
      const long t = static_cast<long>(k) + shift;
      std::vector<std::uint32_t> raw;
      const std::string from = src.label(k, i);
      for (const auto& lbl : image(from)) {
        std::optional<std::size_t> idx;
        if (t >= 0) idx = tgt.find(static_cast<std::size_t>(t), lbl);
        if (!idx)
          throw std::invalid_argument("LinearMap: image '" + lbl + "' of '" + from +
                                      "' is not a basis element of target degree " +
                                      std::to_string(t));
        raw.push_back(static_cast<std::uint32_t>(*idx));
      }
      return normalize(std::move(raw));
    });
  }

  const ChainComplex& source() const { return *source_; }
  const ChainComplex& target() const { return *target_; }
  const ComplexPtr& source_ptr() const { return source_; }
  const ComplexPtr& target_ptr() const { return target_; }
  int shift() const { return shift_; }
  const SparseMatrix& block(std::size_t k) const { return blocks_.at(k); }

  Column apply(std::size_t k, const Column& v) const { return blocks_.at(k).apply(v); }

  bool is_zero() const {
    for (const auto& b : blocks_)
      if (!b.is_zero()) return false;
    return true;
  }

  std::vector<std::string> image_labels(std::size_t k, std::size_t i) const {
    std::vector<std::string> out;
    const long t = static_cast<long>(k) + shift_;
    for (auto r : blocks_.at(k).column(i)) out.push_back(target_->label(static_cast<std::size_t>(t), r));
    return out;
  }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.shift_ == b.shift_ && a.blocks_ == b.blocks_;
  }

 private:
  std::size_t target_rank(std::size_t k) const {
    const long t = static_cast<long>(k) + shift_;
    return t < 0 ? 0 : target_->rank(static_cast<std::size_t>(t));
  }

  ComplexPtr source_;
  ComplexPtr target_;
  int shift_ = 0;
  std::vector<SparseMatrix> blocks_;
};

// g o f.
inline LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (f.target().ranks() != g.source().ranks())
    throw std::invalid_argument("compose: target of f is not the source of g");
  std::vector<SparseMatrix> blocks;
  for (std::size_t k = 0; k < f.source().degrees(); ++k) {
    const long mid = static_cast<long>(k) + f.shift();
    const long out = mid + g.shift();
    const std::size_t out_rows = out < 0 ? 0 : g.target().rank(static_cast<std::size_t>(out));
    if (mid < 0 || static_cast<std::size_t>(mid) >= g.source().degrees()) {
      blocks.emplace_back(out_rows, f.source().rank(k));
      continue;
    }
    blocks.push_back(multiply(g.block(static_cast<std::size_t>(mid)), f.block(k)));
  }
  return LinearMap(f.source_ptr(), g.target_ptr(), f.shift() + g.shift(), std::move(blocks));
}

inline LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (a.shift() != b.shift() || a.source().ranks() != b.source().ranks() ||
      a.target().ranks() != b.target().ranks())
    throw std::invalid_argument("LinearMap sum: incompatible maps");
  std::vector<SparseMatrix> blocks;
  for (std::size_t k = 0; k < a.source().degrees(); ++k) blocks.push_back(add(a.block(k), b.block(k)));
  return LinearMap(a.source_ptr(), a.target_ptr(), a.shift(), std::move(blocks));
}

}  // namespace opair::chain
