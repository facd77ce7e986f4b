#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace opair::chain {

// A GF(2) vector stored as the sorted list of its nonzero positions.
using Column = std::vector<std::uint32_t>;

inline void add_into(Column& acc, const Column& other) {
  if (other.empty()) return;
  if (acc.empty()) {
    acc = other;
    return;
  }
  Column out;
  out.reserve(acc.size() + other.size());
  std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(),
                                std::back_inserter(out));
  acc.swap(out);
}

// Sorts and cancels pairs, turning an arbitrary index list into a Column.
inline Column normalize(std::vector<std::uint32_t> raw) {
  std::sort(raw.begin(), raw.end());
  Column out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t j = i;
    while (j < raw.size() && raw[j] == raw[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(raw[i]);
    i = j;
  }
  return out;
}

// Column-major sparse matrix over GF(2).
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
  SparseMatrix(std::size_t rows, std::vector<Column> columns)
      : rows_(rows), columns_(std::move(columns)) {
    for (const auto& c : columns_) {
      if (!std::is_sorted(c.begin(), c.end()) ||
          std::adjacent_find(c.begin(), c.end()) != c.end())
        throw std::invalid_argument("SparseMatrix: column indices must be strictly increasing");
      if (!c.empty() && c.back() >= rows_)
        throw std::out_of_range("SparseMatrix: row index " + std::to_string(c.back()) +
                                " >= " + std::to_string(rows_));
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const Column& column(std::size_t j) const { return columns_.at(j); }
  Column& column(std::size_t j) { return columns_.at(j); }
  const std::vector<Column>& columns() const { return columns_; }

  std::size_t nonzeros() const {
    std::size_t nnz = 0;
    for (const auto& c : columns_) nnz += c.size();
    return nnz;
  }
  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
  }

  Column apply(const Column& v) const {
    Column out;
    for (auto j : v) add_into(out, columns_.at(j));
    return out;
  }

  bool operator==(const SparseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

// Returns lhs * rhs, i.e. "apply rhs, then lhs".
inline SparseMatrix multiply(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  if (lhs.cols() != rhs.rows())
    throw std::invalid_argument("multiply: inner dimensions differ (" + std::to_string(lhs.cols()) +
                                " vs " + std::to_string(rhs.rows()) + ")");
  std::vector<Column> out(rhs.cols());
  std::vector<std::uint32_t> scratch;
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    scratch.clear();
    for (auto k : rhs.column(j)) {
      const auto& c = lhs.column(k);
      scratch.insert(scratch.end(), c.begin(), c.end());
    }
    out[j] = normalize(scratch);
  }
  return SparseMatrix(lhs.rows(), std::move(out));
}

inline SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("add: shape mismatch");
  SparseMatrix out = a;
  for (std::size_t j = 0; j < b.cols(); ++j) add_into(out.column(j), b.column(j));
  return out;
}

inline SparseMatrix identity_matrix(std::size_t n) {
  std::vector<Column> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = {static_cast<std::uint32_t>(i)};
  return SparseMatrix(n, std::move(cols));
}

}  // namespace opair::chain
