#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opair/chain/chain_complex.hpp"
#include "opair/chain/linear_map.hpp"

namespace opair::chain {

// Solves M x = b over GF(2) by column reduction of M, keeping track of which
// original columns were combined into each reduced column.
class Gf2Solver {
 public:
  explicit Gf2Solver(const SparseMatrix& m) : pivot_of_row_(m.rows(), -1) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Column r = m.column(j);
      Column v{static_cast<std::uint32_t>(j)};
      while (!r.empty()) {
        const auto p = pivot_of_row_[r.back()];
        if (p < 0) break;
        add_into(r, reduced_[static_cast<std::size_t>(p)]);
        add_into(v, combo_[static_cast<std::size_t>(p)]);
      }
      if (r.empty()) continue;
      pivot_of_row_[r.back()] = static_cast<std::int64_t>(reduced_.size());
      reduced_.push_back(std::move(r));
      combo_.push_back(std::move(v));
    }
  }

  std::size_t rank() const { return reduced_.size(); }

  std::optional<Column> solve(Column b) const {
    Column x;
    while (!b.empty()) {
      if (b.back() >= pivot_of_row_.size()) return std::nullopt;
      const auto p = pivot_of_row_[b.back()];
      if (p < 0) return std::nullopt;
      add_into(b, reduced_[static_cast<std::size_t>(p)]);
      add_into(x, combo_[static_cast<std::size_t>(p)]);
    }
    return x;
  }

 private:
  std::vector<std::int64_t> pivot_of_row_;
  std::vector<Column> reduced_;
  std::vector<Column> combo_;
};

struct NullHomotopyResult {
  std::optional<LinearMap> homotopy;
  // Set when no homotopy exists: the source element whose equation has no solution.
  std::string obstruction;

  bool feasible() const { return homotopy.has_value(); }
};

// Finds H of degree +1 with dH + Hd = D, degree by degree: for x in degree k,
// H(x) solves d(y) = D(x) + H(dx).
inline NullHomotopyResult solve_null_homotopy(const LinearMap& D) {
  if (D.shift() != 0) throw std::invalid_argument("solve_null_homotopy: D must have degree 0");
  const auto& src = D.source();
  const auto& tgt = D.target();
  std::vector<SparseMatrix> h;
  for (std::size_t k = 0; k < src.degrees(); ++k) {
    std::optional<Gf2Solver> solver;
    std::vector<Column> cols(src.rank(k));
    for (std::size_t i = 0; i < src.rank(k); ++i) {
      Column rhs = D.block(k).column(i);
      if (k > 0) add_into(rhs, h[k - 1].apply(src.d(k).column(i)));
      if (rhs.empty()) continue;
      if (k + 1 >= tgt.degrees())
        return {std::nullopt, src.label(k, i) + " (target has no degree " + std::to_string(k + 1) + ")"};
      if (!solver) solver.emplace(tgt.d(k + 1));
      auto y = solver->solve(std::move(rhs));
      if (!y) return {std::nullopt, src.label(k, i)};
      cols[i] = std::move(*y);
    }
    h.emplace_back(tgt.rank(k + 1), std::move(cols));
  }
  return {LinearMap(D.source_ptr(), D.target_ptr(), 1, std::move(h)), {}};
}

// Re-substitution: true iff dH + Hd == D exactly.
inline bool verify_null_homotopy(const LinearMap& H, const LinearMap& D) {
  if (H.shift() != 1 || D.shift() != 0) return false;
  const auto& src = D.source();
  const auto& tgt = D.target();
  for (std::size_t k = 0; k < src.degrees(); ++k) {
    for (std::size_t i = 0; i < src.rank(k); ++i) {
      Column lhs;
      if (k + 1 < tgt.degrees()) lhs = tgt.d(k + 1).apply(H.block(k).column(i));
      if (k > 0) add_into(lhs, H.block(k - 1).apply(src.d(k).column(i)));
      if (lhs != D.block(k).column(i)) return false;
    }
  }
  return true;
}

}  // namespace opair::chain
