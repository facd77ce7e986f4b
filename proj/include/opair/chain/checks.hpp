#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "opair/chain/chain_complex.hpp"
#include "opair/chain/linear_map.hpp"

namespace opair::chain {

struct CheckReport {
  bool pass = true;
  // Labels of basis elements witnessing a failure.
  std::vector<std::string> counterexamples;

  void fail(std::string witness) {
    pass = false;
    counterexamples.push_back(std::move(witness));
  }
};

inline CheckReport check_d_squared(const ChainComplex& c) {
  CheckReport report;
  for (std::size_t k = 2; k < c.degrees(); ++k) {
    const auto& dk = c.d(k);
    const auto& dk1 = c.d(k - 1);
    for (std::size_t i = 0; i < dk.cols(); ++i) {
      if (!dk1.apply(dk.column(i)).empty()) report.fail(c.label(k, i));
    }
  }
  return report;
}

// d ∘ f == f ∘ d, degree by degree. Structural mismatches throw.
inline CheckReport check_chain_map(const LinearMap& f) {
  if (f.shift() != 0) throw std::invalid_argument("check_chain_map: map has nonzero degree");
  if (f.target().ring() != f.source().ring())
    throw std::invalid_argument("check_chain_map: coefficient rings differ");
  CheckReport report;
  const auto& src = f.source();
  const auto& tgt = f.target();
  for (std::size_t k = 0; k < src.degrees(); ++k) {
    for (std::size_t i = 0; i < src.rank(k); ++i) {
      Column lhs;  // d(f(x))
      if (k > 0 && k < tgt.degrees()) lhs = tgt.d(k).apply(f.block(k).column(i));
      Column rhs;  // f(d(x))
      if (k > 0) rhs = f.block(k - 1).apply(src.d(k).column(i));
      if (lhs != rhs) report.fail(src.label(k, i));
    }
  }
  return report;
}

}  // namespace opair::chain
