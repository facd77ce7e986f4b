#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "opair/correspondences/bijection.hpp"
#include "opair/diagonal/diagonal.hpp"
#include "opair/operad/pair.hpp"

namespace opair::diag {

struct TransportedDiagonal {
  ComplexPtr t;
  DiagonalTable table;
};

// Δ_T = (I ⊗ I) ∘ Δ ∘ I⁻¹ on T(aⁿ, m; m).
inline TransportedDiagonal transport_to_T(const FaceGeometry& g, const DiagonalTable& table) {
  if (g.family != Family::Freehedron) throw std::invalid_argument("transport_to_T: needs a freehedron");
  TransportedDiagonal out{chain::share(operad::t_complex(g.n)), {}};
  auto move = [&](FaceRef f) {
    const auto x = correspondences::bijection_I(combinat::NiceExpression::parse(g.label(f)));
    const auto idx = out.t->find(f.degree, x.str());
    if (!idx) throw std::logic_error("transport_to_T: " + x.str() + " missing from T");
    return FaceRef{f.degree, static_cast<std::uint32_t>(*idx)};
  };
  out.table.resize(table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    out.table[k].resize(table[k].size());
    for (std::uint32_t i = 0; i < table[k].size(); ++i) {
      auto terms = table[k][i];
      for (auto& [a, b] : terms) {
        a = move(a);
        b = move(b);
      }
      out.table[k][move({static_cast<std::uint32_t>(k), i}).index] = std::move(terms);
    }
  }
  return out;
}

}  // namespace opair::diag
