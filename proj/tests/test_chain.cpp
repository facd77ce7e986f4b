#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "opair/chain/chain_complex.hpp"
#include "opair/chain/checks.hpp"
#include "opair/chain/gf2_sum.hpp"
#include "opair/chain/homotopy.hpp"
#include "opair/chain/linear_map.hpp"
#include "opair/chain/tensor.hpp"

using namespace opair::chain;

namespace {

// The interval: vertices a, b and the edge c with dc = a + b.
ComplexPtr interval() {
  return share(complex_from_boundary({{"a", "b"}, {"c"}}, [](std::size_t, const std::string&) {
    return std::vector<std::string>{"a", "b"};
  }));
}

// x in degree 1 with dx = y: acyclic.
ComplexPtr acyclic_pair() {
  return share(complex_from_boundary({{"y"}, {"x"}}, [](std::size_t, const std::string&) {
    return std::vector<std::string>{"y"};
  }));
}

}  // namespace

TEST(Gf2Sum, ToggleCancelsRepeatedTerms) {
  Gf2Sum<std::string> s{"a", "b", "a"};
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.contains("b"));
  s += Gf2Sum<std::string>{"b"};
  EXPECT_TRUE(s.empty());
}

TEST(Gf2Sum, MapExtendsLinearly) {
  const Gf2Sum<int> s{1, 2};
  const auto image = s.map([](int x) { return Gf2Sum<int>{x, 0}; });
  EXPECT_EQ(image, (Gf2Sum<int>{1, 2}));
}

TEST(SparseMatrix, NormalizeDropsPairs) {
  EXPECT_EQ(normalize({3, 1, 3, 2, 1, 1}), (Column{1, 2}));
}

TEST(SparseMatrix, MultiplyOverGf2) {
  // [[1,1],[0,1]]^2 = [[1,0],[0,1]] over GF(2).
  const SparseMatrix m(2, {Column{0}, Column{0, 1}});
  EXPECT_EQ(multiply(m, m), identity_matrix(2));
}

TEST(ChainComplex, IntervalBasics) {
  const auto c = interval();
  EXPECT_EQ(c->ranks(), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(c->euler_characteristic(), 1);
  EXPECT_EQ(c->find(1, "c"), 0u);
  EXPECT_FALSE(c->find(0, "c").has_value());
  EXPECT_TRUE(check_d_squared(*c).pass);
}

TEST(ChainComplex, RejectsBoundaryOutsideBasis) {
  EXPECT_THROW(complex_from_boundary({{"a"}, {"c"}},
                                     [](std::size_t, const std::string&) { return std::vector<std::string>{"z"}; }),
               std::invalid_argument);
}

TEST(ChainComplex, DetectsNonzeroSquare) {
  // d(t) = e, d(e) = v: d² ≠ 0.
  const auto bad = complex_from_boundary({{"v"}, {"e"}, {"t"}}, [](std::size_t k, const std::string&) {
    return std::vector<std::string>{k == 2 ? "e" : "v"};
  });
  const auto r = check_d_squared(bad);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.counterexamples, (std::vector<std::string>{"t"}));
}

TEST(Tensor, SquareOfIntervalIsTheSquare) {
  const auto i = interval();
  const auto sq = share(tensor(i, i));
  EXPECT_EQ(sq->ranks(), (std::vector<std::size_t>{4, 4, 1}));
  EXPECT_TRUE(check_d_squared(*sq).pass);
  EXPECT_EQ(sq->euler_characteristic(), 1);
  const auto top = sq->label(2, 0);
  EXPECT_EQ(top, "c ⊗ c");
  std::vector<std::string> faces;
  for (auto r : sq->d(2).column(0)) faces.push_back(sq->label(1, r));
  std::sort(faces.begin(), faces.end());
  EXPECT_EQ(faces, (std::vector<std::string>{"a ⊗ c", "b ⊗ c", "c ⊗ a", "c ⊗ b"}));
  ASSERT_TRUE(sq->find(1, "c ⊗ b").has_value());
  EXPECT_EQ(sq->label(1, *sq->find(1, "c ⊗ b")), "c ⊗ b");
}

TEST(Tensor, TruncationDropsHighDegrees) {
  const auto i = interval();
  const auto sq = tensor(i, i, 1);
  EXPECT_EQ(sq.ranks(), (std::vector<std::size_t>{4, 4}));
}

TEST(LinearMap, ChainMapCheckCatchesBrokenMaps) {
  const auto i = interval();
  EXPECT_TRUE(check_chain_map(LinearMap::identity(i)).pass);
  // Collapse onto a: a chain map. Send c to c but a to nothing: not one.
  const auto p = share(point_complex());
  const auto collapse = LinearMap::from_labels(i, p, 0, [](const std::string& s) {
    return s == "c" ? std::vector<std::string>{} : std::vector<std::string>{"pt"};
  });
  EXPECT_TRUE(check_chain_map(collapse).pass);
  const auto broken = LinearMap::from_labels(i, i, 0, [](const std::string& s) {
    return s == "a" ? std::vector<std::string>{} : std::vector<std::string>{s};
  });
  const auto r = check_chain_map(broken);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.counterexamples, (std::vector<std::string>{"c"}));
}

TEST(LinearMap, FromLabelsRejectsWrongDegree) {
  const auto i = interval();
  EXPECT_THROW(LinearMap::from_labels(i, i, 0, [](const std::string&) { return std::vector<std::string>{"c"}; }),
               std::invalid_argument);
}

TEST(LinearMap, ComposeAndSum) {
  const auto i = interval();
  const auto id = LinearMap::identity(i);
  EXPECT_EQ(compose(id, id), id);
  EXPECT_TRUE((id + id).is_zero());
}

TEST(Homotopy, SolverFindsPreimages) {
  const SparseMatrix m(3, {Column{0, 1}, Column{1, 2}});
  const Gf2Solver solver(m);
  EXPECT_EQ(solver.rank(), 2u);
  EXPECT_EQ(solver.solve(Column{0, 2}), (Column{0, 1}));
  EXPECT_FALSE(solver.solve(Column{0}).has_value());
}

TEST(Homotopy, IdentityOfAcyclicComplexIsNullHomotopic) {
  const auto c = acyclic_pair();
  const auto id = LinearMap::identity(c);
  const auto result = solve_null_homotopy(id);
  ASSERT_TRUE(result.feasible());
  EXPECT_TRUE(verify_null_homotopy(*result.homotopy, id));
}

TEST(Homotopy, IdentityOfIntervalIsObstructed) {
  const auto id = LinearMap::identity(interval());
  const auto result = solve_null_homotopy(id);
  EXPECT_FALSE(result.feasible());
  EXPECT_FALSE(result.obstruction.empty());
}
