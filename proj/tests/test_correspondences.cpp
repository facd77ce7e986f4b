#include <gtest/gtest.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "opair/chain/checks.hpp"
#include "opair/correspondences/bijection.hpp"
#include "opair/correspondences/chain_maps.hpp"
#include "opair/correspondences/projections.hpp"
#include "opair/families/family.hpp"
#include "opair/operad/pair.hpp"

using namespace opair;
using combinat::Composite;
using combinat::NiceExpression;
using combinat::PaintedTree;
using combinat::ShortForest;
using families::Family;

namespace {

NiceExpression nice(const char* compact) { return NiceExpression::parse_compact(compact); }

// The word of a forest from leaf positions: for each leaf record (tree, branch)
// and compare neighbours.
std::string word_by_leaves(const ShortForest& f) {
  std::vector<std::pair<std::size_t, std::size_t>> where;
  std::size_t branch_id = 0;
  for (std::size_t t = 0; t < f.tree_count(); ++t)
    for (auto size : f.trees()[t]) {
      for (std::size_t i = 0; i < size; ++i) where.emplace_back(t, branch_id);
      ++branch_id;
    }
  std::string w;
  for (std::size_t i = 0; i + 1 < where.size(); ++i)
    w += where[i].second == where[i + 1].second ? 'a' : where[i].first == where[i + 1].first ? 'b' : 'c';
  return w.empty() ? "-" : w;
}

}  // namespace

TEST(Bijection, Examples) {
  EXPECT_EQ(correspondences::bijection_I(NiceExpression::top(2)).str(), "- | [1,1] | -");
  EXPECT_EQ(correspondences::bijection_I(nice("2]|[012]")).str(), "- | [] | [1,1]");
  EXPECT_EQ(correspondences::bijection_I(nice("02][24][45]|")).str(), "[1][2] | [2] | -");
  EXPECT_EQ(correspondences::inverse_I(Composite::parse("- | [] | [1,1]")).str(true), "2]|[012]");
  EXPECT_EQ(correspondences::inverse_I(Composite::parse("[1][2] | [2] | -")).str(true), "02][24][45]|");
}

TEST(Bijection, IotaListsGapsFromTheTop) {
  EXPECT_EQ(correspondences::iota({0, 1, 2}), (combinat::BranchList{1, 1}));
  EXPECT_EQ(correspondences::iota({0, 1, 4}), (combinat::BranchList{3, 1}));
  EXPECT_TRUE(correspondences::iota({3}).empty());
}

TEST(Bijection, RoundTripsAndDegrees) {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::size_t count = 0;
    for (const auto& e : combinat::enumerate_nice_expressions(n)) {
      const auto x = correspondences::bijection_I(e);
      EXPECT_EQ(x.leaves(), n);
      EXPECT_EQ(x.dimension(), e.dimension()) << e.str();
      EXPECT_EQ(correspondences::inverse_I(x).str(), e.str());
      ++count;
    }
    for (const auto& x : operad::enumerate_triples(n))
      EXPECT_EQ(correspondences::bijection_I(correspondences::inverse_I(x)), x) << x.str();
    EXPECT_EQ(count, operad::enumerate_triples(n).size());
  }
}

TEST(Bijection, IsAnIsomorphismOfComplexes) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto f = chain::share(families::complex(Family::Freehedron, n));
    const auto t = chain::share(operad::t_complex(n));
    const auto iso = correspondences::bijection_map(f, t);
    const auto inv = correspondences::inverse_bijection_map(t, f);
    EXPECT_TRUE(chain::check_chain_map(iso).pass) << n;
    EXPECT_TRUE(chain::check_chain_map(inv).pass) << n;
    EXPECT_EQ(chain::compose(inv, iso), chain::LinearMap::identity(f));
    EXPECT_EQ(chain::compose(iso, inv), chain::LinearMap::identity(t));
  }
}

TEST(WordMap, Examples) {
  EXPECT_EQ(correspondences::word_map(ShortForest::parse("[1,2][1,1][2,3,1]")).str(), "bacbcabaab");
  EXPECT_EQ(correspondences::word_map(ShortForest::parse("[4]")).str(), "aaa");
  EXPECT_EQ(correspondences::word_map(ShortForest::parse("[1][1][1][1]")).str(), "ccc");
  EXPECT_EQ(correspondences::word_map(ShortForest::parse("[1]")).str(), "-");
}

TEST(WordMap, AgreesWithLeafComparisonAndCommutesWithBoundaries) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& f : operad::enumerate_forests(n)) {
      const auto w = correspondences::word_map(f);
      EXPECT_EQ(w.str(), word_by_leaves(f));
      EXPECT_EQ(w.dimension(), f.dimension());
    }
    const auto omega = chain::share(operad::omega_complex(n));
    const auto cube = chain::share(families::complex(Family::Cube, n - 1));
    EXPECT_TRUE(chain::check_chain_map(correspondences::word_chain_map(omega, cube)).pass) << n;
  }
}

TEST(Projection, VerticesOfJ2) {
  const auto am = correspondences::projection_pi(PaintedTree::parse("!((**))"));
  EXPECT_EQ(am.str(), "- | [] | [1]");
  EXPECT_EQ(correspondences::inverse_I(am).str(true), "1]|[01]");
  const auto a_m = correspondences::projection_pi(PaintedTree::parse("!(!(*)!(*))"));
  EXPECT_EQ(a_m.str(), "[1] | [] | -");
  EXPECT_EQ(correspondences::inverse_I(a_m).str(true), "0][01]|");
  EXPECT_THROW(correspondences::projection_pi(PaintedTree::corolla(2)), std::invalid_argument);
}

TEST(Projection, HexagonRedEdgeCollapses) {
  const auto v1 = PaintedTree::parse("!(!(!(*)!(*))!(*))");  // (f(a)f(b))f(m)
  const auto v2 = PaintedTree::parse("!(!((**))!(*))");      // f(ab)f(m)
  const auto edge = PaintedTree::parse("!(!(**)!(*))");
  EXPECT_EQ(correspondences::projection_pi(v1), correspondences::projection_pi(v2));
  EXPECT_FALSE(correspondences::projection_pi_face(edge).has_value());
}

TEST(Projection, VertexRuleAgreesWithQuotient) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto faces = families::enumerate_faces(Family::J, n);
    for (const auto& v : faces.front()) {
      const auto t = PaintedTree::parse(v);
      EXPECT_EQ(correspondences::projection_pi(t), operad::quotient_multipl(t)) << v;
    }
  }
}

TEST(Projection, IsSurjectiveChainMap) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto j = chain::share(families::complex(Family::J, n));
    const auto f = chain::share(families::complex(Family::Freehedron, n - 1));
    const auto pi = correspondences::projection_map(j, f);
    EXPECT_TRUE(chain::check_chain_map(pi).pass) << n;
    std::set<std::pair<std::size_t, std::uint32_t>> hit;
    for (std::size_t k = 0; k < j->degrees(); ++k)
      for (std::size_t i = 0; i < j->rank(k); ++i)
        for (auto r : pi.block(k).column(i)) hit.insert({k, r});
    EXPECT_EQ(hit.size(), f->total_rank()) << n;
  }
}

TEST(Forget, DropsDegenerateFaces) {
  EXPECT_EQ(correspondences::forget_to_K(PaintedTree::parse("!(!(*)!(*))"))->str(), "(**)");
  EXPECT_EQ(correspondences::forget_to_K(PaintedTree::parse("!((**))"))->str(), "(**)");
  EXPECT_FALSE(correspondences::forget_to_K(PaintedTree::parse("!(**)")).has_value());
}

TEST(Square, CommutesAndEveryArrowIsAChainMap) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto r = correspondences::check_projection_square(n);
    EXPECT_TRUE(r.forget.pass) << n;
    EXPECT_TRUE(r.quotient_assoc.pass) << n;
    EXPECT_TRUE(r.word.pass) << n;
    EXPECT_TRUE(r.projection.pass) << n;
    EXPECT_TRUE(r.bijection.pass) << n;
    EXPECT_TRUE(r.eps.pass) << n;
    EXPECT_TRUE(r.commutes.pass) << n;
  }
}

TEST(Square, DirectCollapseMatchesComposite) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& e : combinat::enumerate_nice_expressions(n)) {
      const auto direct = correspondences::freehedron_to_cube(e);
      const auto eps = operad::counit_eps(correspondences::bijection_I(e));
      ASSERT_EQ(direct.has_value(), eps.has_value()) << e.str();
      if (direct) EXPECT_EQ(direct->str(), correspondences::word_map(*eps).str()) << e.str();
    }
}
