#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "opair/chain/checks.hpp"
#include "opair/combinat/nice_expression.hpp"
#include "opair/families/box_realization.hpp"
#include "opair/families/family.hpp"

using namespace opair;
using families::Family;
using Counts = std::vector<std::size_t>;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t catalan(std::size_t n) { return binomial(2 * n, n) / (n + 1); }

// Faces of K(n) of dimension n-2-j: dissections of an (n+1)-gon by j diagonals.
Counts kirkman_cayley(std::size_t n) {
  if (n <= 2) return {1};
  const std::size_t m = n + 1;
  Counts out(n - 1);
  for (std::size_t j = 0; j <= m - 3; ++j)
    out[n - 2 - j] = binomial(m - 3, j) * binomial(m + j - 1, j) / (j + 1);
  return out;
}

Counts cube_counts(std::size_t n) {
  Counts out;
  for (std::size_t k = 0; k <= n; ++k) out.push_back(binomial(n, k) << (n - k));
  return out;
}

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

std::string nice(const char* compact) { return combinat::NiceExpression::parse_compact(compact).str(); }

}  // namespace

TEST(Families, ParseNames) {
  EXPECT_EQ(families::parse_family("Freehedron"), Family::Freehedron);
  EXPECT_EQ(families::parse_family("I"), Family::Cube);
  EXPECT_FALSE(families::parse_family("L").has_value());
  EXPECT_THROW(families::enumerate_faces(Family::J, 7), std::out_of_range);
}

TEST(Families, AssociahedronCountsMatchKirkmanCayley) {
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(families::f_vector(Family::K, n), kirkman_cayley(n)) << "K(" << n << ")";
    EXPECT_EQ(families::f_vector(Family::K, n).front(), catalan(n - 1));
  }
}

TEST(Families, SmallFVectors) {
  EXPECT_EQ(families::f_vector(Family::K, 3), (Counts{2, 1}));
  EXPECT_EQ(families::f_vector(Family::K, 4), (Counts{5, 5, 1}));
  EXPECT_EQ(families::f_vector(Family::J, 2), (Counts{2, 1}));
  EXPECT_EQ(families::f_vector(Family::J, 3), (Counts{6, 6, 1}));
  EXPECT_EQ(families::f_vector(Family::Freehedron, 1), (Counts{2, 1}));
  EXPECT_EQ(families::f_vector(Family::Freehedron, 2), (Counts{5, 5, 1}));
  EXPECT_EQ(families::f_vector(Family::Freehedron, 3), (Counts{12, 18, 8, 1}));
}

TEST(Families, MultiplihedronVertexCounts) {
  const Counts vertices{1, 2, 6, 21, 80};
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(families::f_vector(Family::J, n).front(), vertices[n - 1]);
  EXPECT_EQ(families::f_vector(Family::J, 4), (Counts{21, 32, 13, 1}));
}

TEST(Families, CubeCounts) {
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(families::f_vector(Family::Cube, n), cube_counts(n));
}

TEST(Families, FreehedronFacetCount) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto f = families::f_vector(Family::Freehedron, n);
    EXPECT_EQ(f[n - 1], 3 * n - 1) << "F_" << n;
  }
}

TEST(Families, ComplexesAreAcyclicShaped) {
  for (auto [f, hi] : std::vector<std::pair<Family, std::size_t>>{
           {Family::K, 7}, {Family::J, 5}, {Family::Cube, 6}, {Family::Freehedron, 6}}) {
    for (std::size_t n = f == Family::K || f == Family::J ? 1 : 0; n <= hi; ++n) {
      const auto c = families::complex(f, n);
      EXPECT_TRUE(chain::check_d_squared(c).pass) << families::to_string(f) << n;
      EXPECT_EQ(c.euler_characteristic(), 1) << families::to_string(f) << n;
    }
  }
}

TEST(Families, BoundaryExamples) {
  EXPECT_EQ(as_set(families::boundary(Family::Cube, "bb")), (std::set<std::string>{"ab", "cb", "ba", "bc"}));
  EXPECT_EQ(families::boundary(Family::K, families::top_cell(Family::K, 4)).size(), 5u);
  EXPECT_EQ(as_set(families::boundary(Family::Freehedron, "0,1,2]|")),
            (std::set<std::string>{nice("0][012]|"), nice("01][12]|"), nice("02]|"), nice("12]|[01]"), nice("2]|[012]")}));
}

TEST(Families, ComplexRanks) {
  EXPECT_EQ(families::complex(Family::K, 4).ranks(), (Counts{5, 5, 1}));
  EXPECT_EQ(families::complex(Family::Freehedron, 1).ranks(), (Counts{2, 1}));
}

TEST(Boxes, SmallRealizations) {
  const auto f1 = families::box_realization(1);
  EXPECT_EQ(f1.at("0,1]|").str(), "([0,1])");
  const auto f2 = families::box_realization(2);
  EXPECT_EQ(f2.at(nice("2]|[02]")).str(), "(1, 1)");
  EXPECT_EQ(f2.at(nice("12]|[01]")).str(), "(1, [0,1/2])");
  EXPECT_EQ(f2.at("0,1,2]|").str(), "([0,1], [0,1])");
}

TEST(Boxes, CountsFollowThePrismSplit) {
  // F_n has 3·|F_{n-1}| + 2·|X_{n-1}| boxes, |X_m| = 3^{m-1}.
  std::size_t count = 3, x = 1;
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(families::freehedron_boxes(n).faces.size(), count) << n;
    EXPECT_EQ(families::box_realization(n).size(), count);
    count = 3 * count + 2 * x;
    x *= 3;
  }
  EXPECT_EQ(families::freehedron_boxes(3).faces.size(), 39u);
}

TEST(Boxes, FacetSets) {
  using families::FacetLabel;
  EXPECT_EQ(families::facet_set(combinat::NiceExpression::parse_compact("0][0123]|")), (families::FacetSet{{0, 1}}));
  EXPECT_TRUE(families::facet_set(combinat::NiceExpression::top(3)).empty());
  EXPECT_EQ(families::facet_set(combinat::NiceExpression::parse_compact("3]|[01][12][23]")),
            (families::FacetSet{{2, 1}, {2, 2}, {2, 3}}));
}

TEST(Boxes, PosetIsomorphism) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const families::FreehedronPoset poset(n);
    const auto boxes = families::box_realization(n);
    const auto& labels = poset.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      EXPECT_EQ(boxes.at(labels[i]).dimension(), families::face_dimension(Family::Freehedron, labels[i]));
      for (std::size_t j = 0; j < labels.size(); ++j)
        ASSERT_EQ(poset.contains(i, j), boxes.at(labels[i]).contains(boxes.at(labels[j])))
            << labels[i] << " vs " << labels[j];
    }
  }
}

TEST(Boxes, CubeBoxes) {
  EXPECT_EQ(families::cube_box(combinat::CubeWord::parse("abc")).str(), "(0, [0,1], 1)");
}
