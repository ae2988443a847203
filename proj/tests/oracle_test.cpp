#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "wsg/divisor.hpp"
#include "wsg/gamma.hpp"
#include "wsg/oracle.hpp"
#include "wsg/h_box.hpp"

namespace {

using wsg::CurveParams;
using wsg::Int;
using wsg::OracleConfig;
using wsg::PoleVector;

bool has(const std::vector<PoleVector>& vs, const PoleVector& v) {
  return std::binary_search(vs.begin(), vs.end(), v);
}

// Gaps of the numerical semigroup spanned by `gens`, by dynamic programming.
std::vector<Int> gaps_of(const std::vector<Int>& gens, Int limit) {
  std::vector<bool> member(static_cast<std::size_t>(limit + 1), false);
  member[0] = true;
  for (Int n = 1; n <= limit; ++n)
    for (Int g : gens)
      if (g <= n && member[static_cast<std::size_t>(n - g)]) member[static_cast<std::size_t>(n)] = true;
  std::vector<Int> out;
  for (Int n = 1; n <= limit; ++n)
    if (!member[static_cast<std::size_t>(n)]) out.push_back(n);
  return out;
}

TEST(MonomialPoleVectors, Examples) {
  const CurveParams p(5, 7);
  const auto two = wsg::monomial_pole_vectors(p, OracleConfig::make_default(p, {1, 2}, PoleVector{24, 23}));
  EXPECT_TRUE(has(two, PoleVector{23, 1}));

  const auto at_p2 = wsg::monomial_pole_vectors(p, OracleConfig::make_default(p, {2}, PoleVector{40}));
  EXPECT_TRUE(has(at_p2, PoleVector{6}));
  EXPECT_TRUE(has(at_p2, PoleVector{7}));
  EXPECT_FALSE(has(at_p2, PoleVector{5}));

  const CurveParams small(2, 3);
  const auto tiny = wsg::monomial_pole_vectors(small, OracleConfig::make_default(small, {2}, PoleVector{10}));
  EXPECT_TRUE(has(tiny, PoleVector{2}));
  EXPECT_TRUE(has(tiny, PoleVector{3}));
}

// Each reported vector really is the pole part of some monomial that is
// regular off the support.
TEST(MonomialPoleVectors, EveryVectorHasAWitness) {
  const CurveParams p(3, 5);
  const auto cfg = OracleConfig::make_default(p, {1, 3}, PoleVector{15, 15});
  const auto vs = wsg::monomial_pole_vectors(p, cfg);
  std::set<PoleVector> witnessed;
  for (Int c = cfg.c.lo; c <= cfg.c.hi; ++c)
    for (Int e2 = cfg.e[0].lo; e2 <= cfg.e[0].hi; ++e2)
      for (Int e3 = cfg.e[1].lo; e3 <= cfg.e[1].hi; ++e3)
        for (Int e4 = cfg.e[2].lo; e4 <= cfg.e[2].hi; ++e4) {
          const auto d = wsg::divisor_of(wsg::MonomialFunction{c, {e2, e3, e4}}, p);
          if (d[1] < 0 || d[3] < 0) continue;
          const PoleVector v{std::max<Int>(0, -d[0]), std::max<Int>(0, -d[2])};
          if (v[0] <= 15 && v[1] <= 15) witnessed.insert(v);
        }
  EXPECT_EQ(std::vector<PoleVector>(witnessed.begin(), witnessed.end()), vs);
}

TEST(SingletonSemigroup, FiveSevenAtP2) {
  const CurveParams p(5, 7);
  const auto s = wsg::singleton_semigroup(p, 2, 40);
  EXPECT_EQ(s.generators, (std::vector<Int>{6, 7, 17}));
  EXPECT_EQ(s.gap_count, 12);
  EXPECT_EQ(s.gaps, gaps_of({6, 7, 17}, 40));
  EXPECT_TRUE(s.certified);
  EXPECT_TRUE(s.contains(24));
  EXPECT_FALSE(s.contains(22));

  const auto s3 = wsg::singleton_semigroup(p, 3, 40);
  EXPECT_EQ(s3.generators, s.generators);
  EXPECT_EQ(s3.gaps, s.gaps);
}

TEST(SingletonSemigroup, TwoThree) {
  const auto s = wsg::singleton_semigroup(CurveParams(2, 3), 2, 10);
  EXPECT_EQ(s.generators, (std::vector<Int>{2, 3}));
  EXPECT_EQ(s.gap_count, 1);
  EXPECT_TRUE(s.certified);
}

TEST(SingletonSemigroup, ShortBoundIsNotCertified) {
  const auto s = wsg::singleton_semigroup(CurveParams(5, 7), 2, 10);
  EXPECT_FALSE(s.certified);
}

TEST(SingletonSemigroup, GenusAcrossGrid) {
  for (Int a = 2; a <= 5; ++a)
    for (Int b = 2; b <= 9; ++b) {
      if (wsg::gcd(a, b) != 1) continue;
      const CurveParams p(a, b);
      const auto s = wsg::singleton_semigroup(p, 2, 2 * p.genus() + a * b);
      EXPECT_EQ(s.gap_count, p.genus()) << a << "," << b;
      EXPECT_TRUE(s.certified);
    }
}

TEST(OracleGamma, Examples) {
  const CurveParams p(5, 7);
  EXPECT_EQ(wsg::oracle_gamma(p, 2, PoleVector{24, 23}), wsg::enumerate_gamma(p, 2));
  EXPECT_EQ(wsg::oracle_gamma(CurveParams(3, 4), 2, PoleVector{12, 12}),
            (std::vector<PoleVector>{{1, 5}, {2, 2}, {5, 1}}));
}

TEST(OracleBox, NeverCertifiedAndExcludesGaps) {
  const CurveParams p(5, 7);
  const auto box = wsg::oracle_box_semigroup(p, 2, PoleVector{25, 25});
  EXPECT_FALSE(box.certified);
  EXPECT_FALSE(box.members.contains(PoleVector{23, 0}));
  EXPECT_TRUE(box.members.contains(PoleVector{0, 0}));
  EXPECT_TRUE(box.members.contains(PoleVector{23, 1}));
}

TEST(OracleBox, AgreesWithClosureBox) {
  for (auto [a, b] : std::vector<std::pair<Int, Int>>{{2, 3}, {3, 4}, {3, 5}, {4, 5}}) {
    const CurveParams p(a, b);
    for (Int m = 2; m <= std::min<Int>(a + 1, 3); ++m) {
      const auto bound = wsg::default_bound(p, m);
      const auto oracle = wsg::oracle_box_semigroup(p, m, bound);
      const auto closure = wsg::generate_h_box(p, m, bound);
      EXPECT_TRUE(wsg::same_members(oracle.members, closure.members)) << a << "," << b << " m=" << m;
    }
  }
}

// The function y^{b-i} prod (x - alpha_j)^{-(s_j+1)} realizes each Gamma
// element, and its exponents sit inside the oracle's default search ranges.
TEST(OracleGamma, ConstructiveWitnessInsideRanges) {
  const CurveParams p(5, 7);
  for (Int m = 2; m <= 4; ++m) {
    std::vector<int> support;
    for (int k = 1; k <= m; ++k) support.push_back(k);
    const auto bound = wsg::default_bound(p, m);
    const auto cfg = OracleConfig::make_default(p, support, bound);
    const auto monomials = wsg::monomial_pole_vectors(p, cfg);
    for (const auto& idx : wsg::enumerate_gamma_indices(p, m)) {
      wsg::MonomialFunction f{p.b() - idx.i, std::vector<Int>(5, 0)};
      for (std::size_t k = 0; k < idx.s.size(); ++k) f.e[k] = -(idx.s[k] + 1);
      ASSERT_GE(f.c, cfg.c.lo);
      ASSERT_LE(f.c, cfg.c.hi);
      for (std::size_t k = 0; k < f.e.size(); ++k) {
        ASSERT_GE(f.e[k], cfg.e[k].lo);
        ASSERT_LE(f.e[k], cfg.e[k].hi);
      }
      const auto v = wsg::gamma_element(p, m, idx);
      EXPECT_EQ(wsg::divisor_of(f, p).pole_part(static_cast<std::size_t>(m)), v);
      EXPECT_TRUE(has(monomials, v)) << v;
    }
  }
}

TEST(CertifyTwoPoint, RejectsIncompleteGamma) {
  const CurveParams p(5, 7);
  const auto gamma = wsg::enumerate_gamma(p, 2);
  const auto g1 = wsg::gaps(p);
  const auto g2 = wsg::singleton_semigroup(p, 2, 40).gaps;
  EXPECT_TRUE(wsg::certify_two_point_gamma(gamma, g1, g2));
  auto dropped = gamma;
  dropped.erase(dropped.begin() + 3);
  EXPECT_FALSE(wsg::certify_two_point_gamma(dropped, g1, g2));
}

}  // namespace
