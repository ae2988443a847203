#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "wsg/errors.hpp"
#include "wsg/semigroup.hpp"

namespace {

using wsg::CurveParams;
using wsg::Int;

// n = x*a + y*b with x, y >= 0, by direct search.
bool brute_member(Int a, Int b, Int n) {
  if (n < 0) return false;
  for (Int x = 0; x * a <= n; ++x)
    if ((n - x * a) % b == 0) return true;
  return false;
}

std::vector<Int> brute_gaps(Int a, Int b) {
  std::vector<Int> out;
  for (Int n = 1; n <= a * b; ++n)
    if (!brute_member(a, b, n)) out.push_back(n);
  return out;
}

std::vector<std::pair<Int, Int>> coprime_grid() {
  std::vector<std::pair<Int, Int>> out;
  for (Int a = 2; a <= 7; ++a)
    for (Int b = 2; b <= 13; ++b)
      if (wsg::gcd(a, b) == 1) out.emplace_back(a, b);
  return out;
}

TEST(Semigroup, MembershipExamples) {
  const CurveParams p(5, 7);
  EXPECT_TRUE(wsg::semigroup_membership(p, 0));
  EXPECT_TRUE(wsg::semigroup_membership(p, 12));
  EXPECT_FALSE(wsg::semigroup_membership(p, 23));
  EXPECT_FALSE(wsg::semigroup_membership(p, -5));
}

TEST(Semigroup, GapsExamples) {
  EXPECT_EQ(wsg::gaps(CurveParams(2, 3)), std::vector<Int>{1});

  // frozen from brute_gaps(5, 7)
  const std::vector<Int> expected{1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23};
  ASSERT_EQ(brute_gaps(5, 7), expected);
  EXPECT_EQ(wsg::gaps(CurveParams(5, 7)), expected);
  EXPECT_EQ(expected.size(), 12u);

  EXPECT_EQ(wsg::gaps(CurveParams(5, 126)).size(), 250u);
}

TEST(Semigroup, GapRepresentation) {
  const CurveParams p(5, 7);
  EXPECT_EQ(wsg::gap_representation(p, 23), (wsg::GapRep{23, 1, 1}));
  EXPECT_EQ(wsg::gap_representation(p, 16), (wsg::GapRep{16, 1, 2}));
  EXPECT_FALSE(wsg::gap_representation(p, 12).has_value());
  EXPECT_FALSE(wsg::gap_representation(p, 0).has_value());
  EXPECT_FALSE(wsg::gap_representation(p, 40).has_value());
}

TEST(Semigroup, GapRepresentationIsUniqueAndComplete) {
  for (auto [a, b] : coprime_grid()) {
    const CurveParams p(a, b);
    for (Int n = 1; n <= 2 * a * b; ++n) {
      std::vector<std::pair<Int, Int>> reps;
      for (Int i = 1; i <= b - 1; ++i)
        for (Int j = 1; j <= a - 1; ++j)
          if (a * b - i * a - j * b == n) reps.emplace_back(i, j);
      const auto rep = wsg::gap_representation(p, n);
      ASSERT_LE(reps.size(), 1u) << a << "," << b << " n=" << n;
      ASSERT_EQ(rep.has_value(), !reps.empty()) << a << "," << b << " n=" << n;
      ASSERT_EQ(rep.has_value(), !brute_member(a, b, n)) << a << "," << b << " n=" << n;
      if (rep) {
        EXPECT_EQ(rep->i, reps[0].first);
        EXPECT_EQ(rep->j, reps[0].second);
      }
    }
  }
}

TEST(Semigroup, Frobenius) {
  EXPECT_EQ(wsg::frobenius(CurveParams(2, 3)), 1);
  EXPECT_EQ(wsg::frobenius(CurveParams(5, 7)), 23);
  EXPECT_EQ(wsg::frobenius(CurveParams(3, 4)), 5);
  EXPECT_EQ(wsg::gaps(CurveParams(3, 4)), (std::vector<Int>{1, 2, 5}));
}

TEST(Semigroup, GridProperties) {
  for (auto [a, b] : coprime_grid()) {
    const CurveParams p(a, b);
    const auto gs = wsg::gaps(p);
    EXPECT_EQ(static_cast<Int>(gs.size()), (a - 1) * (b - 1) / 2);
    EXPECT_EQ(static_cast<Int>(gs.size()), p.genus());
    EXPECT_EQ(gs.back(), a * b - a - b);
    EXPECT_TRUE(std::adjacent_find(gs.begin(), gs.end(), std::greater_equal<>()) == gs.end());
    const std::set<Int> gap_set(gs.begin(), gs.end());
    for (Int n = 0; n <= 2 * a * b; ++n) {
      ASSERT_NE(wsg::semigroup_membership(p, n), gap_set.count(n) == 1) << a << "," << b << " n=" << n;
      ASSERT_EQ(wsg::semigroup_membership(p, n), brute_member(a, b, n));
    }
  }
}

TEST(CurveParams, Validation) {
  EXPECT_THROW(CurveParams(4, 6), wsg::ValidationError);
  EXPECT_THROW(CurveParams(1, 3), wsg::ValidationError);
  EXPECT_THROW(CurveParams(3, 0), wsg::ValidationError);
  EXPECT_EQ(CurveParams(5, 7).genus(), 12);
  // consecutive odd numbers near sqrt(2^63): coprime, but ab overflows
  EXPECT_THROW(CurveParams(3037000501LL, 3037000503LL), std::overflow_error);
}

TEST(CurveParams, Presets) {
  const auto h = CurveParams::hermitian_like(5, 3);
  EXPECT_EQ(h.a(), 5);
  EXPECT_EQ(h.b(), 126);
  EXPECT_EQ(h.genus(), 250);
  EXPECT_EQ(CurveParams::hermitian_like(4, 1).b(), 5);
  EXPECT_THROW(CurveParams::hermitian_like(5, 2), wsg::ValidationError);
  EXPECT_THROW(CurveParams::hermitian_like(6, 1), wsg::ValidationError);

  EXPECT_TRUE(h.warnings_for(5).empty());
  EXPECT_EQ(h.warnings_for(6).size(), 1u);
  EXPECT_TRUE(CurveParams(5, 7).warnings_for(6).empty());
  EXPECT_EQ(CurveParams::kummer(5, 7, 4).warnings_for(5).size(), 1u);
}

}  // namespace
