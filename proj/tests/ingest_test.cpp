#include <gtest/gtest.h>

#include "oracle.hpp"
#include "om/convexity.hpp"
#include "om/ingest.hpp"

namespace om {
namespace {

using S = GroundSubset;

RationalVector vec(std::initializer_list<int> xs) {
  RationalVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

Rational det3(const RationalVector& a, const RationalVector& b, const RationalVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool general_position_3d(const Arrangement& arr) {
  const auto& v = arr.vectors();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      for (std::size_t k = j + 1; k < v.size(); ++k)
        if (det3(v[i], v[j], v[k]) == 0) return false;
  return true;
}

TEST(ParseArrangement, Basis) {
  const auto arr = parse_arrangement("1 0 0\n0 1 0\n0 0 1");
  EXPECT_EQ(arr.dimension(), 3u);
  EXPECT_EQ(arr.size(), 3u);
}

TEST(ParseArrangement, Rationals) {
  const auto arr = parse_arrangement("# comment\n1/2 -3   # trailing\n\n0 1\n");
  ASSERT_EQ(arr.size(), 2u);
  EXPECT_EQ(arr.vectors()[0][0], Rational(1, 2));
  EXPECT_EQ(arr.vectors()[0][1], Rational(-3));
  EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
}

TEST(ParseArrangement, Errors) {
  EXPECT_THROW(parse_arrangement("1 0\n2 0"), ParseError);
  EXPECT_THROW(parse_arrangement("1 0\n-3 0"), ParseError);
  EXPECT_THROW(parse_arrangement("0 0\n1 0"), ParseError);
  EXPECT_THROW(parse_arrangement("1 0\n1 1 1"), ParseError);
  EXPECT_THROW(parse_arrangement("1 x"), ParseError);
  EXPECT_THROW(parse_arrangement("1/0 1"), ParseError);
  EXPECT_THROW(parse_arrangement("# nothing\n"), ParseError);
}

TEST(StrictFeasibility, SmallSystems) {
  EXPECT_TRUE(strictly_feasible({}));
  EXPECT_TRUE(strictly_feasible({vec({1, 0}), vec({0, 1})}));
  EXPECT_FALSE(strictly_feasible({vec({1, 0}), vec({-1, 0})}));
  EXPECT_FALSE(strictly_feasible({vec({1, 1}), vec({-1, 0}), vec({0, -1})}));
  EXPECT_TRUE(strictly_feasible({vec({1, 1}), vec({-1, 0}), vec({0, 1})}));
  EXPECT_FALSE(strictly_feasible({vec({0, 0})}));
  // x + y + z > 0 with each coordinate negative: infeasible in three steps.
  EXPECT_FALSE(strictly_feasible({vec({1, 1, 1}), vec({-1, 0, 0}), vec({0, -1, 0}), vec({0, 0, -1})}));
  EXPECT_TRUE(strictly_feasible({vec({1, 1, 1}), vec({-1, 0, 0}), vec({0, -1, 0})}));
}

TEST(ArrangementTopes, BasisGivesAllOctants) {
  const auto ts = arrangement_topes(parse_arrangement("1 0 0\n0 1 0\n0 0 1"));
  EXPECT_EQ(ts.size(), 8u);
  EXPECT_TRUE(ts.acyclic());
}

TEST(ArrangementTopes, HexFromThreeLines) {
  const auto arr = parse_arrangement(oracle::read_text(oracle::fixture_path("hex.arr")));
  const auto ts = arrangement_topes(arr, S::of({2}));
  EXPECT_EQ(ts, oracle::load("hex.topes"));
  EXPECT_TRUE(validate(ts).ok);
  // Pointed and unreoriented: acyclic, validator warns.
  const auto plain = arrangement_topes(arr);
  EXPECT_TRUE(plain.acyclic());
  EXPECT_EQ(validate(plain).warnings.size(), 1u);
}

TEST(ArrangementTopes, SizeBound) {
  std::vector<RationalVector> many;
  for (int i = 1; i <= 17; ++i) many.push_back(vec({1, i}));
  EXPECT_THROW(arrangement_topes(Arrangement(2, many)), std::invalid_argument);
}

TEST(ArrangementTopes, PlanarArrangementsHaveTwoNTopes) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const auto inst = random_instance(rng, 2, n, 4);
    EXPECT_EQ(inst.topes.size(), 2 * n);
    EXPECT_TRUE(validate(inst.topes).ok);
  }
}

TEST(ArrangementTopes, GeneralPositionRegionCount) {
  // n planes through the origin of R^3 in general position cut it into n^2 - n + 2 regions.
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 15; ++trial) {
    const auto inst = random_instance(rng, 3, 4 + trial % 4, 4);
    if (!general_position_3d(inst.arrangement)) continue;
    const std::size_t n = inst.arrangement.size();
    EXPECT_EQ(inst.topes.size(), n * n - n + 2);
    ++checked;
  }
  EXPECT_GE(checked, 5);
}

TEST(RandomInstance, RejectsTooFewElements) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(random_instance(rng, 3, 3), std::invalid_argument);
  EXPECT_THROW(random_instance(rng, 2, 17), std::invalid_argument);
}

TEST(RandomInstance, IsSimpleAndNotAcyclic) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = random_instance(rng, 3, 6);
    const auto report = validate(inst.topes, {.strict = true});
    EXPECT_TRUE(report.ok);
    EXPECT_FALSE(inst.topes.acyclic());
    EXPECT_EQ(arrangement_topes(inst.arrangement), inst.topes);
  }
}

TEST(GeometricConv, AgreesWithTopeConvOnHex) {
  const auto arr = parse_arrangement(oracle::read_text(oracle::fixture_path("hex.arr"))).reoriented(S::of({2}));
  const auto ts = arrangement_topes(arr);
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    EXPECT_EQ(geometric_conv(arr, S(bits)), conv(ts, S(bits))) << S(bits).to_string();
  }
}

}  // namespace
}  // namespace om
