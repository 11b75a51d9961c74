#include <gtest/gtest.h>

#include "checks.hpp"

namespace om {
namespace {

struct Params {
  std::size_t dimension;
  std::size_t size;
  std::uint64_t seed;
};

void PrintTo(const Params& p, std::ostream* os) {
  *os << "d=" << p.dimension << " n=" << p.size << " seed=" << p.seed;
}

std::vector<Params> instances() {
  std::vector<Params> out;
  for (std::uint64_t s = 0; s < 60; ++s) out.push_back({3, 4 + s % 4, 1000 + s});
  for (std::uint64_t s = 0; s < 8; ++s) out.push_back({2, 3 + s % 5, 2000 + s});
  for (std::uint64_t s = 0; s < 8; ++s) out.push_back({4, 5 + s % 3, 3000 + s});
  return out;
}

class RandomArrangement : public ::testing::TestWithParam<Params> {
 protected:
  void SetUp() override {
    std::mt19937_64 rng(GetParam().seed);
    inst_.emplace(random_instance(rng, GetParam().dimension, GetParam().size));
  }
  const ToposSet& topes() const { return inst_->topes; }
  std::optional<RandomInstance> inst_;
};

TEST_P(RandomArrangement, IsValidAndNotAcyclic) {
  EXPECT_TRUE(validate(topes(), {.strict = true}).ok);
  EXPECT_FALSE(topes().acyclic());
  EXPECT_EQ(parse_topes(topes().serialize()), topes());
}

TEST_P(RandomArrangement, AllCountsAgree) {
  const auto lat = ConvexLattice::build(topes());
  EXPECT_EQ(checks::counts_agree(topes(), lat), "") << checks::describe(topes());
}

TEST_P(RandomArrangement, MobiusClosedForm) { EXPECT_EQ(checks::mobius_ok(topes()), ""); }

TEST_P(RandomArrangement, ConvexityAxioms) { EXPECT_EQ(checks::conv_axioms(topes()), ""); }

TEST_P(RandomArrangement, GeometricHull) { EXPECT_EQ(checks::geometric_agrees(inst_->arrangement, topes()), ""); }

TEST_P(RandomArrangement, OddCyclesAreCommittees) {
  std::mt19937_64 rng(GetParam().seed ^ 0x5eed);
  std::size_t checked = 0;
  EXPECT_EQ(checks::odd_cycles_ok(topes(), rng, 20, checked), "");
}

TEST_P(RandomArrangement, ReorientationKeepsTopeCount) {
  const auto flipped = reorient(topes(), GroundSubset::of({1}));
  EXPECT_EQ(flipped.size(), topes().size());
  EXPECT_TRUE(validate(flipped).ok);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomArrangement, ::testing::ValuesIn(instances()),
                         [](const auto& info) {
                           return "d" + std::to_string(info.param.dimension) + "_n" +
                                  std::to_string(info.param.size) + "_s" + std::to_string(info.param.seed);
                         });

TEST(Fixtures, PassEveryCheck) {
  for (const char* name : {"hex.topes", "example28.topes"}) {
    const auto ts = oracle::load(name);
    const auto lat = ConvexLattice::build(ts);
    EXPECT_EQ(checks::counts_agree(ts, lat), "") << name;
    EXPECT_EQ(checks::mobius_ok(ts), "") << name;
    EXPECT_EQ(checks::conv_axioms(ts), "") << name;
  }
}

}  // namespace
}  // namespace om
