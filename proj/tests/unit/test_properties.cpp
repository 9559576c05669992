#include "support.hpp"
#include "theta/catalog.hpp"
#include "theta/text_format.hpp"
#include "theta/verify/oracles.hpp"
#include "theta/verify/properties.hpp"

namespace theta {
namespace {

TEST(Oracles, MonotoneMaps) {
  EXPECT_EQ(verify::monotone_map_count(0, 3), 1u);
  EXPECT_EQ(verify::monotone_map_count(1, 3), 3u);
  EXPECT_EQ(verify::monotone_map_count(2, 2), 3u);
  EXPECT_EQ(verify::monotone_map_count(3, 3), 10u);
  EXPECT_EQ(verify::monotone_map_count(2, 0), 0u);
}

TEST(Oracles, SequenceCounts) {
  EXPECT_EQ(verify::dimension_sequence_count(1), 1u);
  EXPECT_EQ(verify::dimension_sequence_count(3), 2u);
  EXPECT_EQ(verify::dimension_sequence_count(5), 4u);
  EXPECT_EQ(verify::dimension_sequence_count(13), 197u);
}

TEST(Oracles, BruteForceHomOfCycle) {
  const auto cycle = two_arrow_cycle();
  const auto point = test::simple({0}).complex();
  // Both arrows must go to the point's identity, and both points to the point.
  EXPECT_EQ(verify::brute_force_hom(cycle, point).size(), 1u);
}

TEST(Oracles, DecompositionInvertsV) {
  for (const auto& s : all_dimension_sequences(11)) {
    const SimpleADC k(s);
    EXPECT_EQ(*v_object(verify::wreath_decomposition(k)), *k.complex()) << format_dims(s);
  }
}

class Suite : public ::testing::TestWithParam<Convention> {};

TEST_P(Suite, EveryPropertyHolds) {
  const auto results = verify::run_suite({GetParam(), 1});
  EXPECT_GE(results.size(), 30u);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.module << ": " << r.name << ": " << r.detail;
}

INSTANTIATE_TEST_SUITE_P(BothConventions, Suite, ::testing::Values(Convention::standard, Convention::swapped));

}  // namespace
}  // namespace theta
