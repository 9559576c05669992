#include <algorithm>

#include "support.hpp"
#include "theta/catalog.hpp"
#include "theta/simple_complex.hpp"
#include "theta/text_format.hpp"
#include "theta/verify/oracles.hpp"

namespace theta {
namespace {

using test::simple;

// Element names used below:
//   arrow (0,1,0):       a=0 x=1 b=2
//   pair  (0,1,0,1,0):   a=0 x=1 b=2 y=3 c=4
//   disk  (0,1,2,1,0):   a=0 f=1 alpha=2 g=3 b=4

TEST(SimpleADC, BasisAndBoundary) {
  const auto disk = simple({0, 1, 2, 1, 0});
  const auto& k = *disk.complex();
  EXPECT_EQ(k.size(), 5u);
  EXPECT_EQ(k.boundary(1), Chain(0, {{4, 1}, {0, -1}}));
  EXPECT_EQ(k.boundary(2), Chain(1, {{3, 1}, {1, -1}}));
  EXPECT_EQ(k.augmentation(0), 1);
  EXPECT_EQ(k.augmentation(4), 1);
  const auto swapped = simple({0, 1, 2, 1, 0}, Convention::swapped);
  EXPECT_EQ(swapped.complex()->boundary(2), Chain(1, {{1, 1}, {3, -1}}));
  EXPECT_EQ(from_graded_set(GradedOrderedSet(DimensionSequence({0, 1, 2, 1, 0}))).dims(), disk.dims());
}

TEST(SimpleADC, Recognize) {
  const auto disk = simple({0, 1, 2, 1, 0});
  const auto again = SimpleADC::recognize(disk.complex(), Convention::standard);
  ASSERT_TRUE(again.has_value());
  EXPECT_EQ(again->dims(), disk.dims());
  EXPECT_EQ(again->complex(), disk.complex());
  EXPECT_FALSE(SimpleADC::recognize(disk.complex(), Convention::swapped).has_value());
  EXPECT_FALSE(SimpleADC::recognize(two_arrow_cycle(), Convention::standard).has_value());
}

TEST(Separated, Sequences) {
  const auto pair = simple({0, 1, 0, 1, 0});
  const auto disk = simple({0, 1, 2, 1, 0});
  const std::vector<Element> xy{1, 3}, fg{1, 3}, mixed{0, 1}, none{};
  EXPECT_TRUE(is_separated(pair, xy));
  EXPECT_FALSE(is_separated(disk, fg));
  EXPECT_TRUE(is_separated(disk, none));
  EXPECT_THETA_ERROR(ErrorCode::MixedDegrees, is_separated(pair, mixed));
  EXPECT_THETA_ERROR(ErrorCode::NotSeparated, make_separated(disk, 1, fg));
  EXPECT_THETA_ERROR(ErrorCode::MixedDegrees, make_separated(disk, 1, {0}));
}

TEST(Separated, Order) {
  const auto disk = simple({0, 1, 2, 1, 0});
  const auto pair = simple({0, 1, 0, 1, 0});
  const SeparatedSequence f{1, {1}}, g{1, {3}};
  EXPECT_TRUE(separated_leq(disk, f, g));
  EXPECT_FALSE(separated_leq(disk, g, f));
  EXPECT_TRUE(separated_leq(disk, f, f));
  EXPECT_TRUE(separated_leq_by_boundary(disk, f, g));
  EXPECT_FALSE(separated_leq_by_boundary(disk, g, f));
  // x and y are separated by b, so neither lies below the other.
  const SeparatedSequence x{1, {1}}, y{1, {3}};
  EXPECT_FALSE(separated_leq(pair, x, y));
  EXPECT_FALSE(separated_leq_by_boundary(pair, x, y, 2));
  const SeparatedSequence longer{1, {1, 3}};
  EXPECT_FALSE(separated_leq(pair, x, longer));
}

TEST(Separated, Bridges) {
  const auto disk = simple({0, 1, 2, 1, 0});
  const SeparatedSequence f{1, {1}}, g{1, {3}};
  const std::vector<Element> alpha{2}, empty{};
  EXPECT_TRUE(bridges(disk, alpha, f, g));
  EXPECT_TRUE(bridges_by_boundary(disk, alpha, f, g));
  EXPECT_FALSE(bridges(disk, empty, f, g));
  EXPECT_TRUE(bridges(disk, empty, f, f));
  EXPECT_THETA_ERROR(ErrorCode::NotComparable, bridges(disk, alpha, g, f));
  EXPECT_THETA_ERROR(ErrorCode::NotComparable, bridges_by_boundary(disk, alpha, g, f));
  const auto all = bridging_sequences(disk, f, g);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].elements, alpha);
  EXPECT_TRUE(bridging_sequences(disk, g, f).empty());
}

TEST(SimpleMorphism, Validation) {
  const auto point = simple({0});
  const auto arrow = simple({0, 1, 0});
  const auto pair = simple({0, 1, 0, 1, 0});
  const auto disk = simple({0, 1, 2, 1, 0});
  EXPECT_EQ(validate_simple_morphism(arrow, arrow, {{0}, {1}, {2}}), ChainMorphism::identity(arrow.complex()));
  const auto collapse = validate_simple_morphism(arrow, point, {{0}, {}, {0}});
  EXPECT_EQ(collapse.block(0), test::mat({{1, 1}}));
  const auto composite = validate_simple_morphism(arrow, pair, {{0}, {1, 3}, {4}});
  EXPECT_EQ(composite.image(1), Chain(1, {{1, 1}, {3, 1}}));

  EXPECT_THETA_ERROR(ErrorCode::Condition1Violated, validate_simple_morphism(arrow, arrow, {{2}, {1}, {0}}));
  EXPECT_THETA_ERROR(ErrorCode::Condition1Violated, validate_simple_morphism(arrow, pair, {{0}, {}, {}}));
  EXPECT_THETA_ERROR(ErrorCode::Condition2Violated, validate_simple_morphism(arrow, pair, {{0}, {3}, {2}}));
  EXPECT_THETA_ERROR(ErrorCode::NotSeparated, validate_simple_morphism(arrow, disk, {{0}, {1, 3}, {4}}));
  EXPECT_THETA_ERROR(ErrorCode::WrongDegree, validate_simple_morphism(arrow, arrow, {{1}, {1}, {2}}));
  EXPECT_THETA_ERROR(ErrorCode::ShapeMismatch, validate_simple_morphism(arrow, arrow, {{0}, {1}}));
}

TEST(SimpleMorphism, AssignmentRoundTrip) {
  const auto arrow = simple({0, 1, 0});
  const auto pair = simple({0, 1, 0, 1, 0});
  for (const auto& f : enumerate_hom(arrow, pair)) {
    const auto assignment = assignment_of(f);
    EXPECT_EQ(validate_simple_morphism(arrow, pair, assignment), f);
    for (BasisIndex b = 0; b < arrow.size(); ++b) EXPECT_TRUE(image_is_separated(pair, f, b));
  }
}

TEST(SimpleMorphism, HomCounts) {
  const auto point = simple({0});
  const auto arrow = simple({0, 1, 0});
  const auto pair = simple({0, 1, 0, 1, 0});
  const auto disk = simple({0, 1, 2, 1, 0});
  EXPECT_EQ(enumerate_hom(point, point).size(), 1u);
  EXPECT_EQ(enumerate_hom(arrow, arrow).size(), 3u);
  EXPECT_EQ(enumerate_hom(arrow, pair).size(), 6u);
  EXPECT_EQ(enumerate_hom(pair, arrow).size(), 4u);
  // Two constant maps and one for each parallel arrow of the disk.
  EXPECT_EQ(enumerate_hom(arrow, disk).size(), 4u);
  EXPECT_EQ(enumerate_hom(disk, arrow).size(), 3u);
}

TEST(SimpleMorphism, MatchesBruteForce) {
  std::vector<SimpleADC> objects;
  for (const auto& s : all_dimension_sequences(7)) objects.emplace_back(s);
  for (const auto& k : objects) {
    for (const auto& l : objects) {
      const auto homs = enumerate_hom(k, l);
      EXPECT_EQ(homs, verify::brute_force_hom(k.complex(), l.complex(), 2))
          << format_dims(k.dims()) << " -> " << format_dims(l.dims());
      EXPECT_TRUE(std::is_sorted(homs.begin(), homs.end()));
    }
  }
}

TEST(SimpleMorphism, OneDimensionalCountsAreMonotoneMaps) {
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) {
      std::vector<int> a{0}, b{0};
      for (std::size_t i = 0; i < m; ++i) a.insert(a.end(), {1, 0});
      for (std::size_t i = 0; i < n; ++i) b.insert(b.end(), {1, 0});
      EXPECT_EQ(enumerate_hom(SimpleADC(DimensionSequence(a)), SimpleADC(DimensionSequence(b))).size(),
                verify::monotone_map_count(m + 1, n + 1));
    }
  }
}

}  // namespace
}  // namespace theta
