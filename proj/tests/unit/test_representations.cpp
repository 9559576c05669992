#include "support.hpp"
#include "theta/representations.hpp"
#include "theta/verify/oracles.hpp"

namespace theta {
namespace {

using test::error_of;

const std::vector<int> kSeventeen = {0, 1, 2, 1, 2, 3, 4, 3, 2, 3, 4, 3, 2, 1, 0, 1, 0};

TEST(DimensionSequence, AcceptsValidSequences) {
  EXPECT_NO_THROW(DimensionSequence({0, 1, 0}));
  EXPECT_NO_THROW((void)DimensionSequence(kSeventeen));
  EXPECT_EQ(DimensionSequence(kSeventeen).max_dimension(), 4);
}

TEST(DimensionSequence, RejectsWithNamedErrors) {
  EXPECT_THETA_ERROR(ErrorCode::StepNotOne, DimensionSequence({0, 2, 0}));
  EXPECT_THETA_ERROR(ErrorCode::EmptySequence, DimensionSequence({}));
  EXPECT_THETA_ERROR(ErrorCode::EndpointNotZero, DimensionSequence({1, 0}));
  EXPECT_THETA_ERROR(ErrorCode::EndpointNotZero, DimensionSequence({0, 1}));
  EXPECT_THETA_ERROR(ErrorCode::StepNotOne, DimensionSequence({0, 0}));
  EXPECT_THETA_ERROR(ErrorCode::StepNotOne, DimensionSequence({0, -1, 0}));
  const std::vector<int> v{0, 1, 0};
  EXPECT_EQ(validate_sequence(v), DimensionSequence({0, 1, 0}));
}

TEST(UpDown, FromSequence) {
  EXPECT_EQ(seq_to_updown(DimensionSequence(kSeventeen)).entries(), (std::vector<int>{2, 1, 4, 2, 4, 0, 1}));
  EXPECT_EQ(seq_to_updown(DimensionSequence({0})).entries(), std::vector<int>{0});
  EXPECT_EQ(seq_to_updown(DimensionSequence({0, 1, 0, 1, 0})).entries(), (std::vector<int>{1, 0, 1}));
}

TEST(UpDown, ToSequence) {
  EXPECT_EQ(updown_to_seq(UpDownVector({0})), DimensionSequence({0}));
  EXPECT_EQ(updown_to_seq(UpDownVector({2, 1, 4, 2, 4, 0, 1})), DimensionSequence(kSeventeen));
  EXPECT_EQ(updown_to_seq(UpDownVector({1, 0, 1})), DimensionSequence({0, 1, 0, 1, 0}));
}

TEST(UpDown, RejectsInvalidVectors) {
  EXPECT_THETA_ERROR(ErrorCode::InvalidUpDown, UpDownVector({}));
  EXPECT_THETA_ERROR(ErrorCode::InvalidUpDown, UpDownVector({1, 0}));
  EXPECT_THETA_ERROR(ErrorCode::InvalidUpDown, UpDownVector({1, 2, 3}));
  EXPECT_THETA_ERROR(ErrorCode::InvalidUpDown, UpDownVector({1, 1, 1}));
  EXPECT_THETA_ERROR(ErrorCode::InvalidUpDown, UpDownVector({-1}));
}

TEST(LevelTree, FromUpDown) {
  EXPECT_EQ(serialize(updown_to_tree(UpDownVector({0}))), "()");
  EXPECT_EQ(serialize(updown_to_tree(UpDownVector({1}))), "(())");
  EXPECT_EQ(serialize(updown_to_tree(UpDownVector({1, 0, 1}))), "(()())");
}

TEST(LevelTree, ToUpDown) {
  EXPECT_EQ(tree_to_updown(parse_tree("()")).entries(), std::vector<int>{0});
  EXPECT_EQ(tree_to_updown(parse_tree("((()))")).entries(), std::vector<int>{2});
  EXPECT_EQ(tree_to_updown(parse_tree("(()(()))")).entries(), (std::vector<int>{1, 0, 2}));
}

TEST(LevelTree, ParseAndShape) {
  const LevelTree t = parse_tree(" ( () (()) ) ");
  EXPECT_EQ(t.vertex_count(), 4u);
  EXPECT_EQ(t.height(), 2u);
  EXPECT_EQ(serialize(t), "(()(()))");
  for (const char* bad : {"", "(", "(()", "())", "()()", "(x)"}) EXPECT_THETA_ERROR(ErrorCode::InvalidTree, parse_tree(bad)) << bad;
}

TEST(Enumeration, CountsAgreeWithCatalanSums) {
  for (std::size_t len = 1; len <= 13; ++len)
    EXPECT_EQ(all_dimension_sequences(len).size(), verify::dimension_sequence_count(len)) << len;
  EXPECT_EQ(all_dimension_sequences(13).size(), 197u);
  const auto five = all_dimension_sequences(5);
  ASSERT_EQ(five.size(), 4u);
  EXPECT_EQ(five[0], DimensionSequence({0}));
  EXPECT_EQ(five[1], DimensionSequence({0, 1, 0}));
  EXPECT_EQ(five[2], DimensionSequence({0, 1, 0, 1, 0}));
  EXPECT_EQ(five[3], DimensionSequence({0, 1, 2, 1, 0}));
}

TEST(Enumeration, RoundTripsEverySequence) {
  for (const auto& s : all_dimension_sequences(13)) {
    const auto u = seq_to_updown(s);
    EXPECT_EQ(updown_to_seq(u), s);
    const auto t = updown_to_tree(u);
    EXPECT_EQ(tree_to_updown(t), u);
    EXPECT_EQ(parse_tree(serialize(t)), t);
  }
}

TEST(GradedOrderedSet, Boundaries) {
  const GradedOrderedSet g(DimensionSequence({0, 1, 2, 1, 0}));
  EXPECT_EQ(boundaries(g, 2), (Boundaries{1, 3}));
  EXPECT_EQ(boundaries(g, 1), (Boundaries{0, 4}));
  EXPECT_EQ(boundaries(g, 3), (Boundaries{0, 4}));
  EXPECT_THETA_ERROR(ErrorCode::ZeroDimensional, boundaries(g, 0));
}

TEST(GradedOrderedSet, Globularity) {
  for (const auto& s : all_dimension_sequences(13)) {
    const GradedOrderedSet g(s);
    for (Element x = 0; x < g.size(); ++x) {
      if (g.dimension(x) < 2) continue;
      const auto b = boundaries(g, x);
      EXPECT_EQ(boundaries(g, b.source), boundaries(g, b.target));
    }
  }
}

}  // namespace
}  // namespace theta
