#include "support.hpp"
#include "theta/catalog.hpp"
#include "theta/complex.hpp"
#include "theta/morphism.hpp"

namespace theta {
namespace {

using test::mat;
using test::simple;

ComplexData points(std::vector<Integer> aug) {
  ComplexData d;
  for (const auto& e : aug) {
    d.degrees.push_back(0);
    d.boundaries.emplace_back(-1);
    d.augmentation.push_back(e);
  }
  return d;
}

TEST(Chain, ArithmeticDropsZeros) {
  Chain x(1, {{0, 2}, {3, -1}});
  Chain y(1, {{3, 1}});
  EXPECT_EQ(x + y, Chain(1, {{0, 2}}));
  EXPECT_EQ((x - x).terms().size(), 0u);
  EXPECT_EQ(x.coefficient(3), -1);
  EXPECT_EQ(x.coefficient(7), 0);
  EXPECT_EQ(x.coefficient_sum(), 1);
  EXPECT_FALSE(x.is_nonnegative());
  EXPECT_TRUE(y.is_nonnegative());
}

TEST(Chain, ArbitraryPrecision) {
  Chain x(0, {{0, Integer("1000000000000000000000000000000")}});
  x *= Integer("1000000000000000000000000000000");
  EXPECT_EQ(x.coefficient(0), Integer("1000000000000000000000000000000000000000000000000000000000000"));
}

TEST(Chain, PositiveNegativeParts) {
  const auto zero = pos_neg_parts(Chain(0));
  EXPECT_TRUE(zero.positive.is_zero());
  EXPECT_TRUE(zero.negative.is_zero());
  const auto p = pos_neg_parts(Chain(0, {{1, 2}, {0, -3}}));
  EXPECT_EQ(p.positive, Chain(0, {{1, 2}}));
  EXPECT_EQ(p.negative, Chain(0, {{0, 3}}));
  // Basis a < x < b: d x = b - a splits as (b, a).
  const auto arrow = simple({0, 1, 0});
  const auto q = pos_neg_parts(arrow.complex()->boundary(1));
  EXPECT_EQ(q.positive, Chain::basis(0, 2));
  EXPECT_EQ(q.negative, Chain::basis(0, 0));
}

TEST(Complex, StructuralErrors) {
  ComplexData not_chain;
  not_chain.degrees = {0, 0, 1, 1, 2};
  not_chain.boundaries = {Chain(-1), Chain(-1), Chain(0, {{1, 1}, {0, -1}}), Chain(0, {{1, 1}, {0, -1}}),
                          Chain(1, {{2, 1}})};
  not_chain.augmentation = {1, 1, 0, 0, 0};
  EXPECT_THETA_ERROR(ErrorCode::NotChainComplex, make_complex(not_chain));

  ComplexData not_augmented = points({1, 1});
  not_augmented.degrees.push_back(1);
  not_augmented.boundaries.push_back(Chain(0, {{1, 1}}));
  not_augmented.augmentation.push_back(0);
  EXPECT_THETA_ERROR(ErrorCode::NotAugmentedComplex, make_complex(not_augmented));

  ComplexData wrong_degree = points({1});
  wrong_degree.degrees.push_back(1);
  wrong_degree.boundaries.push_back(Chain(1, {{0, 1}}));
  wrong_degree.augmentation.push_back(0);
  EXPECT_THETA_ERROR(ErrorCode::MalformedComplex, make_complex(wrong_degree));

  ComplexData dangling = points({1});
  dangling.degrees.push_back(1);
  dangling.boundaries.push_back(Chain(0, {{5, 1}}));
  dangling.augmentation.push_back(0);
  EXPECT_THETA_ERROR(ErrorCode::MalformedComplex, make_complex(dangling));

  ComplexData ragged = points({1});
  ragged.augmentation.push_back(1);
  EXPECT_THETA_ERROR(ErrorCode::MalformedComplex, make_complex(ragged));
}

TEST(Complex, DegreesAndRanks) {
  const auto k = simple({0, 1, 2, 1, 0}).complex();
  EXPECT_EQ(k->top_degree(), 2);
  EXPECT_EQ(k->rank(0), 2u);
  EXPECT_EQ(k->rank(1), 2u);
  EXPECT_EQ(k->rank(2), 1u);
  EXPECT_EQ(k->rank(3), 0u);
  EXPECT_EQ(k->position_in_degree(3), 1u);
  EXPECT_EQ(make_complex(ComplexData{})->top_degree(), -1);
}

TEST(Complex, Unital) {
  for (const auto& e : catalog()) EXPECT_TRUE(check_unital(*SimpleADC(e.dims).complex())) << e.name;
  EXPECT_FALSE(check_unital(*make_complex(points({2}))));
  EXPECT_TRUE(check_unital(*simple({0, 1, 2, 1, 0}).complex()));
  // Iterated parts of the 2-cell: one step gives f and g, two steps a and b.
  const auto k = simple({0, 1, 2, 1, 0}).complex();
  const Chain alpha = Chain::basis(2, 2);
  EXPECT_EQ(k->iterated_part(alpha, Sign::minus, 1), Chain::basis(1, 1));
  EXPECT_EQ(k->iterated_part(alpha, Sign::plus, 1), Chain::basis(1, 3));
  EXPECT_EQ(k->iterated_part(alpha, Sign::minus, 2), Chain::basis(0, 0));
  EXPECT_EQ(k->iterated_part(alpha, Sign::plus, 2), Chain::basis(0, 4));
}

TEST(Complex, LoopFreedom) {
  for (const auto& e : catalog()) {
    const auto k = SimpleADC(e.dims).complex();
    EXPECT_TRUE(check_strongly_loop_free(*k)) << e.name;
    EXPECT_TRUE(check_loop_free(*k)) << e.name;
  }
  EXPECT_TRUE(check_strongly_loop_free(*simple({0}).complex()));
  EXPECT_FALSE(check_strongly_loop_free(*two_arrow_cycle()));
  EXPECT_FALSE(check_loop_free(*two_arrow_cycle()));
  EXPECT_TRUE(check_unital(*two_arrow_cycle()));
  EXPECT_TRUE(check_loop_free(*make_complex(points({1, 1, 1}))));
  EXPECT_TRUE(check_strongly_loop_free(*make_complex(points({1, 1, 1}))));
}

TEST(Complex, Negated) {
  const auto k = simple({0, 1, 2, 1, 0});
  const auto s = simple({0, 1, 2, 1, 0}, Convention::swapped);
  EXPECT_EQ(*negated(*k.complex()), *s.complex());
}

TEST(Morphism, GeneralValidation) {
  const auto arrow = simple({0, 1, 0}).complex();
  EXPECT_NO_THROW(validate_morphism_general(arrow, arrow, {mat({{1, 0}, {0, 1}}), mat({{1}})}));
  EXPECT_THETA_ERROR(ErrorCode::NotChainMap, validate_morphism_general(arrow, arrow, {mat({{0, 1}, {1, 0}}), mat({{1}})}));
  EXPECT_THETA_ERROR(ErrorCode::NotChainMap, validate_morphism_general(arrow, arrow, {mat({{1, 0}, {0, 1}}), mat({{0}})}));
  EXPECT_THETA_ERROR(ErrorCode::NegativeEntry, validate_morphism_general(arrow, arrow, {mat({{1, 0}, {0, 1}}), mat({{-1}})}));
  EXPECT_THETA_ERROR(ErrorCode::ShapeMismatch, validate_morphism_general(arrow, arrow, {mat({{1, 0}, {0, 1}})}));
  EXPECT_THETA_ERROR(ErrorCode::ShapeMismatch, validate_morphism_general(arrow, arrow, {mat({{1, 0}}), mat({{1}})}));
  const auto point = simple({0}).complex();
  EXPECT_THETA_ERROR(ErrorCode::NotAugmented, validate_morphism_general(point, arrow, {mat({{1}, {1}})}));
  EXPECT_THETA_ERROR(ErrorCode::NotAugmented, validate_morphism_general(point, arrow, {mat({{0}, {0}})}));
}

TEST(Morphism, Composition) {
  const auto arrow = simple({0, 1, 0}).complex();
  const auto point = simple({0}).complex();
  const auto collapse = validate_morphism_general(arrow, point, {mat({{1, 1}}), Matrix(0, 1)});
  const auto id_point = ChainMorphism::identity(point);
  EXPECT_EQ(compose_morphisms(id_point, collapse), collapse);
  EXPECT_EQ(compose_morphisms(collapse, ChainMorphism::identity(arrow)), collapse);
  EXPECT_THETA_ERROR(ErrorCode::SourceTargetMismatch, compose_morphisms(collapse, collapse));

  const auto start = validate_morphism_general(point, arrow, {mat({{1}, {0}})});
  const auto back = compose_morphisms(start, collapse);  // arrow -> point -> arrow
  EXPECT_EQ(back.block(0), mat({{1, 1}, {0, 0}}));
  EXPECT_EQ(back.block(1), mat({{0}}));
  EXPECT_EQ(compose_morphisms(compose_morphisms(collapse, start), collapse),
            compose_morphisms(collapse, compose_morphisms(start, collapse)));
}

TEST(Morphism, ImageAndApply) {
  const auto arrow = simple({0, 1, 0}).complex();
  const auto pair = simple({0, 1, 0, 1, 0}).complex();
  // a -> a, b -> c, x -> x + y
  const auto f = validate_morphism_general(arrow, pair, {mat({{1, 0}, {0, 0}, {0, 1}}), mat({{1}, {1}})});
  EXPECT_EQ(f.image(1), Chain(1, {{1, 1}, {3, 1}}));
  EXPECT_EQ(f.apply(arrow->boundary(1)), pair->boundary_of(f.image(1)));
  EXPECT_EQ(f.block(2).rows(), 0u);
}

}  // namespace
}  // namespace theta
