#include "support.hpp"
#include "theta/catalog.hpp"
#include "theta/wreath.hpp"

namespace theta {
namespace {

using test::simple;

WreathObject points(std::size_t m) { return wreath_of_simple(std::vector<SimpleADC>(m, simple({0}))); }

TEST(Wreath, VOfSmallObjects) {
  EXPECT_EQ(*v_object(points(0)), *simple({0}).complex());
  EXPECT_EQ(*v_object(points(1)), *simple({0, 1, 0}).complex());
  EXPECT_EQ(*v_object(points(2)), *simple({0, 1, 0, 1, 0}).complex());
  EXPECT_EQ(*v_object(wreath_of_simple({simple({0, 1, 0})})), *simple({0, 1, 2, 1, 0}).complex());
  EXPECT_EQ(*v_object(wreath_of_simple({simple({0, 1, 0, 1, 0}), simple({0})})),
            *simple({0, 1, 2, 1, 2, 1, 0, 1, 0}).complex());
  EXPECT_EQ(*v_object(wreath_of_simple({simple({0, 1, 0}, Convention::swapped)}), Convention::swapped),
            *simple({0, 1, 2, 1, 0}, Convention::swapped).complex());
}

TEST(Wreath, Layout) {
  const auto layout = layout_of(wreath_of_simple({simple({0, 1, 0}), simple({0})}));
  EXPECT_EQ(layout.point, (std::vector<BasisIndex>{0, 4, 6}));
  EXPECT_EQ(layout.suspended[0], (std::vector<BasisIndex>{1, 2, 3}));
  EXPECT_EQ(layout.suspended[1], (std::vector<BasisIndex>{5}));
}

TEST(Wreath, HomCounts) {
  const auto hom = simple_hom_function(Convention::standard);
  EXPECT_EQ(enumerate_wreath_hom(points(1), points(1), hom).size(), 3u);
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(enumerate_wreath_hom(points(0), points(n), hom).size(), n + 1);
  EXPECT_EQ(enumerate_wreath_hom(points(1), points(2), hom).size(), 6u);
  EXPECT_EQ(enumerate_wreath_hom(points(1), points(0), hom).size(), 1u);
}

TEST(Wreath, MorphismValidation) {
  const auto w1 = points(1), w2 = points(2);
  const auto pt = w2.component(1);
  const auto f = ChainMorphism::identity(pt);
  EXPECT_NO_THROW(WreathMorphism(w1, w2, {0, 2}, {ChainMorphism::identity(w1.component(1)), f}));
  EXPECT_THETA_ERROR(ErrorCode::InvalidWreathMorphism, WreathMorphism(w1, w2, {1, 0}, {}));
  EXPECT_THETA_ERROR(ErrorCode::InvalidWreathMorphism, WreathMorphism(w1, w2, {0}, {}));
  EXPECT_THETA_ERROR(ErrorCode::InvalidWreathMorphism, WreathMorphism(w1, w2, {0, 3}, {}));
  EXPECT_THETA_ERROR(ErrorCode::InvalidWreathMorphism, WreathMorphism(w1, w2, {0, 1}, {}));
  EXPECT_THETA_ERROR(ErrorCode::InvalidWreathMorphism, WreathObject(2, {pt}));
  const auto arrow_id = ChainMorphism::identity(simple({0, 1, 0}).complex());
  EXPECT_THETA_ERROR(ErrorCode::InvalidWreathMorphism, WreathMorphism(w1, w2, {0, 1}, {arrow_id}));
}

TEST(Wreath, Composition) {
  const auto hom = simple_hom_function(Convention::standard);
  const auto w1 = points(1), w2 = points(2);
  for (const auto& f : enumerate_wreath_hom(w1, w2, hom)) {
    EXPECT_EQ(wreath_compose(f, WreathMorphism::identity(w1)), f);
    EXPECT_EQ(wreath_compose(WreathMorphism::identity(w2), f), f);
    for (const auto& g : enumerate_wreath_hom(w2, w1, hom)) {
      const auto gf = wreath_compose(g, f);
      EXPECT_EQ(v_morphism(gf), compose_morphisms(v_morphism(g), v_morphism(f)));
    }
  }
  const auto f = enumerate_wreath_hom(w1, w2, hom).front();
  EXPECT_THETA_ERROR(ErrorCode::SourceTargetMismatch, wreath_compose(f, f));
}

TEST(Wreath, VOnMorphisms) {
  const auto w = wreath_of_simple({simple({0, 1, 0}), simple({0})});
  EXPECT_EQ(v_morphism(WreathMorphism::identity(w)), ChainMorphism::identity(v_object(w)));
  const auto hom = simple_hom_function(Convention::standard);
  for (const auto& f : enumerate_wreath_hom(points(1), w, hom)) {
    const auto v = v_morphism(f);
    EXPECT_NO_THROW(validate_morphism_general(v.source(), v.target(), v.blocks()));
  }
}

TEST(Wreath, FullyFaithful) {
  const auto a = wreath_of_simple({simple({0, 1, 0})});
  const auto b = wreath_of_simple({simple({0, 1, 0, 1, 0}), simple({0})});
  for (const auto& [w1, w2] : std::vector<std::pair<WreathObject, WreathObject>>{
           {points(1), points(1)}, {points(1), points(2)}, {a, b}, {b, a}, {points(0), b}}) {
    const auto ff = check_fully_faithful(w1, w2);
    EXPECT_TRUE(ff.holds());
    EXPECT_EQ(ff.wreath_count, ff.target_count);
  }
  EXPECT_EQ(check_fully_faithful(points(1), points(1)).wreath_count, 3u);
  const auto sa = wreath_of_simple({simple({0, 1, 0}, Convention::swapped)});
  const auto sb = wreath_of_simple({simple({0, 1, 0, 1, 0}, Convention::swapped), simple({0}, Convention::swapped)});
  const auto swapped = check_fully_faithful(sa, sb, Convention::swapped);
  EXPECT_TRUE(swapped.holds());
  EXPECT_EQ(swapped.wreath_count, check_fully_faithful(a, b).wreath_count);
}

TEST(Wreath, ComponentsOutsideTheClass) {
  const WreathObject zero({make_complex(ComplexData{})});
  EXPECT_THETA_ERROR(ErrorCode::ComponentOutsidePhi, check_fully_faithful(zero, points(1)));
  const WreathObject cycle({two_arrow_cycle()});
  EXPECT_THETA_ERROR(ErrorCode::ComponentOutsidePhi, check_fully_faithful(points(1), cycle));
  EXPECT_THETA_ERROR(ErrorCode::NotSimple, simple_hom_function(Convention::standard)(two_arrow_cycle(), two_arrow_cycle()));
}

TEST(Wreath, ThetaLevels) {
  EXPECT_EQ(theta_level(simple({0})), 0);
  EXPECT_EQ(theta_level(simple({0, 1, 0, 1, 0})), 1);
  EXPECT_EQ(theta_level(simple({0, 1, 2, 1, 0})), 2);
  std::vector<DimensionSequence> level1;
  for (const auto& k : iterated_wreath_objects(1, 5)) level1.push_back(k.dims());
  EXPECT_EQ(level1, (std::vector<DimensionSequence>{DimensionSequence({0}), DimensionSequence({0, 1, 0}),
                                                    DimensionSequence({0, 1, 0, 1, 0})}));
  EXPECT_EQ(iterated_wreath_objects(2, 5).size(), 4u);
  EXPECT_EQ(iterated_wreath_objects(0, 13).size(), 1u);
  for (const auto& k : iterated_wreath_objects(2, 9)) EXPECT_LE(theta_level(k), 2);
}

}  // namespace
}  // namespace theta
