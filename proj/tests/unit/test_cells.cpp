#include "support.hpp"
#include "theta/cells.hpp"
#include "theta/verify/oracles.hpp"

namespace theta {
namespace {

using test::simple;
using Level = Cell::Level;

Chain pt(BasisIndex b) { return Chain::basis(0, b); }
Chain edge(BasisIndex b) { return Chain::basis(1, b); }

TEST(Cell, Construction) {
  const auto arrow = simple({0, 1, 0}).complex();
  const Cell x = make_cell(arrow, {{pt(0), pt(2)}, {edge(1), edge(1)}});
  EXPECT_EQ(x.dimension(), 1);
  EXPECT_EQ(x, atom(arrow, 1));
  // Trailing identity levels are trimmed.
  const Cell a = make_cell(arrow, {{pt(0), pt(0)}, {Chain(1), Chain(1)}});
  EXPECT_EQ(a.dimension(), 0);
  EXPECT_EQ(a, atom(arrow, 0));
  EXPECT_EQ(a.level(3).minus, Chain(3));
}

TEST(Cell, RejectsWithNamedErrors) {
  const auto arrow = simple({0, 1, 0}).complex();
  EXPECT_THETA_ERROR(ErrorCode::BoundaryMismatch, make_cell(arrow, {{pt(0), pt(2)}, {Chain(1), Chain(1)}}));
  EXPECT_THETA_ERROR(ErrorCode::BoundaryMismatch, make_cell(arrow, {{pt(0), pt(0)}, {edge(1), edge(1)}}));
  EXPECT_THETA_ERROR(ErrorCode::InfiniteSupport, make_cell(arrow, {{pt(0), pt(2)}}));
  EXPECT_THETA_ERROR(ErrorCode::BadAugmentation, make_cell(arrow, {{pt(0) + pt(2), pt(0) + pt(2)}}));
  EXPECT_THETA_ERROR(ErrorCode::BadAugmentation, make_cell(arrow, {{Chain(0), Chain(0)}}));
  EXPECT_THETA_ERROR(ErrorCode::BadAugmentation, make_cell(arrow, {}));
  EXPECT_THETA_ERROR(ErrorCode::NegativeEntry,
                     make_cell(arrow, {{pt(0) + pt(0) - pt(2), pt(0) + pt(0) - pt(2)}}));
  EXPECT_THETA_ERROR(ErrorCode::WrongDegree, make_cell(arrow, {{edge(1), edge(1)}}));
  EXPECT_THETA_ERROR(ErrorCode::WrongDegree, make_cell(arrow, {{pt(1), pt(1)}}));
}

TEST(Cell, CompositionAlongPoints) {
  const auto pair = simple({0, 1, 0, 1, 0}).complex();
  const Cell x = atom(pair, 1), y = atom(pair, 3);
  const Cell xy = compose(0, x, y);
  EXPECT_EQ(xy, make_cell(pair, {{pt(0), pt(4)}, {edge(1) + edge(3), edge(1) + edge(3)}}));
  EXPECT_THETA_ERROR(ErrorCode::NotComposable, compose(0, y, x));
  EXPECT_EQ(compose(0, identity_at(0, Sign::minus, x), x), x);
  EXPECT_EQ(compose(0, x, identity_at(0, Sign::plus, x)), x);
  const auto arrow = simple({0, 1, 0}).complex();
  EXPECT_THETA_ERROR(ErrorCode::NotComposable, compose(0, atom(arrow, 1), y));
}

TEST(Cell, Faces) {
  const auto disk = simple({0, 1, 2, 1, 0}).complex();
  const Cell alpha = atom(disk, 2);
  EXPECT_EQ(alpha.dimension(), 2);
  EXPECT_EQ(identity_at(1, Sign::minus, alpha), atom(disk, 1));
  EXPECT_EQ(identity_at(1, Sign::plus, alpha), atom(disk, 3));
  EXPECT_EQ(identity_at(0, Sign::minus, alpha), atom(disk, 0));
  EXPECT_EQ(identity_at(0, Sign::plus, alpha), atom(disk, 4));
  EXPECT_EQ(compose(1, atom(disk, 1), alpha), alpha);
  EXPECT_EQ(compose(1, alpha, atom(disk, 3)), alpha);
  EXPECT_THETA_ERROR(ErrorCode::NotComposable, compose(1, alpha, alpha));
}

TEST(Cell, Atoms) {
  const auto disk = simple({0, 1, 2, 1, 0});
  for (BasisIndex b = 1; b < disk.size() - 1; ++b) EXPECT_TRUE(check_atom_boundary(disk, b)) << b;
  EXPECT_THETA_ERROR(ErrorCode::ZeroDimensional, check_atom_boundary(disk, 0));

  ComplexData doubled;
  doubled.degrees = {0, 0, 1};
  doubled.boundaries = {Chain(-1), Chain(-1), Chain(0, {{1, 2}, {0, -2}})};
  doubled.augmentation = {1, 1, 0};
  EXPECT_THETA_ERROR(ErrorCode::NotUnital, atom(make_complex(doubled), 2));
}

TEST(Cell, Enumeration) {
  EXPECT_EQ(enumerate_cells(simple({0}).complex()).size(), 1u);
  EXPECT_EQ(enumerate_cells(simple({0, 1, 0}).complex()).size(), 3u);
  EXPECT_EQ(enumerate_cells(simple({0, 1, 0, 1, 0}).complex()).size(), 6u);
  EXPECT_EQ(enumerate_cells(simple({0, 1, 2, 1, 0}).complex()).size(), 5u);
  for (const auto& s : all_dimension_sequences(7)) {
    const auto k = SimpleADC(s).complex();
    EXPECT_EQ(enumerate_cells(k, 1), verify::brute_force_cells(k, 1));
    if (s.size() <= 5) EXPECT_EQ(enumerate_cells(k, 2), verify::brute_force_cells(k, 2));
  }
}

TEST(Cell, NuOfMorphisms) {
  const auto arrow = simple({0, 1, 0});
  const auto point = simple({0});
  const auto collapse = validate_simple_morphism(arrow, point, {{0}, {}, {0}});
  EXPECT_EQ(nu_map(collapse, atom(arrow.complex(), 1)), atom(point.complex(), 0));
  const auto id = ChainMorphism::identity(arrow.complex());
  for (const auto& x : enumerate_cells(arrow.complex())) EXPECT_EQ(nu_map(id, x), x);

  const auto pair = simple({0, 1, 0, 1, 0});
  const auto spread = validate_simple_morphism(arrow, pair, {{0}, {1, 3}, {4}});
  EXPECT_EQ(nu_map(spread, atom(arrow.complex(), 1)), compose(0, atom(pair.complex(), 1), atom(pair.complex(), 3)));
}

}  // namespace
}  // namespace theta
