#include <gtest/gtest.h>

#include <tia/tensor.hpp>

using namespace tia;

namespace {

const LatticeD kLine3{rat(1), {std::nullopt, std::nullopt, std::nullopt}};
const LatticeD kLine2{rat(1), {std::nullopt, std::nullopt}};

ChainD one(const LatticeD& lat, std::vector<Gen1D> fs) {
  return chain_of(lat, GenD{std::move(fs)});
}

}  // namespace

TEST(LatticeD, Validation) {
  EXPECT_NO_THROW(kLine3.validate());
  EXPECT_NO_THROW((LatticeD{rat(1), {3L, std::nullopt}}.validate()));
  EXPECT_THROW((LatticeD{rat(1), {2L}}.validate()), std::invalid_argument);
  EXPECT_THROW((LatticeD{rat(0), {std::nullopt}}.validate()), std::invalid_argument);
  EXPECT_THROW((LatticeD{rat(1), {}}.validate()), std::invalid_argument);
}

TEST(GenD, CodimAddsOverFactors) {
  const GenD g{{Gen1D::point(0), Gen1D::interval(0, 1), Gen1D::point(2)}};
  EXPECT_EQ(g.codim(), 2);
}

TEST(ChainD, AddCanonicalizesPerAxis) {
  const LatticeD lat{rat(1), {3L, std::nullopt}};
  ChainD c{lat};
  c.add(GenD{{Gen1D::point(4), Gen1D::point(4)}}, rat(1));
  EXPECT_EQ(c.coeff(GenD{{Gen1D::point(1), Gen1D::point(4)}}), rat(1));
  EXPECT_THROW(c.add(GenD{{Gen1D::point(0)}}, rat(1)), std::invalid_argument);
}

// Boundary uses the suffix convention: the sign on the axis-i term is the
// parity of the total codimension of the factors after i.
TEST(BoundaryD, SuffixSignConvention) {
  // d(P ox I) = + P ox dI: nothing after axis 1.
  const ChainD b =
      boundary_d(one(kLine2, {Gen1D::point(0), Gen1D::interval(0, 1)}));
  ChainD want{kLine2};
  want.add(GenD{{Gen1D::point(0), Gen1D::point(1)}}, rat(1));
  want.add(GenD{{Gen1D::point(0), Gen1D::point(0)}}, rat(-1));
  EXPECT_EQ(b, want);

  // d(I ox P) = - dI ox P: one point after axis 0.
  const ChainD b2 =
      boundary_d(one(kLine2, {Gen1D::interval(0, 1), Gen1D::point(0)}));
  ChainD want2{kLine2};
  want2.add(GenD{{Gen1D::point(1), Gen1D::point(0)}}, rat(-1));
  want2.add(GenD{{Gen1D::point(0), Gen1D::point(0)}}, rat(1));
  EXPECT_EQ(b2, want2);
}

TEST(BoundaryD, SquaresToZero) {
  const ChainD x = one(
      kLine3, {Gen1D::interval(0, 2, {1, 0}), Gen1D::infinitesimal(1), Gen1D::interval(0, 1)});
  EXPECT_TRUE(boundary_d(boundary_d(x)).empty());
}

// Product interleaving sign: each second-argument factor crosses the earlier
// first-argument factors.
TEST(IntersectD, InterleavingSign) {
  // X = P ox I (codims 1,0), Y = I ox P (codims 0,1): one crossing, sign -1.
  const ChainD X = one(kLine2, {Gen1D::point(0), Gen1D::interval(0, 1)});
  const ChainD Y = one(kLine2, {Gen1D::interval(0, 1), Gen1D::point(1)});
  const ChainD p = intersect_d(X, Y);
  // Axis 0: P_0 at left end -> 1/2 P^{1,0}; axis 1: I * P_1 at right end -> 1/2 P^{0,1}.
  ChainD want{kLine2};
  want.add(GenD{{Gen1D::point(0, {1, 0}), Gen1D::point(1, {0, 1})}}, rat(-1, 4));
  EXPECT_EQ(p, want);
}

TEST(IntersectD, GradedCommutativityOnMixedGrades) {
  const ChainD X = one(kLine2, {Gen1D::point(0), Gen1D::interval(-1, 1, {1, 1})});
  const ChainD Y = one(kLine2, {Gen1D::interval(0, 2), Gen1D::point(0)});
  // |X| = |Y| = 1, so X*Y = -Y*X.
  EXPECT_EQ(intersect_d(X, Y), rat(-1) * intersect_d(Y, X));
}

TEST(IntersectD, LeibnizOnASpotPair) {
  const ChainD X = one(kLine2, {Gen1D::interval(0, 1), Gen1D::point(1, {0, 1})});
  const ChainD Y = one(kLine2, {Gen1D::interval(0, 2, {2, 0}), Gen1D::interval(1, 3)});
  const ChainD lhs = boundary_d(intersect_d(X, Y));
  // |X| = 1.
  const ChainD rhs =
      intersect_d(boundary_d(X), Y) + rat(-1) * intersect_d(X, boundary_d(Y));
  EXPECT_EQ(lhs, rhs);
}

// The displayed three-axis triple intersection: a point-plate through the
// origin on each axis, mutually transverse. Exact value -1/6 on the
// all-points generator with decorations (1,1), (0,0), (0,0).
TEST(IntersectD, TripleProductOfCoordinatePlates) {
  const long h = 1;
  const ChainD A = one(kLine3, {Gen1D::point(0), Gen1D::interval(-h, h), Gen1D::interval(-h, h)});
  const ChainD B = one(kLine3, {Gen1D::interval(0, 2 * h), Gen1D::point(0), Gen1D::interval(-h, h)});
  const ChainD C = one(kLine3, {Gen1D::interval(-2 * h, 0), Gen1D::interval(-h, h), Gen1D::point(0)});

  const ChainD AB = intersect_d(A, B);
  ChainD wantAB{kLine3};
  wantAB.add(GenD{{Gen1D::point(0, {1, 0}), Gen1D::point(0, {0, 0}),
                   Gen1D::interval(-h, h, {1, 1})}},
             rat(-1, 2));
  EXPECT_EQ(AB, wantAB);

  const ChainD ABC = intersect_d(AB, C);
  ChainD want{kLine3};
  want.add(GenD{{Gen1D::point(0, {1, 1}), Gen1D::point(0, {0, 0}), Gen1D::point(0, {0, 0})}},
           rat(-1, 6));
  EXPECT_EQ(ABC, want);

  // Associativity: grouping the other way gives the same chain.
  EXPECT_EQ(intersect_d(A, intersect_d(B, C)), ABC);
}

// --- the double-spacing duality ----------------------------------------------

TEST(StarW, SwapsPointsWithWidthTwoIntervals) {
  const ChainD x = one(kLine2, {Gen1D::point(3), Gen1D::interval(-1, 1)});
  const ChainD got = star_W(x);
  ChainD want{kLine2};
  want.add(GenD{{Gen1D::interval(2, 4), Gen1D::point(0)}}, rat(1));
  EXPECT_EQ(got, want);
}

TEST(StarW, IsAnInvolution) {
  const std::vector<Gen1D> ws = {Gen1D::point(0), Gen1D::point(2), Gen1D::interval(-1, 1),
                                 Gen1D::interval(1, 3)};
  for (const auto& f0 : ws)
    for (const auto& f1 : ws)
      for (const auto& f2 : ws) {
        const ChainD x = one(kLine3, {f0, f1, f2});
        EXPECT_EQ(star_W(star_W(x)), x);
      }
}

TEST(StarW, LinearOverChains) {
  ChainD x{kLine2};
  x.add(GenD{{Gen1D::point(0), Gen1D::point(0)}}, rat(2));
  x.add(GenD{{Gen1D::interval(-1, 1), Gen1D::point(4)}}, rat(-1, 3));
  const ChainD s = star_W(x);
  EXPECT_EQ(s.coeff(GenD{{Gen1D::interval(-1, 1), Gen1D::interval(-1, 1)}}), rat(2));
  EXPECT_EQ(s.coeff(GenD{{Gen1D::point(0), Gen1D::interval(3, 5)}}), rat(-1, 3));
}

TEST(StarW, RejectsCellsOutsideTheDomain) {
  EXPECT_THROW(star_W(one(kLine2, {Gen1D::point(0, {1, 0}), Gen1D::point(0)})), NotInW);
  EXPECT_THROW(star_W(one(kLine2, {Gen1D::interval(0, 1), Gen1D::point(0)})), NotInW);
  EXPECT_THROW(star_W(one(kLine2, {Gen1D::infinitesimal(0), Gen1D::point(0)})), NotInW);
}
