#include <gtest/gtest.h>

#include <tia/linalg.hpp>

using namespace tia;

namespace {

Mat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  Mat m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = rat(v);
    ++i;
  }
  return m;
}

}  // namespace

TEST(Mat, BasicOps) {
  const Mat I = Mat::identity(3);
  const Mat A = from_rows({{1, 2, 0}, {0, 1, 4}, {5, 0, 1}});
  EXPECT_EQ(A * I, A);
  EXPECT_EQ(I * A, A);
  EXPECT_EQ(A + A - A, A);
  EXPECT_EQ(A.transposed().transposed(), A);
  EXPECT_FALSE(A.is_symmetric());
  EXPECT_TRUE((A + A.transposed()).is_symmetric());
}

TEST(Rref, PivotsAndRank) {
  Mat A = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const auto pivots = rref_in_place(A);
  ASSERT_EQ(pivots.size(), 2u);
  EXPECT_EQ(pivots[0], 0u);
  EXPECT_EQ(pivots[1], 1u);
  EXPECT_EQ(rank(from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})), 2u);
  EXPECT_EQ(rank(Mat::identity(4)), 4u);
  EXPECT_EQ(rank(Mat(3, 3)), 0u);
}

TEST(Solve, ExactSolution) {
  const Mat A = from_rows({{2, 1}, {1, 3}});
  const Mat B = from_rows({{1}, {0}});
  const Mat X = solve(A, B);
  EXPECT_EQ(A * X, B);
  EXPECT_EQ(X.at(0, 0), rat(3, 5));
  EXPECT_EQ(X.at(1, 0), rat(-1, 5));
}

TEST(Solve, SingularThrows) {
  const Mat A = from_rows({{1, 2}, {2, 4}});
  EXPECT_THROW(solve(A, Mat::identity(2)), std::invalid_argument);
}

TEST(Definiteness, Classification) {
  EXPECT_EQ(classify_definiteness(from_rows({{2, 1}, {1, 2}})),
            Definiteness::PositiveDefinite);
  EXPECT_EQ(classify_definiteness(from_rows({{1, 1}, {1, 1}})),
            Definiteness::PositiveSemidefinite);
  EXPECT_EQ(classify_definiteness(from_rows({{0, 1}, {1, 0}})), Definiteness::Indefinite);
  EXPECT_EQ(classify_definiteness(from_rows({{-1}})), Definiteness::Indefinite);
  EXPECT_EQ(classify_definiteness(Mat(2, 2)), Definiteness::PositiveSemidefinite);
  // A PSD matrix whose leading entry vanishes needs the diagonal pivoting.
  EXPECT_EQ(classify_definiteness(from_rows({{0, 0}, {0, 1}})),
            Definiteness::PositiveSemidefinite);
  EXPECT_THROW(classify_definiteness(from_rows({{1, 2}, {3, 4}})), std::invalid_argument);
}
