#include "tia/linalg.hpp"

namespace tia {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Mat z(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const Rational& v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

Mat operator+(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("matrix sum shape mismatch");
  Mat z = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) z.at(i, j) += y.at(i, j);
  return z;
}

Mat operator-(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("matrix difference shape mismatch");
  Mat z = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) z.at(i, j) -= y.at(i, j);
  return z;
}

std::vector<std::size_t> rref_in_place(Mat& A) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
    std::size_t p = row;
    while (p < A.rows() && A.at(p, col) == 0) ++p;
    if (p == A.rows()) continue;
    if (p != row)
      for (std::size_t j = col; j < A.cols(); ++j) std::swap(A.at(p, j), A.at(row, j));
    const Rational inv = Rational(1) / A.at(row, col);
    for (std::size_t j = col; j < A.cols(); ++j) A.at(row, j) *= inv;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i == row || A.at(i, col) == 0) continue;
      const Rational f = A.at(i, col);
      for (std::size_t j = col; j < A.cols(); ++j) A.at(i, j) -= f * A.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Mat A) { return rref_in_place(A).size(); }

Mat solve(const Mat& A, const Mat& B) {
  if (A.rows() != A.cols()) throw std::invalid_argument("solve requires a square matrix");
  if (A.rows() != B.rows()) throw std::invalid_argument("solve shape mismatch");
  const std::size_t n = A.rows(), m = B.cols();
  Mat aug(n, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    for (std::size_t j = 0; j < m; ++j) aug.at(i, n + j) = B.at(i, j);
  }
  const auto pivots = rref_in_place(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
    throw std::invalid_argument("solve: singular matrix");
  Mat X(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) X.at(i, j) = aug.at(i, n + j);
  return X;
}

Definiteness classify_definiteness(Mat A) {
  if (!A.is_symmetric()) throw std::invalid_argument("definiteness requires a symmetric matrix");
  const std::size_t n = A.rows();
  std::vector<bool> done(n, false);
  std::size_t eliminated = 0;
  for (;;) {
    // Any negative diagonal entry of a Schur complement rules out positive
    // semidefiniteness.
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (A.at(i, i) < 0) return Definiteness::Indefinite;
      if (A.at(i, i) > 0 && pivot == n) pivot = i;
    }
    if (pivot == n) {
      // All remaining diagonals are zero: semidefinite iff the remaining
      // block vanishes entirely.
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (done[j]) continue;
          if (A.at(i, j) != 0) return Definiteness::Indefinite;
        }
      }
      return eliminated == n ? Definiteness::PositiveDefinite
                             : Definiteness::PositiveSemidefinite;
    }
    const Rational d = A.at(pivot, pivot);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == pivot || A.at(i, pivot) == 0) continue;
      const Rational f = A.at(i, pivot) / d;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j] || j == pivot) continue;
        A.at(i, j) -= f * A.at(pivot, j);
      }
    }
    done[pivot] = true;
    ++eliminated;
  }
}

}  // namespace tia
