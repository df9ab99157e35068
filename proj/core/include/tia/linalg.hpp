#pragma once

// Exact dense linear algebra over the rationals: reduced row echelon form,
// linear solves, and definiteness classification of symmetric matrices via
// LDL^T with symmetric diagonal pivoting.  Sizes here are a few hundred at
// most, so simplicity wins over sparsity.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tia/rational.hpp"

namespace tia {

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Mat transposed() const;
  bool is_symmetric() const;

  friend Mat operator*(const Mat& x, const Mat& y);
  friend Mat operator+(const Mat& x, const Mat& y);
  friend Mat operator-(const Mat& x, const Mat& y);
  bool operator==(const Mat&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// In-place reduced row echelon form; returns the pivot column indices.
std::vector<std::size_t> rref_in_place(Mat& A);

std::size_t rank(Mat A);

// Exact solution X of A X = B for square nonsingular A; throws on singular.
Mat solve(const Mat& A, const Mat& B);

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

// Classify a symmetric matrix ("Indefinite" means "not positive
// semidefinite").  Throws if the input is not symmetric.
Definiteness classify_definiteness(Mat A);

}  // namespace tia
