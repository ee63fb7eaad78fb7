#ifndef PERIODS_RATIONAL_MATRIX_HPP
#define PERIODS_RATIONAL_MATRIX_HPP

#include <vector>

#include "periods/rational.hpp"
#include "periods/rng.hpp"

namespace periods {

// Dense matrix of exact rationals, row-major, 0-indexed.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw DimensionError("matrix dims must be positive");
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);

// Exact determinant by fraction-free-enough Gaussian elimination over Q.
Rational determinant(const RationalMatrix& m);

enum class CornerSide { Left, Right };

// Determinant of rows 0..size-1 and the first (Left) or last (Right) `size`
// columns. The empty 0x0 determinant is 1.
Rational corner_minor(const RationalMatrix& x, int size, CornerSide side);

// Sampling helpers. Entries are uniform integers in [-bound, bound];
// invertibility is enforced by resampling the whole matrix.
RationalMatrix random_matrix(Rng& rng, int rows, int cols, int bound);
RationalMatrix random_invertible(Rng& rng, int n, int bound);

// Block lower triangular for the given partition of d, with invertible
// diagonal blocks; entries above the block diagonal are zero.
RationalMatrix random_block_lower(Rng& rng, const std::vector<int>& partition, int bound);

// Block diagonal diag(g_1, ..., g_r) with invertible blocks of the given sizes.
RationalMatrix random_block_diagonal(Rng& rng, const std::vector<int>& sizes, int bound);

// Determinant of the square diagonal block starting at `offset` of size `size`.
Rational block_determinant(const RationalMatrix& m, int offset, int size);

}  // namespace periods

#endif
