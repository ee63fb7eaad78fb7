#include "periods/rational_matrix.hpp"

namespace periods {

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul: inner dims disagree");
  RationalMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) == 0) continue;
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  return c;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant: matrix not square");
  const int n = m.rows();
  RationalMatrix a = m;
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a.at(r, col) == 0) continue;
      Rational f = a.at(r, col) / a.at(col, col);
      for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
    }
  }
  return det;
}

Rational corner_minor(const RationalMatrix& x, int size, CornerSide side) {
  if (size < 0 || size > x.rows() || size > x.cols())
    throw DimensionError("corner_minor: size exceeds matrix dims");
  if (size == 0) return Rational(1);
  RationalMatrix sub(size, size);
  const int col0 = side == CornerSide::Left ? 0 : x.cols() - size;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) sub.at(i, j) = x.at(i, col0 + j);
  return determinant(sub);
}

RationalMatrix random_matrix(Rng& rng, int rows, int cols, int bound) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.uniform_int(-bound, bound);
  return m;
}

namespace {
constexpr int kInvertibleRetryCap = 1000;
}

RationalMatrix random_invertible(Rng& rng, int n, int bound) {
  for (int tries = 0; tries < kInvertibleRetryCap; ++tries) {
    RationalMatrix m = random_matrix(rng, n, n, bound);
    if (determinant(m) != 0) return m;
  }
  throw RetryExhaustedError("random_invertible: retry cap exhausted");
}

RationalMatrix random_block_lower(Rng& rng, const std::vector<int>& partition, int bound) {
  int d = 0;
  for (int s : partition) d += s;
  RationalMatrix m(d, d);
  int off = 0;
  for (int s : partition) {
    RationalMatrix blk = random_invertible(rng, s, bound);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) m.at(off + i, off + j) = blk.at(i, j);
    for (int i = off; i < off + s; ++i)
      for (int j = 0; j < off; ++j) m.at(i, j) = rng.uniform_int(-bound, bound);
    off += s;
  }
  return m;
}

RationalMatrix random_block_diagonal(Rng& rng, const std::vector<int>& sizes, int bound) {
  int d = 0;
  for (int s : sizes) d += s;
  if (d <= 0) throw DimensionError("random_block_diagonal: empty");
  RationalMatrix m(d, d);
  int off = 0;
  for (int s : sizes) {
    if (s == 0) continue;
    RationalMatrix blk = random_invertible(rng, s, bound);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) m.at(off + i, off + j) = blk.at(i, j);
    off += s;
  }
  return m;
}

Rational block_determinant(const RationalMatrix& m, int offset, int size) {
  if (size == 0) return Rational(1);
  RationalMatrix sub(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) sub.at(i, j) = m.at(offset + i, offset + j);
  return determinant(sub);
}

}  // namespace periods
