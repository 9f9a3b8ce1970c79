#pragma once

#include <optional>
#include <vector>

#include "fanostab/algebra/mpoly.hpp"

namespace fanostab {

/// Dense row-major matrix over a field, exact Gaussian elimination.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, K(0)) {}
  static Matrix identity(int n);
  /// Rows given as nested lists; all rows must have the same length.
  static Matrix from_rows(const std::vector<std::vector<K>>& rows);
  /// Matrix whose j-th column is cols[j].
  static Matrix from_columns(const std::vector<std::vector<K>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::vector<K> column(int j) const;
  std::vector<K> row(int i) const;

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& x, const Matrix& y) { return x.mul(y); }
  std::vector<K> apply(const std::vector<K>& v) const;
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  int rank() const;
  K det() const;
  /// Throws DegenerateInput for singular matrices.
  Matrix inverse() const;
  /// Basis of {v : M v = 0}.
  std::vector<std::vector<K>> nullspace() const;
  /// Some solution of M x = b, if consistent.
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const;

  template <class K2, class F>
  Matrix<K2> map(F&& f) const {
    Matrix<K2> r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

 private:
  Matrix mul(const Matrix& o) const;
  // Row echelon form in place; returns pivot columns.
  std::vector<int> eliminate(Matrix* aug) ;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<K> a_;
};

using RMatrix = Matrix<Rat>;
using QMatrix = Matrix<QuadNum>;

/// Coordinate change p(x) -> p(F y): variable x_i becomes sum_j F(i,j) y_j.
/// The result lives in `target` (defaults to p's own ring).
template <class K>
MPoly<K> apply_frame(const MPoly<K>& p, const Matrix<K>& frame, const VarList& target = nullptr);

/// Symmetric Gram matrix A of a quadratic form, q(x) = x^T A x.
template <class K>
Matrix<K> gram_matrix(const MPoly<K>& q);

QMatrix to_quad(const RMatrix& m);

extern template class Matrix<Rat>;
extern template class Matrix<QuadNum>;

}  // namespace fanostab
