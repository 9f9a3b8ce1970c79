#include "fanostab/algebra/matrix.hpp"

namespace fanostab {

template <class K>
Matrix<K> Matrix<K>::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = K(1);
  return m;
}

template <class K>
Matrix<K> Matrix<K>::from_rows(const std::vector<std::vector<K>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class K>
Matrix<K> Matrix<K>::from_columns(const std::vector<std::vector<K>>& cols) {
  return from_rows(cols).transpose();
}

template <class K>
std::vector<K> Matrix<K>::column(int j) const {
  std::vector<K> v;
  for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

template <class K>
std::vector<K> Matrix<K>::row(int i) const {
  std::vector<K> v;
  for (int j = 0; j < cols_; ++j) v.push_back((*this)(i, j));
  return v;
}

template <class K>
Matrix<K> Matrix<K>::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class K>
Matrix<K> Matrix<K>::mul(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const K& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

template <class K>
std::vector<K> Matrix<K>::apply(const std::vector<K>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  std::vector<K> r(rows_, K(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

template <class K>
std::vector<int> Matrix<K>::eliminate(Matrix* aug) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (!(*this)(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      if (aug)
        for (int j = 0; j < aug->cols_; ++j) std::swap((*aug)(p, j), (*aug)(r, j));
    }
    const K inv = K(1) / (*this)(r, c);
    for (int j = 0; j < cols_; ++j) (*this)(r, j) *= inv;
    if (aug)
      for (int j = 0; j < aug->cols_; ++j) (*aug)(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || (*this)(i, c).is_zero()) continue;
      const K f = (*this)(i, c);
      for (int j = 0; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      if (aug)
        for (int j = 0; j < aug->cols_; ++j) (*aug)(i, j) -= f * (*aug)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
int Matrix<K>::rank() const {
  Matrix m = *this;
  return static_cast<int>(m.eliminate(nullptr).size());
}

template <class K>
K Matrix<K>::det() const {
  if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  Matrix m = *this;
  K d(1);
  for (int c = 0; c < cols_; ++c) {
    int p = -1;
    for (int i = c; i < rows_; ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return K(0);
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    const K inv = K(1) / m(c, c);
    for (int i = c + 1; i < rows_; ++i) {
      if (m(i, c).is_zero()) continue;
      const K f = m(i, c) * inv;
      for (int j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

template <class K>
Matrix<K> Matrix<K>::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  Matrix m = *this, inv = identity(rows_);
  if (static_cast<int>(m.eliminate(&inv).size()) != rows_)
    throw Error(ErrorCode::DegenerateInput, "matrix is singular");
  return inv;
}

template <class K>
std::vector<std::vector<K>> Matrix<K>::nullspace() const {
  Matrix m = *this;
  const auto pivots = m.eliminate(nullptr);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(cols_, K(0));
    v[f] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
std::optional<std::vector<K>> Matrix<K>::solve(const std::vector<K>& b) const {
  Matrix m = *this, rhs(rows_, 1);
  for (int i = 0; i < rows_; ++i) rhs(i, 0) = b.at(i);
  const auto pivots = m.eliminate(&rhs);
  for (int i = static_cast<int>(pivots.size()); i < rows_; ++i)
    if (!rhs(i, 0).is_zero()) return std::nullopt;
  std::vector<K> x(cols_, K(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs(static_cast<int>(r), 0);
  return x;
}

template <class K>
MPoly<K> apply_frame(const MPoly<K>& p, const Matrix<K>& frame, const VarList& target) {
  const VarList vars = target ? target : p.vars_ptr();
  if (frame.rows() != p.nvars()) throw Error(ErrorCode::DimensionMismatch, "frame size differs from variable count");
  std::vector<MPoly<K>> images;
  for (int i = 0; i < frame.rows(); ++i) {
    MPoly<K> img(vars);
    for (int j = 0; j < frame.cols(); ++j)
      if (!frame(i, j).is_zero()) img += MPoly<K>::variable(vars, j) * frame(i, j);
    images.push_back(img);
  }
  return p.substitute(images);
}

template <class K>
Matrix<K> gram_matrix(const MPoly<K>& q) {
  const int n = q.nvars();
  Matrix<K> a(n, n);
  for (const auto& [e, c] : q.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx.size() != 2) throw Error(ErrorCode::WrongDegree, "not a quadratic form: " + q.str());
    if (idx[0] == idx[1]) {
      a(idx[0], idx[0]) += c;
    } else {
      const K half = c / K(2);
      a(idx[0], idx[1]) += half;
      a(idx[1], idx[0]) += half;
    }
  }
  return a;
}

QMatrix to_quad(const RMatrix& m) {
  return m.map<QuadNum>([](const Rat& x) { return QuadNum(x); });
}

template class Matrix<Rat>;
template class Matrix<QuadNum>;
template MPoly<Rat> apply_frame(const MPoly<Rat>&, const Matrix<Rat>&, const VarList&);
template MPoly<QuadNum> apply_frame(const MPoly<QuadNum>&, const Matrix<QuadNum>&, const VarList&);
template Matrix<Rat> gram_matrix(const MPoly<Rat>&);
template Matrix<QuadNum> gram_matrix(const MPoly<QuadNum>&);

}  // namespace fanostab
