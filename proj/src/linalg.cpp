#include "qsw/linalg.hpp"

namespace qsw {

MatrixRF::MatrixRF(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& v : r) data_.push_back(v);
  }
}

MatrixRF MatrixRF::identity(std::size_t n) {
  MatrixRF m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
  return m;
}

bool MatrixRF::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

MatrixRF MatrixRF::transpose() const {
  MatrixRF t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatrixRF MatrixRF::scaled(const Scalar& c) const {
  MatrixRF m = *this;
  for (auto& v : m.data_) v *= c;
  return m;
}

MatrixRF MatrixRF::map(const std::function<Scalar(const Scalar&)>& f) const {
  MatrixRF m = *this;
  for (auto& v : m.data_) v = f(v);
  return m;
}

MatrixRF& MatrixRF::operator+=(const MatrixRF& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

MatrixRF& MatrixRF::operator-=(const MatrixRF& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

MatrixRF operator*(const MatrixRF& a, const MatrixRF& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  MatrixRF m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
    }
  return m;
}

std::string MatrixRF::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += " | ";
      out += (*this)(r, c).to_string();
    }
    out += "\n";
  }
  return out;
}

MatrixRF kron(const MatrixRF& a, const MatrixRF& b) {
  MatrixRF m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

Rref rref(const MatrixRF& m) {
  Rref out{m, {}};
  MatrixRF& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    Scalar inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c)
      if (!a(row, c).is_zero()) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const MatrixRF& m) { return rref(m).pivot_columns.size(); }

MatrixRF kernel(const MatrixRF& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  MatrixRF k(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = Scalar(1);
    for (std::size_t p = 0; p < r.pivot_columns.size(); ++p) k(r.pivot_columns[p], f) = -r.reduced(p, free_cols[f]);
  }
  return k;
}

MatrixRF inverse(const MatrixRF& m) {
  if (m.rows() != m.cols()) throw SingularMatrix("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  MatrixRF aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  Rref red = rref(aug);
  if (red.pivot_columns.size() < n || red.pivot_columns[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  MatrixRF inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

MatrixRF column_space(const MatrixRF& m) {
  Rref r = rref(m.transpose());
  MatrixRF basis(m.rows(), r.pivot_columns.size());
  for (std::size_t k = 0; k < r.pivot_columns.size(); ++k)
    for (std::size_t row = 0; row < m.rows(); ++row) basis(row, k) = r.reduced(k, row);
  return basis;
}

bool same_column_span(const MatrixRF& a, const MatrixRF& b) { return column_space(a) == column_space(b); }

void axpy(SparseEchelon::Row& y, const Scalar& a, const SparseEchelon::Row& x) {
  for (const auto& [col, v] : x) {
    auto it = y.find(col);
    if (it == y.end()) {
      y.emplace(col, a * v);
    } else {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

void SparseEchelon::reduce(Row& row) const {
  while (!row.empty()) {
    auto lead = row.begin();
    auto piv = pivots_.find(lead->first);
    if (piv == pivots_.end()) return;
    Scalar f = -lead->second;
    axpy(row, f, piv->second);
  }
}

bool SparseEchelon::insert(Row row) {
  for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
  reduce(row);
  if (row.empty()) return false;
  Scalar inv = row.begin()->second.inverse();
  for (auto& [col, v] : row) v *= inv;
  pivots_.emplace(row.begin()->first, std::move(row));
  return true;
}

bool SparseEchelon::contains(Row row) const {
  for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
  reduce(row);
  return row.empty();
}

}  // namespace qsw
