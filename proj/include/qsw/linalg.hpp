#pragma once

// Exact linear algebra over Scalar: dense matrices and an incremental sparse
// echelon form for large, very sparse row sets.

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsw/scalar.hpp"

namespace qsw {

class SingularMatrix : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MatrixRF {
public:
  MatrixRF() = default;
  MatrixRF(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  MatrixRF(std::initializer_list<std::initializer_list<Scalar>> rows);
  static MatrixRF identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  MatrixRF transpose() const;
  MatrixRF scaled(const Scalar& c) const;
  MatrixRF map(const std::function<Scalar(const Scalar&)>& f) const;

  MatrixRF& operator+=(const MatrixRF& o);
  MatrixRF& operator-=(const MatrixRF& o);
  friend MatrixRF operator+(MatrixRF a, const MatrixRF& b) { return a += b; }
  friend MatrixRF operator-(MatrixRF a, const MatrixRF& b) { return a -= b; }
  friend MatrixRF operator*(const MatrixRF& a, const MatrixRF& b);
  friend bool operator==(const MatrixRF& a, const MatrixRF& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// One line per row, entries separated by " | ".
  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product.
MatrixRF kron(const MatrixRF& a, const MatrixRF& b);

struct Rref {
  MatrixRF reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination; pivot is the first nonzero entry of each column
/// scanning rows top to bottom.
Rref rref(const MatrixRF& m);
std::size_t rank(const MatrixRF& m);
/// Basis of the right kernel, one vector per column.
MatrixRF kernel(const MatrixRF& m);
MatrixRF inverse(const MatrixRF& m);
/// Column-space basis in reduced form (columns of the result).
MatrixRF column_space(const MatrixRF& m);
bool same_column_span(const MatrixRF& a, const MatrixRF& b);

/// Rows are maps column -> value; smaller column index leads.
class SparseEchelon {
public:
  using Row = std::map<std::size_t, Scalar>;

  /// Returns true when the row was independent of the rows already held.
  bool insert(Row row);
  bool contains(Row row) const;
  std::size_t rank() const { return pivots_.size(); }

private:
  void reduce(Row& row) const;
  std::map<std::size_t, Row> pivots_;
};

void axpy(SparseEchelon::Row& y, const Scalar& a, const SparseEchelon::Row& x);

}  // namespace qsw
