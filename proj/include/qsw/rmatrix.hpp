#pragma once

// The 9x9 matrix B-hat read off the coordinate/differential relations, its
// spectral projectors and the relation spaces they cut out.

#include <string>
#include <vector>

#include "qsw/algebra.hpp"
#include "qsw/linalg.hpp"

namespace qsw {

/// Flat index of the pair (i, j), coordinates ordered xi, x, eta.
inline std::size_t pair_index(int i, int j) { return std::size_t(3 * i + j); }

enum class SignSource { coordinate, differential };

/// Row (i,j), column (k,l) holds the coefficient of dX_k X_l in X_i dX_j,
/// times (-1)^{p(X_i)} (coordinate) or (-1)^{p(dX_j)} (differential).
/// The entry at row (i,j), column (k,l) is B^{ij}_{kl}. The calculus presentation lists the
/// three differentials first, then the three coordinates.
MatrixRF build_B(const Presentation& calculus, SignSource sign = SignSource::coordinate);

/// Nonzero entry B^{kl}_{ij} as printed, i.e. row (k,l), column (i,j).
struct ListedEntry {
  int k, l, i, j;
  Scalar value;
  std::string label() const;
};
std::vector<ListedEntry> listed_B_entries();

struct EntryComparison {
  std::string label;
  Scalar expected;
  Scalar actual;
  bool match() const { return expected == actual; }
};
/// Compares every listed position; unlisted nonzero entries come back with
/// expected value 0.
std::vector<EntryComparison> compare_B_entries(const MatrixRF& B);

/// c_0 I + c_1 B + c_2 B^2 + ...
MatrixRF matrix_polynomial(const MatrixRF& B, const std::vector<Scalar>& coeffs);

struct Projectors {
  MatrixRF minus, plus, zero;
};
/// The three displayed quadratic formulas.
Projectors printed_projectors(const MatrixRF& B);
/// Lagrange interpolation on the eigenvalues -1, q^2, q^3.
Projectors spectral_projectors(const MatrixRF& B);

/// Coefficient vectors of quadratic relations in the 9 pair words, one row each.
/// `order` lists the generator index of xi, x, eta (or their differentials).
MatrixRF quadratic_relation_rows(const std::vector<Element>& relations, const std::vector<int>& order);

/// The matrix with row (i,j) scaled by (-1)^{p_i} where p = (1, 0, 1) or
/// its complement.
MatrixRF row_signs(const MatrixRF& m, bool odd_outer);

bool same_row_span(const MatrixRF& a, const MatrixRF& b);

}  // namespace qsw
