#include "qsw/rmatrix.hpp"

#include <stdexcept>

namespace qsw {

MatrixRF build_B(const Presentation& calculus, SignSource sign) {
  if (calculus.size() < 6) throw std::invalid_argument("calculus presentation needs differentials and coordinates");
  MatrixRF B(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Element nf = calculus.normal_form(Element::word(Word{char(3 + i), char(j)}));
      auto par = [&](int g) { return calculus.generators()[std::size_t(g)].parity; };
      int p = sign == SignSource::differential ? par(j) : par(3 + i);
      for (const auto& [w, c] : nf.terms()) {
        if (w.size() != 2 || w[0] > 2 || w[1] < 3)
          throw std::runtime_error("X dX does not reduce to a combination of dX X words");
        B(pair_index(i, j), pair_index(w[0], w[1] - 3)) = p ? -c : c;
      }
    }
  return B;
}

std::string ListedEntry::label() const {
  return "B^" + std::to_string(k) + std::to_string(l) + "_" + std::to_string(i) + std::to_string(j);
}

std::vector<ListedEntry> listed_B_entries() {
  const Scalar q = Scalar::q(), s = Scalar::s(), one(1);
  return {{1, 1, 1, 1, -one},
          {3, 3, 3, 3, -one},
          {1, 2, 2, 1, q},
          {2, 1, 1, 2, q},
          {2, 2, 2, 2, q},
          {2, 3, 3, 2, q},
          {3, 2, 2, 3, q},
          {1, 3, 3, 1, -q * q},
          {3, 1, 1, 3, -q * q},
          {2, 1, 2, 1, q * q - one},
          {3, 2, 3, 2, q * q - one},
          {2, 2, 3, 1, s * (q * q - one)},
          {3, 1, 2, 2, -s * (q * q - one)},
          {3, 1, 3, 1, (one + q) * (q * q - one)}};
}

std::vector<EntryComparison> compare_B_entries(const MatrixRF& B) {
  std::vector<EntryComparison> out;
  std::vector<bool> listed(81, false);
  for (const auto& e : listed_B_entries()) {
    std::size_t r = pair_index(e.k - 1, e.l - 1), c = pair_index(e.i - 1, e.j - 1);
    listed[r * 9 + c] = true;
    out.push_back({e.label(), e.value, B(r, c)});
  }
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t c = 0; c < 9; ++c)
      if (!listed[r * 9 + c] && !B(r, c).is_zero()) {
        ListedEntry e{int(r / 3) + 1, int(r % 3) + 1, int(c / 3) + 1, int(c % 3) + 1, Scalar()};
        out.push_back({e.label(), Scalar(), B(r, c)});
      }
  return out;
}

MatrixRF matrix_polynomial(const MatrixRF& B, const std::vector<Scalar>& coeffs) {
  MatrixRF acc(B.rows(), B.cols()), power = MatrixRF::identity(B.rows());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) power = power * B;
    if (!coeffs[k].is_zero()) acc += power.scaled(coeffs[k]);
  }
  return acc;
}

Projectors printed_projectors(const MatrixRF& B) {
  const Scalar q = Scalar::q(), one(1);
  const Scalar q2 = q * q, q3 = q2 * q, q5 = q3 * q2;
  auto proj = [&](std::vector<Scalar> c, const Scalar& den) { return matrix_polynomial(B, c).scaled(den.inverse()); };
  return {proj({q5, -(q2 + q3), one}, (q2 + one) * (q3 + one)),
          proj({q3, q3 - q, one}, q2 * (q - one) * (q2 + one)),
          proj({-q2, one - q2, one}, q2 * (q - one) * (q3 + one))};
}

Projectors spectral_projectors(const MatrixRF& B) {
  const Scalar q = Scalar::q(), one(1);
  const Scalar ev[3] = {-one, q * q, q * q * q};
  MatrixRF out[3];
  for (int k = 0; k < 3; ++k) {
    const Scalar& a = ev[(k + 1) % 3];
    const Scalar& b = ev[(k + 2) % 3];
    Scalar den = (ev[k] - a) * (ev[k] - b);
    out[k] = matrix_polynomial(B, {a * b, -(a + b), one}).scaled(den.inverse());
  }
  return {out[0], out[1], out[2]};
}

MatrixRF quadratic_relation_rows(const std::vector<Element>& relations, const std::vector<int>& order) {
  MatrixRF m(relations.size(), 9);
  for (std::size_t r = 0; r < relations.size(); ++r)
    for (const auto& [w, c] : relations[r].terms()) {
      if (w.size() != 2) continue;
      int i = -1, j = -1;
      for (int k = 0; k < 3; ++k) {
        if (order[std::size_t(k)] == w[0]) i = k;
        if (order[std::size_t(k)] == w[1]) j = k;
      }
      if (i < 0 || j < 0) throw std::invalid_argument("relation word outside the three generators");
      m(r, pair_index(i, j)) = c;
    }
  return m;
}

MatrixRF row_signs(const MatrixRF& m, bool odd_outer) {
  MatrixRF out = m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool odd = (r / 3 != 1) == odd_outer;
    if (odd)
      for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = -out(r, c);
  }
  return out;
}

bool same_row_span(const MatrixRF& a, const MatrixRF& b) { return same_column_span(a.transpose(), b.transpose()); }

}  // namespace qsw
