#include <doctest.h>

#include <random>

#include "qsw/linalg.hpp"
#include "qsw/rmatrix.hpp"
#include "support.hpp"

using namespace qsw;

namespace {

MatrixRF random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  MatrixRF m(r, c);
  std::uniform_int_distribution<int> zero(0, 2);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (zero(rng)) m(i, j) = test::small_scalar(rng);
  return m;
}

}  // namespace

TEST_CASE("kernel, rank and inverse") {
  std::mt19937 rng(37);
  for (int k = 0; k < 10; ++k) {
    MatrixRF a = random_matrix(rng, 4, 6);
    MatrixRF ker = kernel(a);
    CHECK(ker.cols() + rank(a) == 6);
    if (ker.cols()) CHECK((a * ker).is_zero());
    Rref r = rref(a);
    CHECK(rref(r.reduced).reduced == r.reduced);
    MatrixRF sq = random_matrix(rng, 3, 3) + MatrixRF::identity(3).scaled(Scalar::h());
    CHECK(sq * inverse(sq) == MatrixRF::identity(3));
  }
  CHECK_THROWS_AS(inverse(MatrixRF{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST_CASE("column spans") {
  MatrixRF a{{1, 0}, {0, 1}, {1, 1}};
  MatrixRF b{{1, 1}, {1, -1}, {2, 0}};
  CHECK(same_column_span(a, b));
  CHECK_FALSE(same_column_span(a, MatrixRF{{1}, {0}, {0}}));
}

TEST_CASE("B from the calculus") {
  auto B = build_B(*test::pres("gamma-plus"));
  REQUIRE(B.rows() == 9);
  Scalar q = Scalar::q();
  MatrixRF I = MatrixRF::identity(9);
  MatrixRF cubic = (B + I) * (B - I.scaled(q * q)) * (B - I.scaled(q * q * q));
  CHECK(cubic.is_zero());
  for (const auto& e : compare_B_entries(B)) {
    CAPTURE(e.label);
    CHECK(e.match());
  }
  // listed entry by hand: the coefficient of d(eta) eta in eta d(eta), times -1
  CHECK(B(pair_index(2, 2), pair_index(2, 2)) != Scalar(0));
}

TEST_CASE("spectral projectors") {
  auto B = build_B(*test::pres("gamma-plus"));
  auto P = spectral_projectors(B);
  MatrixRF I = MatrixRF::identity(9);
  CHECK(P.minus + P.plus + P.zero == I);
  CHECK(P.minus * P.minus == P.minus);
  CHECK(P.plus * P.plus == P.plus);
  CHECK(P.zero * P.zero == P.zero);
  CHECK((P.minus * P.plus).is_zero());
  CHECK((P.plus * P.zero).is_zero());
  CHECK((P.zero * P.minus).is_zero());
  CHECK((B * P.minus + P.minus).is_zero());
  CHECK(rank(P.minus) + rank(P.plus) + rank(P.zero) == 9);
}
