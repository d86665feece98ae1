#include <doctest.h>

#include "qsw/catalog.hpp"
#include "qsw/contraction.hpp"
#include "support.hpp"

using namespace qsw;
using qsw::test::pres;

TEST_CASE("the change of basis is singular at q = 1 but the metric has a limit") {
  MatrixRF g = contraction_g();
  CHECK_THROWS_AS(limit_s_to_1(g(0, 2)), PoleError);
  MatrixRF Ch = contract_matrix(C_q(), MatrixContraction::congruence);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) CHECK_FALSE(Ch(r, c).has_s());
}

TEST_CASE("supertranspose twice is the parity operator on odd-even blocks") {
  MatrixRF a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  MatrixRF t4 = supertranspose(supertranspose(supertranspose(supertranspose(a))));
  CHECK(t4 == a);
  // (A^st)_ij = (-1)^{(p_i + p_j) p_j} A_ji, parities 1 0 1
  MatrixRF st = supertranspose(a);
  CHECK(st(0, 1) == Scalar(4));
  CHECK(st(1, 0) == Scalar(-2));
  CHECK(st(0, 2) == Scalar(7));
}

TEST_CASE("contracted superspace matches the h superspace") {
  auto p = pres("spq12");
  auto cm = registered_contraction(*p);
  REQUIRE(cm);
  auto h = contract_presentation(*p, *cm);
  CHECK(presentation_to_text(*h) == presentation_to_text(*pres("sph12")));
  for (const auto& c : contraction_commutes_with_reduction(*p, *cm, *h)) {
    CAPTURE(c.label);
    CHECK(c.ok());
  }
  // xi^2 = h(x^2 + 2 xi eta) written out
  CHECK(h->parse("xi^2") == h->parse("h*x^2 + 2*h*xi*eta"));
}

TEST_CASE("limit span keeps dimension") {
  auto p = pres("spq12");
  Scalar k = kappa();
  // two elements whose leading parts coincide at s = 1
  Element a = p->gen("x") + p->gen("xi") * (Scalar::s() - Scalar(1));
  Element b = p->gen("x");
  auto lim = limit_span({a, b});
  CHECK(lim.size() == 2);
  CHECK_FALSE(k.is_polynomial());
}
