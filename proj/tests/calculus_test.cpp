#include <doctest.h>

#include <random>

#include "qsw/calculus.hpp"
#include "support.hpp"

using namespace qsw;
using qsw::test::pres;

namespace {

// Random product of coordinates and differentials, homogeneous of the given parity.
Element random_form(const Calculus& c, std::mt19937& rng, int parity) {
  return test::random_homogeneous(*c.forms, rng, parity, 3);
}

}  // namespace

TEST_CASE("d obeys the graded Leibniz rule and squares to zero") {
  std::mt19937 rng(31);
  for (const char* forms : {"gamma-plus", "gamma-minus"}) {
    CAPTURE(forms);
    auto c = make_calculus(pres("spq12"), pres(forms));
    const auto& f = *c.forms;
    for (int k = 0; k < 12; ++k) {
      int pa = k % 2;
      Element a = random_form(c, rng, pa), b = random_form(c, rng, (k / 2) % 2);
      Element lhs = apply_d(c, f.multiply(a, b));
      Element rhs = f.multiply(apply_d(c, a), b) + f.multiply(a, apply_d(c, b)) * Scalar(pa ? -1 : 1);
      CHECK(f.normal_form(lhs - rhs).is_zero());
      CHECK(apply_d(c, apply_d(c, a)).is_zero());
    }
  }
}

TEST_CASE("d of coordinates by hand") {
  auto c = make_calculus(pres("spq12"), pres("gamma-plus"));
  const auto& f = *c.forms;
  // d(x xi) = d(x) xi + x d(xi), x even
  CHECK(apply_d(c, f.parse("x*xi")) == f.parse("d(x)*xi + x*d(xi)"));
  // d(xi^2) = 0 since xi^2 = 0
  CHECK(apply_d(c, f.parse("xi^2")).is_zero());
  CHECK(apply_d(c, f.parse("1")).is_zero());
}

TEST_CASE("consistency of both calculi") {
  for (const char* forms : {"gamma-plus", "gamma-minus"}) {
    auto c = make_calculus(pres("spq12"), pres(forms));
    for (const auto& chk : verify_calculus_consistency(c, 3)) {
      CAPTURE(chk.label);
      CHECK(chk.ok());
    }
  }
}

TEST_CASE("derivatives at q = 1 on x^2 + 2 xi eta") {
  // classical left derivatives: d_x = 2x, d_xi = 2 eta, d_eta = -2 xi
  auto c = make_calculus(pres("spq12"), pres("gamma-plus"));
  const auto& b = *c.base;
  Element r = b.parse("x^2 + 2*xi*eta");
  auto at1 = [](const Element& e) { return e.map_coefficients([](const Scalar& a) { return limit_s_to_1(a); }); };
  CHECK(at1(derivative_by_forms(c, "x", r)) == at1(b.parse("2*x")));
  CHECK(at1(derivative_by_forms(c, "xi", r)) == at1(b.parse("2*eta")));
  CHECK(at1(derivative_by_forms(c, "eta", r)) == at1(b.parse("-2*xi")));
}

TEST_CASE("gamma-minus construction is an involution") {
  auto gp = pres("gamma-plus");
  auto back = build_gamma_minus(*build_gamma_minus(*gp), "gamma-plus");
  CHECK(presentation_to_text(*back) == presentation_to_text(*gp));
}
