#include <doctest.h>

#include <random>

#include "qsw/algebra.hpp"
#include "support.hpp"

using namespace qsw;
using qsw::test::pres;

TEST_CASE("normal form is idempotent and linear") {
  std::mt19937 rng(7);
  for (const char* name : {"spq12", "weyl-q-derived", "gamma-plus", "lambda-q"}) {
    auto p = pres(name);
    for (int k = 0; k < 20; ++k) {
      Element a = test::random_element(*p, rng), b = test::random_element(*p, rng);
      Scalar c = test::small_scalar(rng);
      Element na = p->normal_form(a);
      CHECK(p->normal_form(na) == na);
      for (const auto& [w, _] : na.terms()) CHECK(p->is_normal(w));
      CHECK(p->normal_form(a + b * c) == na + p->normal_form(b) * c);
    }
  }
}

TEST_CASE("reduced product is associative") {
  std::mt19937 rng(11);
  for (const char* name : {"spq12", "weyl-q-derived", "gamma-minus", "sph12"}) {
    auto p = pres(name);
    for (int k = 0; k < 15; ++k) {
      Element a = test::random_element(*p, rng, 2), b = test::random_element(*p, rng, 2),
              c = test::random_element(*p, rng, 2);
      CHECK(p->multiply(p->multiply(a, b), c) == p->multiply(a, p->multiply(b, c)));
    }
  }
}

TEST_CASE("relations are homogeneous in parity") {
  for (const auto& [name, p] : test::catalog().presentations()) {
    CAPTURE(name);
    for (const auto& r : p->relations()) CHECK(p->parity(r) >= 0);
  }
}

TEST_CASE("superspace relations by hand") {
  auto p = pres("spq12");
  Scalar s = Scalar::s(), q = Scalar::q();
  // eta xi = -q^2 xi eta + s(1 - q) x^2, x xi = q xi x, eta x = q x eta
  CHECK(p->parse("eta*xi") == p->parse("-q^2*xi*eta") + p->parse("x^2") * (s * (Scalar(1) - q)));
  CHECK(p->parse("x*xi") == p->parse("xi*x") * q);
  CHECK(p->parse("eta*x") == p->parse("x*eta") * q);
  CHECK(p->parse("xi^2").is_zero());
  CHECK(p->parse("eta^2").is_zero());
  // xi (eta xi) eta with only the x^2 term surviving
  CHECK(p->parse("xi*eta*xi*eta") == p->parse("xi*x^2*eta") * (s * (Scalar(1) - q)));
}

TEST_CASE("PBW count agrees with the relation-only oracle") {
  for (const char* name : {"spq12", "sph12", "lambda-q", "lambda-h", "gamma-plus", "weyl-q-derived"}) {
    auto p = pres(name);
    std::size_t top = p->size() <= 3 ? 5 : 3;
    auto dims = hilbert_dims_oracle(*p, top);
    for (std::size_t d = 0; d <= top; ++d) CHECK(enumerate_pbw(*p, d).size() == dims[d]);
    CHECK(check_overlaps(*p).empty());
  }
}

TEST_CASE("PBW words of the superspace by counting") {
  // x^a xi^b eta^c with b, c in {0, 1}: one word per (b, c) once a >= 0 fits
  auto p = pres("spq12");
  for (std::size_t d = 2; d <= 6; ++d) CHECK(enumerate_pbw(*p, d).size() == 4);
  CHECK(enumerate_pbw(*p, 1).size() == 3);
}

TEST_CASE("overlap checker reports a broken presentation") {
  auto p = pres("spq12");
  auto free = [&](const std::string& text) {
    return free_eval(parse_expr(text), [&](const Symbol& sym) { return p->gen(sym.text()); });
  };
  std::vector<Element> good, broken;
  for (const char* r : {"xi^2", "eta^2", "eta*x - q*x*eta", "eta*xi + q^2*xi*eta - s*(1 - q)*x^2"}) {
    good.push_back(free(r));
    broken.push_back(free(r));
  }
  good.push_back(free("x*xi - q*xi*x"));
  broken.push_back(free("x*xi - q^2*xi*x"));
  Presentation ok("ok", p->generators(), good), bad("bad", p->generators(), broken);
  CHECK(check_overlaps(ok).empty());
  CHECK_FALSE(check_overlaps(bad).empty());
  CHECK(hilbert_dim_oracle(bad, 3) < enumerate_pbw(bad, 3).size());
  CHECK(hilbert_dim_oracle(ok, 3) == enumerate_pbw(ok, 3).size());
}

TEST_CASE("super commutator is graded antisymmetric") {
  std::mt19937 rng(3);
  auto p = pres("weyl-q-derived");
  for (int k = 0; k < 10; ++k) {
    int pa = k % 2, pb = (k / 2) % 2;
    Element a = test::random_homogeneous(*p, rng, pa), b = test::random_homogeneous(*p, rng, pb);
    Scalar sign = (pa && pb) ? Scalar(-1) : Scalar(1);
    CHECK(p->normal_form(super_commutator(a, b, *p) + super_commutator(b, a, *p) * sign).is_zero());
  }
}

TEST_CASE("matrix evaluation is the product of the images") {
  auto p = pres("spq12");
  std::mt19937 rng(5);
  std::vector<MatrixRF> img;
  for (int g = 0; g < 3; ++g) {
    MatrixRF m(2, 2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) m(r, c) = test::small_scalar(rng);
    img.push_back(m);
  }
  Word w{2, 0, 1, 1};
  MatrixRF expect = img[2] * img[0] * img[1] * img[1];
  CHECK(evaluate_in_matrices(Element::word(w, Scalar(3)), img) == expect.scaled(Scalar(3)));
  CHECK(evaluate_in_matrices(Element(Scalar(2)), img) == MatrixRF::identity(2).scaled(Scalar(2)));
}

TEST_CASE("element span membership") {
  auto p = pres("spq12");
  ElementSpan span;
  CHECK(span.insert(p->gen("x")));
  CHECK(span.insert(p->gen("xi") * Scalar::s()));
  CHECK_FALSE(span.insert(p->gen("x") * Scalar(3) - p->gen("xi")));
  CHECK(span.contains(p->gen("xi") + p->gen("x")));
  CHECK_FALSE(span.contains(p->gen("eta")));
  CHECK(span.rank() == 2);
}
