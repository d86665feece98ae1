#include <doctest.h>

#include <random>

#include "qsw/hopf.hpp"
#include "qsw/tensor.hpp"
#include "support.hpp"

using namespace qsw;
using qsw::test::pres;

TEST_CASE("Koszul sign on two legs") {
  auto p = pres("spq12");
  std::vector<PresentationPtr> legs{p, p};
  Element xi = p->gen("xi"), x = p->gen("x"), one(Scalar(1));
  auto u = TensorElement::pure(legs, {one, xi});
  auto v = TensorElement::pure(legs, {xi, one});
  CHECK(tensor_multiply(u, v) == TensorElement::pure(legs, {xi, xi}) * Scalar(-1));
  CHECK(tensor_multiply(v, u) == TensorElement::pure(legs, {xi, xi}));
  auto w = TensorElement::pure(legs, {x, one});
  CHECK(tensor_multiply(u, w) == TensorElement::pure(legs, {x, xi}));
}

TEST_CASE("tensor product is associative") {
  auto p = pres("spq12");
  std::vector<PresentationPtr> legs{p, p, p};
  std::mt19937 rng(17);
  auto rnd = [&] {
    TensorElement t(legs);
    for (int k = 0; k < 2; ++k) {
      std::vector<Element> f;
      for (int l = 0; l < 3; ++l) f.push_back(p->normal_form(test::random_homogeneous(*p, rng, (k + l) % 2, 2)));
      t += TensorElement::pure(legs, f);
    }
    return t;
  };
  for (int k = 0; k < 8; ++k) {
    auto a = rnd(), b = rnd(), c = rnd();
    CHECK(tensor_multiply(tensor_multiply(a, b), c).normalized() ==
          tensor_multiply(a, tensor_multiply(b, c)).normalized());
  }
}

TEST_CASE("comap extension is multiplicative") {
  auto t = pres("free-t");
  auto delta = coproduct(t);
  std::mt19937 rng(23);
  for (int k = 0; k < 10; ++k) {
    Element a = test::random_element(*t, rng, 2, 2), b = test::random_element(*t, rng, 2, 2);
    CHECK(extend_comap(delta, concat(a, b)).normalized() ==
          tensor_multiply(extend_comap(delta, a), extend_comap(delta, b)).normalized());
  }
}

TEST_CASE("coproduct on generators by hand") {
  auto t = pres("free-t");
  auto delta = coproduct(t);
  std::vector<PresentationPtr> legs{t, t};
  // Delta(t_01) = sum_k t_0k (x) t_k1
  TensorElement expect(legs);
  for (int k = 0; k < 3; ++k)
    expect += TensorElement::pure(legs, {Element::generator(t_index(0, k)), Element::generator(t_index(k, 1))});
  CHECK(extend_comap(delta, Element::generator(t_index(0, 1))) == expect);
}

TEST_CASE("coassociativity and the counit law") {
  auto t = pres("free-t");
  for (const auto& c : coproduct_axioms(t)) {
    CAPTURE(c.label);
    CHECK(c.ok());
  }
  for (auto side : {Side::left, Side::right})
    for (const auto& c : coaction_axioms(pres("spq12"), t, side)) {
      CAPTURE(c.label);
      CHECK(c.ok());
    }
}
