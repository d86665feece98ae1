#include <doctest.h>

#include <random>

#include "qsw/star.hpp"
#include "support.hpp"

using namespace qsw;

TEST_CASE("conjugations are involutions fixing the right parameters") {
  Scalar s = Scalar::s(), h = Scalar::h(), i = Scalar::i();
  auto real = ConjugationSpec::real_q();
  CHECK(real(i) == -i);
  CHECK(real(s) == s);
  auto uni = ConjugationSpec::unimodular_q_imaginary_h();
  CHECK(uni(s) == s.inverse());
  CHECK(uni(h) == -h);
  Scalar a = (s + i * h) / (s * s - Scalar(2));
  CHECK(uni(uni(a)) == a);
  CHECK(real(real(a)) == a);
}

TEST_CASE("star is a conjugate-linear graded anti-involution") {
  std::mt19937 rng(29);
  for (const auto& [name, st] : test::catalog().stars()) {
    CAPTURE(name);
    // only well-defined stars: every relation maps into the ideal
    bool defined = true;
    for (const auto& c : verify_star_algebra(st)) defined = defined && c.ok();
    if (!defined) continue;
    const auto& p = *st.presentation;
    for (int k = 0; k < 6; ++k) {
      int pa = k % 2, pb = (k / 2) % 2;
      Element a = test::random_homogeneous(p, rng, pa, 2), b = test::random_homogeneous(p, rng, pb, 2);
      Scalar c = test::small_scalar(rng) + Scalar::i();
      CHECK(apply_star(st, a * c + b) == apply_star(st, a) * st.conj(c) + apply_star(st, b));
      Element ab = apply_star(st, p.multiply(a, b));
      Element ba = p.multiply(apply_star(st, b), apply_star(st, a));
      if (st.convention == StarConvention::graded && pa && pb) ba = -ba;
      CHECK(ab == ba);
      Element twice = apply_star(st, apply_star(st, a));
      Element na = p.normal_form(a);
      if (st.convention == StarConvention::graded && pa) na = -na;
      CHECK(twice == na);
    }
  }
}

TEST_CASE("hermiticity residue") {
  const auto& st = test::catalog().star("weyl-h-unit");
  const auto& p = *st.presentation;
  // x* = i x, so (1 + i) x is self-adjoint: conj(1+i) i = 1 + i
  CHECK(hermiticity_residue(st, p.gen("x") * (Scalar(1) + Scalar::i())).is_zero());
  CHECK_FALSE(hermiticity_residue(st, p.gen("x")).is_zero());
  CHECK(hermiticity_residue(st, p.gen("@xi")).is_zero());
}
