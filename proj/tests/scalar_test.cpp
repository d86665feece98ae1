#include <doctest.h>

#include <random>

#include "qsw/scalar.hpp"

using namespace qsw;

namespace {

// Point evaluation, written against the term list only.
GaussianRational eval(const Poly& p, const GaussianRational& s, const GaussianRational& h) {
  GaussianRational acc;
  for (const auto& t : p.terms()) {
    GaussianRational m = t.coeff;
    for (int k = 0; k < t.exp.s; ++k) m *= s;
    for (int k = 0; k < t.exp.h; ++k) m *= h;
    acc += m;
  }
  return acc;
}

GaussianRational eval(const Scalar& a, const GaussianRational& s, const GaussianRational& h) {
  return eval(a.num(), s, h) / eval(a.den(), s, h);
}

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), deg(0, 2), nterms(1, 3);
  auto poly = [&] {
    Poly p;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k)
      p += Poly::monomial(GaussianRational(coeff(rng), coeff(rng) % 2), {std::uint16_t(deg(rng)), std::uint16_t(deg(rng) % 2)});
    return p;
  };
  Poly n = poly(), d = poly();
  if (d.is_zero()) d = Poly(1);
  return Scalar(n, d);
}

const Scalar s = Scalar::s();
const Scalar h = Scalar::h();
const Scalar q = Scalar::q();
const Scalar I = Scalar::i();

}  // namespace

TEST_CASE("cancellation and canonical form") {
  CHECK((s - 1) / (s - 1) == Scalar(1));
  CHECK((q - 1) / (s - 1) == s + 1);
  CHECK((q - q.inverse()).to_string() == "(s^4 - 1)/s^2");
  CHECK((s * (1 - q)).to_string() == "-s^3 + s");
  CHECK(Scalar(0).to_string() == "0");
  CHECK((h / (s * h + h)) == (1 + s).inverse());
  CHECK(Scalar::rational(3, 6) == Scalar::rational(1, 2));
  CHECK(((s + I) * (s - I)) == q + 1);
}

TEST_CASE("multivariate gcd") {
  Poly ps = Poly::var_s(), ph = Poly::var_h();
  Poly a = (ps * ph + 1) * (ps - ph) * (ps + Poly(2));
  Poly b = (ps * ph + 1) * (ps + ph) * (ps - ph);
  CHECK(gcd(a, b) == ((ps * ph + 1) * (ps - ph)).make_monic());
  CHECK(gcd(ps * ph, ps * ps) == ps);
  CHECK(gcd(ps + 1, ph + 1).is_one());
}

TEST_CASE("field laws agree with point evaluation") {
  std::mt19937 rng(7);
  const GaussianRational ps(mpq_class(3, 7), 1), ph(mpq_class(-5, 2), 2);
  for (int iter = 0; iter < 200; ++iter) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(eval(a + b, ps, ph) == eval(a, ps, ph) + eval(b, ps, ph));
    CHECK(eval(a * b, ps, ph) == eval(a, ps, ph) * eval(b, ps, ph));
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a - a == Scalar(0));
  }
}

TEST_CASE("conjugations") {
  auto real = ConjugationSpec::real_q();
  auto unit = ConjugationSpec::unimodular_q();
  auto unit_h = ConjugationSpec::unimodular_q_imaginary_h();
  CHECK(real(I * q) == -I * q);
  CHECK(unit(q) == q.inverse());
  CHECK(unit(s + I) == s.inverse() - I);
  CHECK(unit_h(h * s) == -h / s);
  std::mt19937 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    CHECK(unit(unit(a)) == a);
    CHECK(unit(a * b) == unit(a) * unit(b));
    CHECK(unit_h(a + b) == unit_h(a) + unit_h(b));
  }
  CHECK_THROWS_AS(ConjugationSpec(I, s * s, h), std::invalid_argument);
}

TEST_CASE("limits at s = 1") {
  CHECK(limit_s_to_1((q - 1) / (s - 1)) == Scalar(2));
  CHECK(limit_s_to_1(h / (q - 1) * (s - 1)) == h / 2);
  CHECK(limit_s_to_1((s - 1) * (s - 1) / (q - 1)) == Scalar(0));
  CHECK(limit_s_to_1(q * h + I) == h + I);
  CHECK_THROWS_AS(limit_s_to_1(h / (q - 1)), PoleError);
  CHECK(valuation_at_s_one(h / (q - 1)) == -1);
  CHECK(valuation_at_s_one((q - 1) * (q - 1) * h) == 2);
  CHECK(shift_s_minus_one(Scalar(1), -1) == (s - 1).inverse());
}
