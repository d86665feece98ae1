#include "qsw/hopf.hpp"

#include <stdexcept>

namespace qsw {

namespace {

const char* const group_names[] = {"a", "b", "c", "d", "alpha", "delta"};

TensorElement gen_tensor(const std::vector<PresentationPtr>& legs, std::size_t leg_a, int ga, int gb,
                         const Scalar& c) {
  std::vector<Element> f(legs.size(), Element(Scalar(1)));
  f[leg_a] = Element::generator(ga);
  f[1 - leg_a] = Element::generator(gb);
  return TensorElement::pure(legs, f) * c;
}

}  // namespace

CoMap coaction(const PresentationPtr& space, const PresentationPtr& free_t, Side side) {
  CoMap c{space, side == Side::left ? std::vector{free_t, space} : std::vector{space, free_t}, {}};
  for (int i = 0; i < 3; ++i) {
    TensorElement img(c.target);
    for (int k = 0; k < 3; ++k) {
      if (side == Side::left) img += gen_tensor(c.target, 0, t_index(i, k), k, Scalar(1));
      else img += gen_tensor(c.target, 0, k, t_index(k, i), Scalar(1));
    }
    c.images.push_back(img);
  }
  return c;
}

CoMap supertransposed_right_coaction(const PresentationPtr& space, const PresentationPtr& free_t) {
  CoMap c{space, {space, free_t}, {}};
  for (int i = 0; i < 3; ++i) {
    TensorElement img(c.target);
    for (int k = 0; k < 3; ++k) {
      int sign = ((index_parity(k) + 1) * index_parity(i)) & 1;
      img += gen_tensor(c.target, 0, k, t_index(i, k), Scalar(sign ? -1 : 1));
    }
    c.images.push_back(img);
  }
  return c;
}

CoMap coproduct(const PresentationPtr& free_t) {
  CoMap c{free_t, {free_t, free_t}, {}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      TensorElement img(c.target);
      for (int k = 0; k < 3; ++k) img += gen_tensor(c.target, 0, t_index(i, k), t_index(k, j), Scalar(1));
      c.images.push_back(img);
    }
  return c;
}

CoMap counit(const PresentationPtr& free_t) {
  CoMap c{free_t, {}, {}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c.images.push_back(i == j ? TensorElement::unit({}) : TensorElement(std::vector<PresentationPtr>{}));
  return c;
}

std::vector<Element> derive_covariance_relations(const PresentationPtr& space, const PresentationPtr& free_t,
                                                 Side side) {
  CoMap c = coaction(space, free_t, side);
  std::size_t group_leg = side == Side::left ? 0 : 1;
  std::vector<Element> out;
  for (const auto& r : space->relations()) {
    TensorElement image = extend_comap(c, r);
    for (auto& [rest, coeff] : image.split(group_leg)) out.push_back(coeff);
  }
  return out;
}

Morphism group_into_free(const PresentationPtr& group, const PresentationPtr& free_t) {
  Morphism m{group, free_t, {}, ScalarMap()};
  const int positions[] = {t_index(0, 0), t_index(0, 2), t_index(2, 0), t_index(2, 2), t_index(0, 1), t_index(2, 1)};
  for (std::size_t k = 0; k < group->size(); ++k) {
    const std::string& n = group->generators()[k].name;
    int idx = -1;
    for (int g = 0; g < 6; ++g)
      if (n == group_names[g]) idx = positions[g];
    if (idx < 0) throw std::invalid_argument("unexpected group generator " + n);
    m.images.push_back(Element::generator(idx));
  }
  return m;
}

PresentationPtr classical_group(bool unimodular) {
  std::vector<Generator> gens = {{"a", 0, 2}, {"b", 0, 1}, {"c", 0, 1}, {"d", 0, 2}, {"alpha", 1, 1}, {"delta", 1, 1}};
  std::vector<Element> rels;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      int sign = gens[std::size_t(i)].parity * gens[std::size_t(j)].parity;
      if (i == j && !sign) continue;
      Element r = Element::word(Word{char(i), char(j)}) + Element::word(Word{char(j), char(i)}, Scalar(sign ? 1 : -1));
      if (i == j) r = Element::word(Word{char(i), char(i)});
      rels.push_back(r);
    }
  if (unimodular)
    rels.push_back(Element::word(Word{0, 3}) - Element(Scalar(1)) - Element::word(Word{1, 2}) - Element::word(Word{4, 5}));
  return std::make_shared<const Presentation>(unimodular ? "classical-unimodular" : "classical", gens, rels);
}

Morphism classical_substitution(const PresentationPtr& free_t, const PresentationPtr& classical) {
  const Presentation& c = *classical;
  auto g = [&](const char* n) { return c.gen(n); };
  auto mul = [&](const Element& x, const Element& y) { return c.multiply(x, y); };
  Morphism m{free_t, classical, {}, ScalarMap(Scalar::i(), Scalar(1), Scalar::h())};
  m.images = {g("a"),
              g("alpha"),
              g("b"),
              mul(g("a"), g("delta")) - mul(g("c"), g("alpha")),
              Element(Scalar(1)) - mul(g("alpha"), g("delta")),
              mul(g("b"), g("delta")) - mul(g("d"), g("alpha")),
              g("c"),
              g("delta"),
              g("d")};
  return m;
}

TensorElement map_leg(const TensorElement& t, std::size_t leg, const Morphism& m) {
  std::vector<PresentationPtr> legs = t.legs();
  legs[leg] = m.codomain;
  TensorElement out(legs);
  Morphism plain = m;
  plain.scalars = ScalarMap();
  for (const auto& [k, c] : t.terms()) {
    Element img = apply_morphism(plain, Element::word(k[leg]));
    std::vector<Element> f;
    for (std::size_t l = 0; l < k.size(); ++l) f.push_back(l == leg ? img : Element::word(k[l]));
    out += TensorElement::pure(legs, f) * m.scalars(c);
  }
  return out;
}

std::array<Element, 2> superdeterminant(const Presentation& group) {
  auto w = [&](const std::string& text) { return group.parse(text); };
  return {w("a*d - q*b*c - s*alpha*delta"), w("d*a - 1/q*b*c + 1/s*delta*alpha")};
}

Element antipode_linear(const Presentation& free_t, const Element& e) {
  // S(t_ij) = (T^-1)_ij
  const Scalar s = Scalar::s(), q = Scalar::q();
  const std::pair<const char*, Scalar> images[9] = {
      {"d", Scalar(1)},  {"beta", s.inverse()}, {"b", -q.inverse()},   {"delta", -s}, {"e", Scalar(1)},
      {"alpha", s.inverse()}, {"c", -q},        {"gamma", -s},         {"a", Scalar(1)}};
  Element out;
  for (const auto& [w, c] : e.terms()) {
    if (w.size() > 1) throw std::invalid_argument("antipode is only tabulated on generators");
    if (w.empty()) {
      out += Element(c);
      continue;
    }
    const auto& [name, f] = images[(unsigned char)w[0]];
    out += free_t.gen(name) * (c * f);
  }
  return out;
}

ElementMatrix multiply(const Presentation& p, const ElementMatrix& a, const ElementMatrix& b) {
  ElementMatrix out(a.size(), std::vector<Element>(b.front().size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.front().size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += p.multiply(a[i][k], b[k][j]);
  return out;
}

ElementMatrix classical_T(const Presentation& classical) {
  auto g = [&](const char* n) { return classical.gen(n); };
  auto mul = [&](const Element& x, const Element& y) { return classical.multiply(x, y); };
  Element gamma = mul(g("a"), g("delta")) - mul(g("c"), g("alpha"));
  Element e = Element(Scalar(1)) - mul(g("alpha"), g("delta"));
  Element beta = mul(g("b"), g("delta")) - mul(g("d"), g("alpha"));
  return {{g("a"), g("alpha"), g("b")}, {gamma, e, beta}, {g("c"), g("delta"), g("d")}};
}

ElementMatrix classical_T_inverse(const Presentation& classical) {
  ElementMatrix t = classical_T(classical);
  return {{t[2][2], t[1][2], -t[0][2]}, {-t[2][1], t[1][1], t[0][1]}, {-t[2][0], -t[1][0], t[0][0]}};
}

ElementMatrix supertranspose(const ElementMatrix& a) {
  ElementMatrix out(a.front().size(), std::vector<Element>(a.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j) {
      int pi = index_parity(int(i)), pj = index_parity(int(j));
      out[i][j] = ((pi + pj) * pj) & 1 ? -a[j][i] : a[j][i];
    }
  return out;
}

std::vector<TensorCheck> coproduct_axioms(const PresentationPtr& free_t) {
  CoMap delta = coproduct(free_t), eps = counit(free_t);
  std::vector<TensorCheck> out;
  for (std::size_t k = 0; k < free_t->size(); ++k) {
    const std::string& n = free_t->generators()[k].name;
    TensorElement d = delta.images[k];
    TensorElement id = TensorElement::pure({free_t}, {Element::generator(int(k))});
    out.push_back({"coassociativity:" + n, apply_on_leg(d, 0, delta) - apply_on_leg(d, 1, delta)});
    out.push_back({"left-counit:" + n, apply_on_leg(d, 0, eps) - id});
    out.push_back({"right-counit:" + n, apply_on_leg(d, 1, eps) - id});
  }
  return out;
}

std::vector<TensorCheck> coaction_axioms(const PresentationPtr& space, const PresentationPtr& free_t, Side side) {
  CoMap co = coaction(space, free_t, side), delta = coproduct(free_t), eps = counit(free_t);
  std::size_t group_leg = side == Side::left ? 0 : 1, space_leg = 1 - group_leg;
  std::vector<TensorCheck> out;
  for (std::size_t k = 0; k < space->size(); ++k) {
    const std::string& n = space->generators()[k].name;
    TensorElement d = co.images[k];
    TensorElement id = TensorElement::pure({space}, {Element::generator(int(k))});
    out.push_back({"coassociativity:" + n, apply_on_leg(d, space_leg, co) - apply_on_leg(d, group_leg, delta)});
    out.push_back({"counit:" + n, apply_on_leg(d, group_leg, eps) - id});
  }
  return out;
}

std::vector<ElementCheck> central_residues(const Presentation& p, const Element& e) {
  std::vector<ElementCheck> out;
  for (std::size_t k = 0; k < p.size(); ++k)
    out.push_back({p.generators()[k].name, super_commutator(e, Element::generator(int(k)), p)});
  return out;
}

TensorElement classical_coinvariance_residue(const PresentationPtr& space, const PresentationPtr& free_t,
                                             const PresentationPtr& classical, const Element& e, Side side) {
  std::size_t group_leg = side == Side::left ? 0 : 1;
  TensorElement image = extend_comap(coaction(space, free_t, side), e);
  std::vector<PresentationPtr> legs = image.legs();
  std::vector<Element> factors(2, Element(Scalar(1)));
  factors[1 - group_leg] = space->normal_form(e);
  image -= TensorElement::pure(legs, factors);
  Morphism m = classical_substitution(free_t, classical);
  return map_leg(image, group_leg, m).normalized();
}

std::vector<ElementCheck> classical_inverse_checks(const Presentation& classical) {
  ElementMatrix t = classical_T(classical), inv = classical_T_inverse(classical);
  Element D = classical.normal_form(classical.parse("a*d - b*c - alpha*delta"));
  ElementMatrix tt = multiply(classical, t, inv);
  const int C[3][3] = {{0, 0, -1}, {0, 1, 0}, {1, 0, 0}};
  ElementMatrix c(3, std::vector<Element>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i][j] = Element(Scalar(C[i][j]));
  ElementMatrix stct = multiply(classical, multiply(classical, supertranspose(t), c), t);
  std::vector<ElementCheck> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::string ij = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      out.push_back({"T*Tinv" + ij, tt[i][j] - (i == j ? D : Element())});
      out.push_back({"Tst*C*T" + ij, stct[i][j] - D * Scalar(C[i][j])});
    }
  for (auto& k : out) k.residue = classical.normal_form(k.residue);
  return out;
}

}  // namespace qsw
