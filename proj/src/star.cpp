#include "qsw/star.hpp"

#include "qsw/hopf.hpp"

namespace qsw {

namespace {

// Sign of reversing a word of homogeneous letters: sum over i<j of p_i p_j.
int reversal_sign(const Presentation& p, const Word& w) {
  int odd = 0;
  for (char g : w) odd += p.generators()[(unsigned char)g].parity;
  return (odd * (odd - 1) / 2) & 1;
}

Element star_word(const StarStructure& st, const Word& w) {
  const Presentation& p = *st.presentation;
  Element acc(Scalar(1));
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = p.multiply(acc, st.images[(unsigned char)*it]);
  if (st.convention == StarConvention::graded && reversal_sign(p, w)) acc = -acc;
  return acc;
}

}  // namespace

Element apply_star(const StarStructure& st, const Element& e) {
  Element out;
  for (const auto& [w, c] : e.terms()) out += star_word(st, w) * st.conj(c);
  return out;
}

TensorElement apply_star(const std::vector<const StarStructure*>& legs, const TensorElement& t) {
  TensorElement out(t.legs());
  for (const auto& [k, c] : t.terms()) {
    std::vector<Element> factors;
    for (std::size_t l = 0; l < k.size(); ++l) factors.push_back(star_word(*legs[l], k[l]));
    out += TensorElement::pure(t.legs(), factors) * legs.front()->conj(c);
  }
  return out;
}

std::vector<StarCheck> verify_star_algebra(const StarStructure& st) {
  const Presentation& p = *st.presentation;
  std::vector<StarCheck> out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    Element g = Element::generator(int(k));
    Element expected = (st.convention == StarConvention::graded && p.generators()[k].parity) ? -g : g;
    out.push_back({"square:" + p.generators()[k].name, apply_star(st, apply_star(st, g)) - expected});
  }
  for (std::size_t k = 0; k < p.relations().size(); ++k)
    out.push_back({"relation:" + std::to_string(k), apply_star(st, p.relations()[k])});
  return out;
}

Element hermiticity_residue(const StarStructure& st, const Element& a) {
  return apply_star(st, a) - st.presentation->normal_form(a);
}

Element translate_starred(const StarStructure& dictionary, const std::string& text) {
  const Presentation& p = *dictionary.presentation;
  Element e = free_eval(parse_expr(text), [&](const Symbol& sym) {
    if (sym.decoration == Decoration::star) return apply_star(dictionary, p.gen(sym.base));
    return p.gen(sym.text());
  });
  return p.normal_form(e);
}

OscillatorReport q_oscillator(const Presentation& starred) {
  const Scalar q = Scalar::q();
  Element aa = starred.parse("1 - b*b^* + alpha*alpha^*");
  Element a_a = starred.parse("1 - 1/q^2*b^* * b - 1/q*alpha^* * alpha");
  OscillatorReport r;
  r.value = starred.normal_form(aa - a_a * (q * q));
  const Scalar lambda2 = Scalar(1) - q * q;
  for (const auto& [w, c] : r.value.terms()) {
    int n = 0;
    for (char g : w) {
      const std::string& name = starred.generators()[(unsigned char)g].name;
      if (name == "a" || name == "b" || name == "a^*" || name == "b^*") ++n;
    }
    if (n % 2) throw std::logic_error("rescaling needs an even number of a, b letters");
    r.rescaled.add(w, c * lambda2.pow(n / 2 - 1));
  }
  return r;
}

std::vector<TensorCheck> star_coproduct_checks(const StarStructure& free_star) {
  const PresentationPtr& p = free_star.presentation;
  CoMap delta = coproduct(p);
  std::vector<TensorCheck> out;
  for (std::size_t k = 0; k < p->size(); ++k) {
    TensorElement lhs = extend_comap(delta, apply_star(free_star, Element::generator(int(k))));
    TensorElement rhs = apply_star({&free_star, &free_star}, delta.images[k]);
    out.push_back({p->generators()[k].name, (lhs - rhs).normalized()});
  }
  return out;
}

namespace {

Scalar scalar_value(const TensorElement& t) {
  Scalar v;
  for (const auto& [k, c] : t.terms()) v += c;
  return v;
}

}  // namespace

std::vector<ElementCheck> star_counit_checks(const StarStructure& free_star) {
  const PresentationPtr& p = free_star.presentation;
  CoMap eps = counit(p);
  std::vector<ElementCheck> out;
  for (std::size_t k = 0; k < p->size(); ++k) {
    Element g = Element::generator(int(k));
    Scalar lhs = scalar_value(extend_comap(eps, apply_star(free_star, g)));
    Scalar rhs = free_star.conj(scalar_value(extend_comap(eps, g)));
    out.push_back({p->generators()[k].name, Element(lhs - rhs)});
  }
  return out;
}

std::vector<ElementCheck> double_antipode_checks(const StarStructure& free_star) {
  const Presentation& p = *free_star.presentation;
  std::vector<ElementCheck> out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    Element g = Element::generator(int(k));
    Element v = antipode_linear(p, apply_star(free_star, antipode_linear(p, apply_star(free_star, g))));
    out.push_back({p.generators()[k].name, v - (p.generators()[k].parity ? -g : g)});
  }
  return out;
}

std::vector<TensorCheck> star_comodule_checks(const CoMap& c, const std::vector<const StarStructure*>& leg_stars,
                                              const StarStructure& space_star) {
  std::vector<TensorCheck> out;
  for (std::size_t k = 0; k < c.source->size(); ++k) {
    TensorElement lhs = apply_star(leg_stars, c.images[k]);
    TensorElement rhs = extend_comap(c, apply_star(space_star, Element::generator(int(k))));
    out.push_back({c.source->generators()[k].name, (lhs - rhs).normalized()});
  }
  return out;
}

}  // namespace qsw
