#include "qsw/calculus.hpp"

#include <stdexcept>

#include "qsw/hopf.hpp"
#include "qsw/rmatrix.hpp"

namespace qsw {

namespace {

const char* const coordinate_names[3] = {"xi", "x", "eta"};

bool is_partial(const Presentation& p, char g) { return p.generators()[(unsigned char)g].name[0] == '@'; }

std::string diff_name(const std::string& coordinate) { return "d(" + coordinate + ")"; }

PresentationPtr free_copy(const Presentation& p) {
  return std::make_shared<Presentation>(p.name() + "-free", p.generators(), std::vector<Element>{});
}

std::string word_label(const Presentation& p, const Word& w) { return w.empty() ? "1" : p.format_word(w); }

}  // namespace

Calculus make_calculus(PresentationPtr base, PresentationPtr forms) {
  Calculus c{std::move(base), std::move(forms), {}, {}};
  for (const auto& g : c.base->generators()) {
    c.coord.push_back(c.forms->require_index(g.name));
    c.diff.push_back(c.forms->require_index(diff_name(g.name)));
    if (c.forms->generators()[std::size_t(c.diff.back())].parity == g.parity)
      throw std::invalid_argument("differential " + diff_name(g.name) + " must have opposite parity");
  }
  return c;
}

Element transport(const Presentation& from, const Presentation& to, const Element& e) {
  std::vector<int> map(from.size(), -1);
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Word t;
    for (char g : w) {
      int& m = map[(unsigned char)g];
      if (m < 0) m = to.require_index(from.generators()[(unsigned char)g].name);
      t.push_back(char(m));
    }
    out.add(t, c);
  }
  return out;
}

Element apply_d(const Calculus& c, const Element& e) {
  const Presentation& f = *c.forms;
  std::vector<int> d_of(f.size(), -1);
  std::vector<bool> is_form(f.size(), false);
  for (std::size_t k = 0; k < c.coord.size(); ++k) {
    d_of[std::size_t(c.coord[k])] = c.diff[k];
    is_form[std::size_t(c.diff[k])] = true;
  }
  Element out;
  for (const auto& [w, coeff] : e.terms()) {
    int prefix = 0;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      auto g = std::size_t((unsigned char)w[pos]);
      if (d_of[g] >= 0) {
        Word t = w;
        t[pos] = char(d_of[g]);
        out.add(t, prefix ? -coeff : coeff);
      } else if (!is_form[g]) {
        throw std::invalid_argument("d is not defined on " + f.generators()[g].name);
      }
      prefix ^= f.generators()[g].parity;
    }
  }
  return f.normal_form(out);
}

std::vector<CalculusCheck> verify_calculus_consistency(const Calculus& c, std::size_t max_degree) {
  std::vector<CalculusCheck> out;
  const auto& base_rel = c.base->relations();
  for (std::size_t k = 0; k < base_rel.size(); ++k)
    out.push_back({"d-relation:" + std::to_string(k), apply_d(c, transport(*c.base, *c.forms, base_rel[k]))});
  // relations of the forms presentation that mention a differential
  std::vector<bool> is_form(c.forms->size(), false);
  for (int d : c.diff) is_form[std::size_t(d)] = true;
  const auto& rels = c.forms->relations();
  for (std::size_t k = 0; k < rels.size(); ++k) {
    bool has_form = false;
    for (const auto& [w, coeff] : rels[k].terms())
      for (char g : w) has_form = has_form || is_form[(unsigned char)g];
    if (has_form) out.push_back({"d-form-relation:" + std::to_string(k), apply_d(c, rels[k])});
  }
  for (std::size_t n = 1; n <= max_degree; ++n)
    for (const Word& w : enumerate_pbw(*c.base, n)) {
      Element m = transport(*c.base, *c.forms, Element::word(w));
      out.push_back({"d2:" + word_label(*c.base, w), apply_d(c, apply_d(c, m))});
    }
  return out;
}

Element derivative_by_forms(const Calculus& c, const std::string& coordinate, const Element& f) {
  int i = c.base->require_index(coordinate);
  char d = char(c.diff[std::size_t(i)]);
  Element df = apply_d(c, transport(*c.base, *c.forms, f));
  Element rest;
  for (const auto& [w, coeff] : df.terms()) {
    if (w.empty() || w[0] != d) continue;
    rest.add(w.substr(1), coeff);
  }
  return c.base->normal_form(transport(*c.forms, *c.base, rest));
}

Element derivative_by_weyl(const Presentation& weyl, const Presentation& base, const std::string& coordinate,
                           const Element& f) {
  Element op = weyl.gen("@" + coordinate);
  Element prod = weyl.multiply(op, transport(base, weyl, f));
  Element kept;
  for (const auto& [w, coeff] : prod.terms()) {
    bool partial_free = true;
    for (char g : w) partial_free = partial_free && !is_partial(weyl, g);
    if (partial_free) kept.add(w, coeff);
  }
  return base.normal_form(transport(weyl, base, kept));
}

std::vector<StrategyComparison> compare_derivative_strategies(const Calculus& c, const Presentation& weyl,
                                                              std::size_t max_degree) {
  std::vector<StrategyComparison> out;
  for (std::size_t n = 0; n <= max_degree; ++n)
    for (const Word& w : enumerate_pbw(*c.base, n))
      for (const auto& g : c.base->generators()) {
        Element f = Element::word(w);
        out.push_back({"@" + g.name + "(" + word_label(*c.base, w) + ")", derivative_by_forms(c, g.name, f),
                       derivative_by_weyl(weyl, *c.base, g.name, f)});
      }
  return out;
}

Element supersphere(const Presentation& p) { return p.parse("1/s*xi*eta + x^2 - s*eta*xi"); }

std::vector<CalculusCheck> supersphere_derivative_relations(const Calculus& c, const Presentation& weyl) {
  std::vector<CalculusCheck> out;
  const Presentation& f = *c.forms;
  Element r = supersphere(f);
  Scalar q = Scalar::q();
  for (const char* x : coordinate_names) {
    Element dx = f.gen(diff_name(x));
    out.push_back({"d(" + std::string(x) + ")*r", f.multiply(dx, r) - f.multiply(r, dx) * (q * q).inverse()});
  }
  Element rw = supersphere(weyl);
  auto partial_check = [&](const std::string& x, const Element& tail) {
    Element p = weyl.gen("@" + x);
    out.push_back({"@" + x + "*r", weyl.multiply(p, rw) - weyl.multiply(rw, p) * (q * q) - tail});
  };
  partial_check("x", weyl.parse("(1+q)*(1-q+q^2)*x"));
  partial_check("xi", weyl.parse("1/s*(1+q^3)*eta"));
  partial_check("eta", weyl.parse("1/s*(1+q^3)*xi"));
  return out;
}

PresentationPtr build_gamma_minus(const Presentation& gamma_plus, const std::string& name) {
  PresentationPtr src = free_copy(gamma_plus);
  auto g = [&](const std::string& n) { return gamma_plus.gen(n); };
  Scalar i = Scalar::i();
  Morphism sub{src, src, {}, ScalarMap(Scalar::i(), Scalar::s().inverse(), Scalar::h())};
  sub.images.resize(gamma_plus.size());
  auto set = [&](const std::string& n, const Element& img) { sub.images[std::size_t(gamma_plus.require_index(n))] = img; };
  set("xi", g("eta"));
  set("eta", g("xi"));
  set("x", g("x") * i);
  set("d(xi)", g("d(eta)"));
  set("d(eta)", g("d(xi)"));
  set("d(x)", g("d(x)") * i);

  std::vector<bool> is_form(gamma_plus.size(), false);
  for (const char* x : coordinate_names) is_form[std::size_t(gamma_plus.require_index(diff_name(x)))] = true;
  std::vector<Element> relations;
  for (const Element& r : gamma_plus.relations()) {
    bool has_form = false;
    for (const auto& [w, c] : r.terms())
      for (char l : w) has_form = has_form || is_form[(unsigned char)l];
    relations.push_back(has_form ? apply_morphism(sub, r) : r);
  }
  return std::make_shared<Presentation>(name, gamma_plus.generators(), relations);
}

std::vector<Element> compact_derivative_relations(const Presentation& weyl, const MatrixRF& B) {
  std::vector<Element> out;
  for (const Element& r : weyl.relations()) {
    bool coords = false, partials = false;
    for (const auto& [w, c] : r.terms())
      for (char l : w) (is_partial(weyl, l) ? partials : coords) = true;
    if (!(coords && partials)) out.push_back(r);
  }
  std::vector<Element> X, D;
  for (const char* x : coordinate_names) {
    X.push_back(weyl.gen(x));
    D.push_back(weyl.gen("@" + std::string(x)));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Element rel = concat(D[std::size_t(i)], X[std::size_t(j)]);
      if (i == j) rel -= Element(Scalar(1));
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const Scalar& b = B(pair_index(j, k), pair_index(i, l));
          if (!b.is_zero()) rel -= concat(X[std::size_t(l)], D[std::size_t(k)]) * b;
        }
      out.push_back(rel);
    }
  return out;
}

PresentationPtr weyl_from_matrix(const Presentation& weyl, const MatrixRF& B, const std::string& name) {
  return std::make_shared<Presentation>(name, weyl.generators(), compact_derivative_relations(weyl, B));
}

CoMap forms_coaction(const Calculus& c, const PresentationPtr& free_t) {
  CoMap m{c.forms, {free_t, c.forms}, {}};
  m.images.assign(c.forms->size(), TensorElement(m.target));
  std::vector<int> pos(c.base->size());
  for (int k = 0; k < 3; ++k) pos[std::size_t(c.base->require_index(coordinate_names[k]))] = k;
  for (std::size_t b = 0; b < c.base->size(); ++b) {
    int i = pos[b];
    TensorElement x(m.target), dx(m.target);
    for (int k = 0; k < 3; ++k) {
      int bk = c.base->require_index(coordinate_names[k]);
      Element t = Element::generator(t_index(i, k));
      x += TensorElement::pure(m.target, {t, Element::generator(c.coord[std::size_t(bk)])});
      Scalar tau = (index_parity(i) ^ index_parity(k)) ? Scalar(-1) : Scalar(1);
      dx += TensorElement::pure(m.target, {t * tau, Element::generator(c.diff[std::size_t(bk)])});
    }
    m.images[std::size_t(c.coord[b])] = x;
    m.images[std::size_t(c.diff[b])] = dx;
  }
  return m;
}

std::vector<CovarianceCheck> verify_d_covariance(const Calculus& c, const PresentationPtr& free_t) {
  std::vector<CovarianceCheck> out;
  CoMap delta = forms_coaction(c, free_t);
  CoMap eps = counit(free_t);
  for (std::size_t g = 0; g < c.forms->size(); ++g) {
    TensorElement img = apply_on_leg(delta.images[g], 0, eps);
    TensorElement expect = TensorElement::pure({c.forms}, {Element::generator(int(g))});
    out.push_back({"counit:" + c.forms->generators()[g].name, img - expect});
  }

  // Push relations through the free product, then specialize both legs.
  PresentationPtr forms_free = free_copy(*c.forms);
  CoMap free_delta{forms_free, {free_t, forms_free}, {}};
  for (const auto& img : delta.images) {
    TensorElement t(free_delta.target);
    for (const auto& [k, coeff] : img.terms()) t.add(k, coeff);
    free_delta.images.push_back(t);
  }
  ScalarMap at_one(Scalar::i(), Scalar(1), Scalar::h());
  Morphism to_one{forms_free, forms_free, {}, at_one};
  for (std::size_t g = 0; g < c.forms->size(); ++g) to_one.images.push_back(Element::generator(int(g)));
  std::vector<Element> classical_rel;
  for (const Element& r : c.forms->relations()) classical_rel.push_back(apply_morphism(to_one, r));
  auto classical_forms = std::make_shared<Presentation>(c.forms->name() + "-classical", c.forms->generators(),
                                                        classical_rel);
  to_one.codomain = classical_forms;
  PresentationPtr group = classical_group(false);
  Morphism subst = classical_substitution(free_t, group);

  const auto& rels = c.forms->relations();
  for (std::size_t k = 0; k < rels.size(); ++k) {
    TensorElement t = extend_comap(free_delta, rels[k]);
    t = map_leg(map_leg(t, 0, subst), 1, to_one).normalized();
    out.push_back({"classical-relation:" + std::to_string(k), t});
  }
  return out;
}

}  // namespace qsw
