#include "qsw/contraction.hpp"

#include <stdexcept>

#include "qsw/rmatrix.hpp"

namespace qsw {

namespace {

const char* const coordinate_names[3] = {"xi", "x", "eta"};

Scalar s_minus_one() { return Scalar::s() - Scalar(1); }

Element free_substitute(const Element& e, const std::vector<Element>& images) {
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Element term(c);
    for (char g : w) term = concat(term, images[(unsigned char)g]);
    out += term;
  }
  return out;
}

int min_valuation(const std::vector<Scalar>& v) {
  int m = 0;
  bool first = true;
  for (const Scalar& c : v) {
    if (c.is_zero()) continue;
    int k = valuation_at_s_one(c);
    if (first || k < m) m = k;
    first = false;
  }
  return m;
}

void rescale(std::vector<Scalar>& v) {
  int m = min_valuation(v);
  if (m == 0) return;
  Scalar f = s_minus_one().pow(-m);
  for (Scalar& c : v) c *= f;
}

Element hat_product(const Presentation& p, std::initializer_list<Element> factors) {
  Element out(Scalar(1));
  for (const Element& f : factors) out = p.multiply(out, f);
  return out;
}

}  // namespace

Scalar kappa() { return Scalar::h() / (Scalar::q() - Scalar(1)); }

MatrixRF contraction_g() { return MatrixRF{{1, 0, kappa()}, {0, 1, 0}, {0, 0, 1}}; }

MatrixRF C_q() {
  Scalar s = Scalar::s();
  return MatrixRF{{0, 0, -s.inverse()}, {0, 1, 0}, {s, 0, 0}};
}

MatrixRF supertranspose(const MatrixRF& a) {
  auto par = [](std::size_t k) { return k == 1 ? 0 : 1; };
  MatrixRF out(a.cols(), a.rows());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      Scalar v = a(j, i);
      out(i, j) = ((par(i) + par(j)) * par(j)) & 1 ? -v : v;
    }
  return out;
}

Element bilinear_form(const Presentation& p, const MatrixRF& C) {
  Element out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Scalar& c = C(std::size_t(i), std::size_t(j));
      if (c.is_zero()) continue;
      Scalar sign = i == 1 ? Scalar(1) : Scalar(-1);
      out += p.multiply(p.gen(coordinate_names[i]), p.gen(coordinate_names[j])) * (sign * c);
    }
  return out;
}

std::optional<ContractionMap> registered_contraction(const Presentation& source) {
  auto has = [&](const char* n) { return source.index_of(n).has_value(); };
  ContractionMap cm;
  cm.target_generators = source.generators();
  for (std::size_t g = 0; g < source.size(); ++g) cm.images.push_back(Element::generator(int(g)));
  auto gen = [&](const char* n) { return Element::generator(source.require_index(n)); };
  auto image = [&](const char* n) -> Element& { return cm.images[std::size_t(source.require_index(n))]; };
  if (has("xi") && has("x") && has("eta") && has("@xi") && has("@x") && has("@eta")) {
    cm.target = "weyl-h";
    image("xi") = gen("xi") + gen("eta") * kappa();
    image("@eta") = gen("@eta") - gen("@xi") * kappa();
    return cm;
  }
  if (has("xi") && has("x") && has("eta") && source.size() == 3) {
    cm.target = "sph12";
    cm.target_generators[std::size_t(source.require_index("xi"))].weight = 2;
    image("xi") = gen("xi") + gen("eta") * kappa();
    return cm;
  }
  if (has("theta") && has("y") && has("z") && source.size() == 3) {
    cm.target = "lambda-h";
    image("y") = gen("y") + gen("z") * kappa();
    return cm;
  }
  return std::nullopt;
}

std::vector<Element> limit_span(const std::vector<Element>& elements) {
  std::map<Word, std::size_t, ShortLex> columns;
  for (const Element& e : elements)
    for (const auto& [w, c] : e.terms()) columns.emplace(w, 0);
  std::vector<Word> words;
  for (auto& [w, k] : columns) {
    k = words.size();
    words.push_back(w);
  }
  MatrixRF m(elements.size(), words.size());
  for (std::size_t r = 0; r < elements.size(); ++r)
    for (const auto& [w, c] : elements[r].terms()) m(r, columns[w]) = c;
  Rref red = rref(m);
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t r = 0; r < red.pivot_columns.size(); ++r) {
    std::vector<Scalar> v(words.size());
    for (std::size_t c = 0; c < words.size(); ++c) v[c] = red.reduced(r, c);
    basis.push_back(std::move(v));
  }

  MatrixRF lead;
  for (std::size_t round = 0;; ++round) {
    if (round > 10 * (basis.size() + 1) * (words.size() + 1)) throw std::runtime_error("subspace limit does not settle");
    for (auto& v : basis) rescale(v);
    lead = MatrixRF(basis.size(), words.size());
    for (std::size_t r = 0; r < basis.size(); ++r)
      for (std::size_t c = 0; c < words.size(); ++c) lead(r, c) = limit_s_to_1(basis[r][c]);
    MatrixRF dep = kernel(lead.transpose());
    if (dep.cols() == 0) break;
    std::size_t k = basis.size();
    for (std::size_t r = 0; r < basis.size(); ++r)
      if (!dep(r, 0).is_zero()) k = r;
    std::vector<Scalar> combined(words.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const Scalar& c = dep(r, 0);
      if (c.is_zero()) continue;
      for (std::size_t col = 0; col < words.size(); ++col) combined[col] += c * basis[r][col];
    }
    basis[k] = std::move(combined);
  }

  std::vector<Element> out;
  for (std::size_t r = 0; r < lead.rows(); ++r) {
    Element e;
    for (std::size_t c = 0; c < words.size(); ++c) e.add(words[c], lead(r, c));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Element> substitute_relations(const Presentation& source, const ContractionMap& cm) {
  std::vector<Element> out;
  for (const Element& r : source.relations()) out.push_back(free_substitute(r, cm.images));
  return out;
}

PresentationPtr contract_presentation(const Presentation& source, const ContractionMap& cm) {
  return std::make_shared<Presentation>(cm.target, cm.target_generators, limit_span(substitute_relations(source, cm)));
}

Element contract_element(const Element& e) {
  std::vector<Scalar> v;
  for (const auto& [w, c] : e.terms()) v.push_back(c);
  int m = min_valuation(v);
  Scalar f = s_minus_one().pow(-m);
  return e.map_coefficients([&](const Scalar& c) { return limit_s_to_1(c * f); });
}

MatrixRF contract_matrix(const MatrixRF& m, MatrixContraction mode) {
  MatrixRF g = contraction_g();
  MatrixRF prod;
  if (mode == MatrixContraction::congruence) {
    prod = supertranspose(g) * m * g;
  } else {
    MatrixRF gi{{1, 0, -kappa()}, {0, 1, 0}, {0, 0, 1}};
    prod = kron(gi, gi) * m * kron(g, g);
  }
  MatrixRF out(prod.rows(), prod.cols());
  for (std::size_t r = 0; r < prod.rows(); ++r)
    for (std::size_t c = 0; c < prod.cols(); ++c) {
      try {
        out(r, c) = limit_s_to_1(prod(r, c));
      } catch (const PoleError&) {
        throw PoleError("pole at q = 1 in entry (" + std::to_string(r) + ", " + std::to_string(c) +
                        "): " + prod(r, c).to_string());
      }
    }
  return out;
}

std::vector<CalculusCheck> contraction_commutes_with_reduction(const Presentation& source,
                                                               const ContractionMap& cm,
                                                               const Presentation& contracted) {
  std::vector<CalculusCheck> out;
  auto subs = substitute_relations(source, cm);
  for (std::size_t k = 0; k < subs.size(); ++k)
    out.push_back({source.name() + ":relation:" + std::to_string(k), contracted.normal_form(contract_element(subs[k]))});
  return out;
}

std::vector<CalculusCheck> h_supersphere_checks(const Presentation& sph) {
  std::vector<CalculusCheck> out;
  Element rho = sph.normal_form(bilinear_form(sph, contract_matrix(C_q(), MatrixContraction::congruence)));
  out.push_back({"rho=x^2+2*xi*eta", rho - sph.parse("x^2 + 2*xi*eta")});
  for (const auto& g : sph.generators()) {
    Element e = sph.gen(g.name);
    out.push_back({"rho-central:" + g.name, sph.multiply(rho, e) - sph.multiply(e, rho)});
  }
  out.push_back({"h*rho=xi^2", rho * Scalar::h() - sph.parse("xi^2")});
  return out;
}

LieReport lie_superalgebra_checks(const Presentation& p) {
  LieReport rep;
  const auto& gens = p.generators();
  auto br = [&](const Element& a, const Element& b) { return super_commutator(a, b, p); };
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b) {
      Element ea = Element::generator(int(a)), eb = Element::generator(int(b));
      Scalar sign = (gens[a].parity & gens[b].parity) ? Scalar(-1) : Scalar(1);
      rep.identities.push_back({"supersymmetry:" + gens[a].name + "," + gens[b].name, br(ea, eb) + br(eb, ea) * sign});
      for (std::size_t c = 0; c < gens.size(); ++c) {
        Element ec = Element::generator(int(c));
        Element j = br(ea, br(eb, ec)) - br(br(ea, eb), ec) - br(eb, br(ea, ec)) * sign;
        rep.identities.push_back({"jacobi:" + gens[a].name + "," + gens[b].name + "," + gens[c].name, j});
      }
      if (b < a) continue;
      Element outside, bracket = br(ea, eb);
      for (const auto& [w, c] : bracket.terms())
        if (w.size() != 1) outside.add(w, c);
      rep.closure.push_back({"closure:[" + gens[a].name + "," + gens[b].name + "]", outside});
    }
  return rep;
}

std::vector<std::vector<Element>> similarity_transformed_T() {
  MatrixRF g = contraction_g();
  MatrixRF gi{{1, 0, -kappa()}, {0, 1, 0}, {0, 0, 1}};
  std::vector<std::vector<Element>> out(3, std::vector<Element>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
          Scalar c = g(i, k) * gi(l, j);
          if (!c.is_zero()) out[i][j] += Element::generator(3 * int(k) + int(l)) * c;
        }
  return out;
}

PresentationPtr similarity_transform_group(const Presentation& group, const std::string& name) {
  static const char* const t_names[9] = {"a", "alpha", "b", "gamma", "e", "beta", "c", "delta", "d"};
  auto T = similarity_transformed_T();
  std::vector<int> to_group(9, -1);
  for (int k = 0; k < 9; ++k)
    if (auto idx = group.index_of(t_names[k])) to_group[std::size_t(k)] = *idx;
  std::vector<Element> images(group.size());
  for (int k = 0; k < 9; ++k) {
    if (to_group[std::size_t(k)] < 0) continue;
    Element img;
    for (const auto& [w, c] : T[std::size_t(k / 3)][std::size_t(k % 3)].terms()) {
      int target = to_group[(unsigned char)w[0]];
      if (target < 0) throw std::runtime_error(std::string("transformed ") + t_names[k] + " leaves the six generators");
      img.add(Word(1, char(target)), c);
    }
    images[std::size_t(to_group[std::size_t(k)])] = img;
  }
  std::vector<Element> subs;
  for (const Element& r : group.relations()) subs.push_back(free_substitute(r, images));
  return std::make_shared<Presentation>(name, group.generators(), limit_span(subs));
}

std::vector<CalculusCheck> compare_compact_form(const Presentation& printed_weyl, const MatrixRF& B) {
  std::vector<Element> derived = compact_derivative_relations(printed_weyl, B);
  std::vector<CalculusCheck> out;
  std::size_t base = derived.size() - 9;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::string label = "@" + std::string(coordinate_names[i]) + "*" + coordinate_names[j];
      Word lead{char(printed_weyl.require_index("@" + std::string(coordinate_names[i]))),
                char(printed_weyl.require_index(coordinate_names[j]))};
      const Element& d = derived[base + std::size_t(3 * i + j)];
      Element residue = d;
      for (const Element& r : printed_weyl.relations()) {
        Scalar c = r.coefficient(lead);
        if (c.is_zero()) continue;
        residue = r * c.inverse() - d;
        break;
      }
      out.push_back({label, residue});
    }
  return out;
}

std::vector<CalculusCheck> partial_projector_relations(const Presentation& weyl, const MatrixRF& P) {
  std::vector<CalculusCheck> out;
  std::vector<Element> D;
  for (const char* x : coordinate_names) D.push_back(weyl.gen("@" + std::string(x)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Element rel;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const Scalar& c = P(pair_index(l, k), pair_index(i, j));
          if (!c.is_zero()) rel += weyl.multiply(D[std::size_t(k)], D[std::size_t(l)]) * c;
        }
      out.push_back({"P(" + std::string(coordinate_names[i]) + "," + coordinate_names[j] + ")", weyl.normal_form(rel)});
    }
  return out;
}

OperatorDefs default_heisenberg_operators(const Presentation& w) {
  Scalar one_i = Scalar(1) + Scalar::i();
  return {{"x", w.gen("x") * one_i},
          {"xi", w.gen("xi")},
          {"eta", w.gen("eta") + w.gen("x") * Scalar::h()},
          {"pxi", w.gen("@xi")},
          {"px", w.gen("@x") * one_i},
          {"peta", w.gen("@eta") * Scalar(2)}};
}

std::vector<HeisenbergCheck> heisenberg_h_verify(const Presentation& w, const OperatorDefs& ops) {
  auto op = [&](const std::string& n) -> const Element& {
    auto it = ops.find(n);
    if (it == ops.end()) throw std::invalid_argument("undefined hatted symbol '" + n + "'");
    return it->second;
  };
  const Element &X = op("x"), &XI = op("xi"), &ETA = op("eta"), &PX = op("px"), &PXI = op("pxi"), &PETA = op("peta");
  Scalar h = Scalar::h(), i = Scalar::i(), two(2);
  Element one(Scalar(1));
  auto br = [&](const Element& a, const Element& b) { return super_commutator(a, b, w); };
  auto anti = [&](const Element& a, const Element& b) { return super_commutator(a, b, w, BracketKind::antibracket); };
  auto mul = [&](std::initializer_list<Element> f) { return hat_product(w, f); };

  // Second reading of the ambiguous term: the hat applied once more to eta-hat.
  Element eta_hat_hat = ETA + X * h;
  std::vector<HeisenbergCheck> out;
  auto check = [&](const std::string& label, const Element& lhs, const Element& rhs) {
    out.push_back({label, w.normal_form(lhs - rhs)});
  };
  check("[x,xi]", br(X, XI), mul({ETA, X}) * (two * h));
  check("[x,eta]", br(X, ETA), Element());
  check("[eta,xi]+", anti(ETA, XI), Element());
  check("xi^2", mul({XI, XI}), (mul({X, X}) * (i / two) - mul({XI, ETA}) * two) * (-h));
  check("eta^2", mul({ETA, ETA}), Element());
  check("[px,pxi]", br(PX, PXI), Element());
  check("[px,peta]", br(PX, PETA), mul({PXI, PX}) * (-two * h));
  check("[pxi,peta]+", anti(PXI, PETA), Element());
  check("pxi^2", mul({PXI, PXI}), Element());
  check("peta^2", mul({PETA, PETA}), (mul({PX, PX}) * (i / two) + mul({PETA, PXI})) * (-h));
  check("[px,x]", br(PX, X), (one + mul({ETA, PXI}) * (two * h)) * (two * i));
  check("[px,xi]", br(PX, XI), mul({X, PXI}) * (two * h));
  check("[px,eta]", br(PX, ETA), Element());
  check("[pxi,x]", br(PXI, X), Element());
  check("[pxi,xi]+", anti(PXI, XI), one + mul({ETA, PXI}) * (two * h));
  check("[pxi,eta]+", anti(PXI, ETA), Element());
  check("[peta,x]", br(PETA, X), Element());
  auto peta_xi = [&](const Element& sum) {
    return (mul({X, PX}) * (two * i) - mul({sum, PXI}) + mul({ETA, PETA - PXI})) * (h / two);
  };
  check("[peta,xi]+:reading-sum", anti(PETA, XI), peta_xi(XI + ETA));
  check("[peta,xi]+:reading-nested", anti(PETA, XI), peta_xi(XI + eta_hat_hat));
  check("[peta,eta]", br(PETA, ETA), one + mul({ETA, PXI}) * (two * h));
  return out;
}

}  // namespace qsw
