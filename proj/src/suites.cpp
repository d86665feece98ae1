#include "qsw/suites.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qsw/calculus.hpp"
#include "qsw/catalog.hpp"
#include "qsw/contraction.hpp"
#include "qsw/hopf.hpp"
#include "qsw/rmatrix.hpp"
#include "qsw/star.hpp"

namespace qsw {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::finding: return "finding";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"presentations", "hopf", "star", "rmatrix", "calculus", "contraction"};
  return names;
}

bool is_suite(const std::string& name) {
  if (name == "all") return true;
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

bool glob(const std::string& pattern, const std::string& text) { return fnmatch(pattern.c_str(), text.c_str(), 0) == 0; }

std::string strip_suite(const std::string& id) {
  auto dot = id.find('.');
  return dot == std::string::npos ? id : id.substr(dot + 1);
}

std::string literal_prefix(const std::string& pattern) {
  return pattern.substr(0, pattern.find_first_of("*?[\\"));
}

// Could some id below `prefix` match the glob?
bool may_match(const std::string& prefix, const std::string& pattern) {
  std::string lit = literal_prefix(pattern);
  auto compatible = [&](const std::string& p) {
    std::string dotted = p + ".";
    return dotted.rfind(lit, 0) == 0 || lit.rfind(dotted, 0) == 0 || lit == p;
  };
  return compatible(prefix) || compatible(strip_suite(prefix));
}

std::string one_line(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '\n') out += "; ";
    else out += c;
  }
  while (out.size() >= 2 && out.compare(out.size() - 2, 2, "; ") == 0) out.resize(out.size() - 2);
  return out;
}

std::string fmt(const Presentation& p, const Element& e) { return one_line(p.format(e)); }
std::string fmt(const TensorElement& t) { return one_line(t.format()); }

// Nonzero entry count and the first nonzero entry.
std::string matrix_residue(const MatrixRF& m) {
  std::size_t n = 0;
  std::string first;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) {
        if (n++ == 0) first = "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")=" + m(r, c).to_string();
      }
  if (n == 0) return "";
  return std::to_string(n) + " nonzero entries, first " + first;
}

Word leading_word(const Presentation& p, const Element& e) {
  Word best;
  bool have = false;
  for (const auto& [w, c] : e.terms())
    if (!have || p.word_less(best, w)) {
      best = w;
      have = true;
    }
  return best;
}

std::vector<std::string> relation_tags(const Presentation& p) {
  std::vector<std::string> tags;
  std::map<std::string, int> seen;
  for (const auto& r : p.relations()) {
    std::string t = p.format_word(leading_word(p, r));
    int n = seen[t]++;
    tags.push_back(n == 0 ? t : t + "#" + std::to_string(n + 1));
  }
  return tags;
}

// "...relation:<k>" -> "...relation:<leading word of relation k>".
std::string retag(const std::string& label, const Presentation& p) {
  auto pos = label.rfind("relation:");
  if (pos == std::string::npos) return label;
  std::string num = label.substr(pos + 9);
  if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit)) return label;
  auto tags = relation_tags(p);
  std::size_t k = std::stoul(num);
  if (k >= tags.size()) return label;
  return label.substr(0, pos + 9) + tags[k];
}

using Clock = std::chrono::steady_clock;

class Emitter {
public:
  Emitter(std::string prefix, const SuiteOptions& opt, std::vector<CheckResult>& out)
      : prefix_(std::move(prefix)), opt_(opt), out_(out), last_(Clock::now()) {}

  const std::string& prefix() const { return prefix_; }
  Emitter child(const std::string& rel) const { return Emitter(prefix_ + "." + rel, opt_, out_); }

  void emit(const std::string& rel, Status st, std::string lhs, std::string rhs, std::string residue) {
    auto now = Clock::now();
    CheckResult r;
    r.check_id = rel.empty() ? prefix_ : prefix_ + "." + rel;
    r.status = st;
    r.lhs = one_line(std::move(lhs));
    r.rhs = one_line(std::move(rhs));
    r.residue = one_line(std::move(residue));
    if ((st == Status::fail || st == Status::finding) && r.residue.empty()) r.residue = "mismatch";
    if (st == Status::pass) r.residue.clear();
    if (opt_.timing) r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
    last_ = now;
    if (matches_filters(r.check_id, opt_.filters)) out_.push_back(std::move(r));
  }

  // A statement taken from the source text: a mismatch is a finding.
  void claim(const std::string& rel, bool ok, std::string lhs, std::string rhs, std::string residue) {
    emit(rel, ok ? Status::pass : Status::finding, std::move(lhs), std::move(rhs), std::move(residue));
  }
  // A property the engine guarantees: a mismatch is a failure.
  void invariant(const std::string& rel, bool ok, std::string lhs, std::string rhs, std::string residue) {
    emit(rel, ok ? Status::pass : Status::fail, std::move(lhs), std::move(rhs), std::move(residue));
  }
  // Expected to break: passes when the residue is nonzero.
  void control(const std::string& rel, bool broke, std::string lhs) {
    if (broke) emit(rel, Status::pass, std::move(lhs), "nonzero", "");
    else emit(rel, Status::fail, std::move(lhs), "nonzero", "expected a nonzero residue, got 0");
  }
  void skip(const std::string& rel, std::string reason) { emit(rel, Status::skipped, "", "", std::move(reason)); }

  void claim_zero(const std::string& rel, const Presentation& p, const Element& residue) {
    claim(rel, residue.is_zero(), fmt(p, residue), "0", fmt(p, residue));
  }
  void invariant_zero(const std::string& rel, const Presentation& p, const Element& residue) {
    invariant(rel, residue.is_zero(), fmt(p, residue), "0", fmt(p, residue));
  }
  void claim_equal(const std::string& rel, const Presentation& p, const Element& got, const Element& expected) {
    Element d = got - expected;
    claim(rel, d.is_zero(), fmt(p, got), fmt(p, expected), fmt(p, d));
  }
  void invariant_equal(const std::string& rel, const Presentation& p, const Element& got, const Element& expected) {
    Element d = got - expected;
    invariant(rel, d.is_zero(), fmt(p, got), fmt(p, expected), fmt(p, d));
  }
  void claim_zero(const std::string& rel, const TensorElement& residue) {
    claim(rel, residue.is_zero(), fmt(residue), "0", fmt(residue));
  }
  void invariant_zero(const std::string& rel, const TensorElement& residue) {
    invariant(rel, residue.is_zero(), fmt(residue), "0", fmt(residue));
  }
  void claim_matrix(const std::string& rel, const MatrixRF& got, const MatrixRF& expected, const std::string& lhs,
                    const std::string& rhs) {
    claim(rel, got == expected, lhs, rhs, matrix_residue(got - expected));
  }
  void invariant_matrix(const std::string& rel, const MatrixRF& got, const MatrixRF& expected, const std::string& lhs,
                        const std::string& rhs) {
    invariant(rel, got == expected, lhs, rhs, matrix_residue(got - expected));
  }

private:
  std::string prefix_;
  const SuiteOptions& opt_;
  std::vector<CheckResult>& out_;
  Clock::time_point last_;
};

struct Ctx {
  Ctx(SuiteOptions o, Catalog c) : opt(std::move(o)), cat(std::move(c)) {}
  SuiteOptions opt;
  Catalog cat;

  PresentationPtr p(const std::string& name) const { return cat.presentation(name); }
  std::size_t depth(std::size_t preferred) const {
    return opt.degree_cap ? std::min(preferred, *opt.degree_cap) : preferred;
  }

  const MatrixRF& B() {
    if (!B_) B_ = build_B(*p("gamma-plus"));
    return *B_;
  }
  const Projectors& spectral() {
    if (!P_) P_ = spectral_projectors(B());
    return *P_;
  }
  const Calculus& calculus() {
    if (!calc_) calc_ = make_calculus(p("spq12"), p("gamma-plus"));
    return *calc_;
  }

private:
  std::optional<MatrixRF> B_;
  std::optional<Projectors> P_;
  std::optional<Calculus> calc_;
};

struct Task {
  std::string prefix;
  std::function<void(Emitter&, Ctx&)> run;
};

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + v[k];
  return out;
}

MatrixRF stack(const MatrixRF& a, const MatrixRF& b) {
  MatrixRF m(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, c) = b(r, c);
  return m;
}

bool row_span_contained(const MatrixRF& a, const MatrixRF& in) { return rank(stack(a, in)) == rank(in); }

std::vector<int> coordinate_order(const Presentation& p, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& n : names) out.push_back(p.require_index(n));
  return out;
}

std::string text_diff(const std::string& a, const std::string& b) {
  std::istringstream ia(a), ib(b);
  std::set<std::string> la, lb;
  for (std::string l; std::getline(ia, l);) la.insert(l);
  for (std::string l; std::getline(ib, l);) lb.insert(l);
  std::vector<std::string> out;
  for (const auto& l : la)
    if (!lb.count(l)) out.push_back("-" + l);
  for (const auto& l : lb)
    if (!la.count(l)) out.push_back("+" + l);
  return join(out, " ");
}

void compare_presentations(Emitter& em, const std::string& rel, const Presentation& got, const Presentation& bundled,
                           bool is_claim) {
  std::string a = presentation_to_text(got), b = presentation_to_text(bundled);
  std::string lhs = got.name() + " (" + std::to_string(got.rules().size()) + " rules)";
  std::string rhs = bundled.name() + " (" + std::to_string(bundled.rules().size()) + " rules)";
  if (is_claim) em.claim(rel, a == b, lhs, rhs, text_diff(b, a));
  else em.invariant(rel, a == b, lhs, rhs, text_diff(b, a));
}

// h = 0 specialization of every relation lies in the span of the
// supercommutativity relations (and, with partials, the classical Weyl ones).
void h_zero_checks(Emitter& em, const Presentation& p, bool weyl) {
  ElementSpan span;
  const auto& g = p.generators();
  auto is_partial = [&](std::size_t k) { return g[k].name.rfind("@", 0) == 0; };
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) {
      Element ea = Element::generator(int(a)), eb = Element::generator(int(b));
      Scalar sign = (g[a].parity && g[b].parity) ? Scalar(-1) : Scalar(1);
      Element rel = concat(ea, eb) - concat(eb, ea) * sign;
      if (weyl && is_partial(a) && !is_partial(b) && g[a].name == "@" + g[b].name) rel -= Element(Scalar(1));
      if (weyl && is_partial(b) && !is_partial(a) && g[b].name == "@" + g[a].name) rel += Element(sign);
      if (!rel.is_zero()) span.insert(rel);
    }
  ScalarMap at_zero(Scalar::i(), Scalar::s(), Scalar(0));
  auto tags = relation_tags(p);
  for (std::size_t k = 0; k < p.relations().size(); ++k) {
    Element r0 = p.relations()[k].map_coefficients([&](const Scalar& c) { return at_zero(c); });
    bool ok = r0.is_zero() || span.contains(r0);
    em.claim("relation:" + tags[k], ok, fmt(p, r0), weyl ? "classical Weyl relations" : "supercommutativity relations",
             ok ? "" : fmt(p, r0) + " outside the span");
  }
}

// ---------------------------------------------------------------- presentations

void certificate(Emitter& em, Ctx& ctx, const std::string& name, bool is_claim) {
  auto p = ctx.p(name);
  std::size_t n = ctx.depth(p->size() <= 3 ? 6 : 4);
  auto oracle = hilbert_dims_oracle(*p, n);
  for (std::size_t k = 0; k <= n; ++k) {
    std::size_t pbw = enumerate_pbw(*p, k).size();
    long diff = long(oracle[k]) - long(pbw);
    std::string rel = "hilbert.degree-" + std::to_string(k);
    std::string lhs = "oracle " + std::to_string(oracle[k]), rhs = "pbw " + std::to_string(pbw);
    std::string res = "oracle - pbw = " + std::to_string(diff);
    if (is_claim) em.claim(rel, diff == 0, lhs, rhs, res);
    else em.invariant(rel, diff == 0, lhs, rhs, res);
  }
  auto ov = check_overlaps(*p);
  std::vector<std::string> words;
  for (const auto& o : ov) {
    std::string w = p->format_word(o.word) + " -> ";
    std::vector<std::string> nfs;
    for (const auto& e : o.normal_forms) nfs.push_back(fmt(*p, e));
    words.push_back(w + join(nfs, " | "));
  }
  std::string lhs = std::to_string(ov.size()) + " ambiguous overlaps";
  if (is_claim) em.claim("overlaps", ov.empty(), lhs, "none", join(words, "; "));
  else em.invariant("overlaps", ov.empty(), lhs, "none", join(words, "; "));
}

void reduction_examples(Emitter& em, Ctx& ctx) {
  struct Ex {
    const char* presentation;
    const char* id;
    const char* lhs;
    const char* rhs;
  };
  const Ex exs[] = {
      {"spq12", "spq12.x*xi", "x*xi", "q*xi*x"},
      {"spq12", "spq12.eta*xi", "eta*xi", "-q^2*xi*eta + s*(1 - q)*x^2"},
      {"spq12", "spq12.xi^2", "xi^2", "0"},
      {"spq12", "spq12.eta^2", "eta^2", "0"},
      {"spq12", "spq12.(xi*eta)^2", "xi*eta*xi*eta", "s*(1 - q)*xi*x^2*eta"},
      {"spq12", "spq12.unit", "1*x", "x"},
      {"ospq12", "ospq12.alpha*delta", "alpha*delta", "-q*delta*alpha + 1/s*(q - 1/q)*b*c"},
      {"sph12", "sph12.[x,xi]", "x*xi - xi*x", "2*h*eta*x"},
      {"sph12", "sph12.[x,eta]", "x*eta - eta*x", "0"},
      {"sph12", "sph12.xi^2", "xi^2", "h*(x^2 + 2*xi*eta)"},
      {"sph12", "sph12.eta^2", "eta^2", "0"},
      {"lambda-h", "lambda-h.theta^2", "theta^2", "h*z^2"},
      {"lambda-h", "lambda-h.y*z", "y*z", "z*y + 2*h*z^2"},
  };
  for (const auto& ex : exs) {
    auto p = ctx.p(ex.presentation);
    em.claim_equal(ex.id, *p, p->parse(ex.lhs), p->parse(ex.rhs));
  }
  // Both single-step starts of eta*xi*xi reach 0.
  auto sp = ctx.p("spq12");
  Word w = {char(sp->require_index("eta")), char(sp->require_index("xi")), char(sp->require_index("xi"))};
  for (std::size_t pos : {std::size_t(0), std::size_t(1)}) {
    auto step = sp->rewrite_at(w, pos);
    Element nf = step ? sp->normal_form(*step) : Element();
    em.invariant_equal("spq12.eta*xi*xi.first-step-at-" + std::to_string(pos), *sp, nf, Element());
  }
  em.invariant_equal("spq12.bracket.[x,x]", *sp, super_commutator(sp->gen("x"), sp->gen("x"), *sp), Element());
}

void pbw_examples(Emitter& em, Ctx& ctx) {
  auto sp = ctx.p("spq12");
  const std::pair<std::size_t, std::size_t> counts[] = {{0, 1}, {1, 3}, {2, 4}};
  for (auto [deg, n] : counts) {
    std::size_t got = enumerate_pbw(*sp, deg).size();
    em.invariant("spq12.degree-" + std::to_string(deg), got == n, std::to_string(got), std::to_string(n),
                 std::to_string(got) + " words");
  }
  std::size_t o2 = hilbert_dim_oracle(*sp, 2);
  em.invariant("spq12.oracle-degree-2", o2 == 4, std::to_string(o2), "4", std::to_string(o2));
}

void representations(Emitter& em, Ctx& ctx) {
  auto sp = ctx.p("spq12");
  Scalar q = Scalar::q(), s = Scalar::s();
  auto run = [&](const std::string& tag, std::size_t n) {
    std::vector<MatrixRF> images(sp->size(), MatrixRF(n, n));
    MatrixRF& xi = images[std::size_t(sp->require_index("xi"))];
    MatrixRF& x = images[std::size_t(sp->require_index("x"))];
    MatrixRF& eta = images[std::size_t(sp->require_index("eta"))];
    xi(0, n - 1) = s;
    x(0, 0) = q;
    x(n - 1, n - 1) = Scalar(1);
    eta(n - 1, 0) = Scalar(1) - q;
    auto tags = relation_tags(*sp);
    for (std::size_t k = 0; k < sp->relations().size(); ++k) {
      MatrixRF v = evaluate_in_matrices(sp->relations()[k], images);
      em.claim(tag + ".relation:" + tags[k], v.is_zero(), fmt(*sp, sp->relations()[k]), "0", matrix_residue(v));
    }
  };
  run("2x2", 2);
  run("3x3", 3);
}

void symmetry(Emitter& em, Ctx& ctx, const std::string& name, const std::vector<std::pair<std::string, std::string>>& swap,
              const std::map<std::string, Scalar>& factor) {
  auto p = ctx.p(name);
  Morphism m;
  m.domain = p;
  m.codomain = p;
  m.scalars = ScalarMap(Scalar::i(), Scalar::s().inverse(), Scalar::h());
  for (const auto& g : p->generators()) {
    std::string target = g.name;
    for (const auto& [a, b] : swap) {
      if (g.name == a) target = b;
      else if (g.name == b) target = a;
    }
    Scalar c = factor.count(g.name) ? factor.at(g.name) : Scalar(1);
    m.images.push_back(p->gen(target) * c);
  }
  auto tags = relation_tags(*p);
  for (const auto& rc : verify_morphism(m)) em.claim_zero("relation:" + tags[rc.index], *p, rc.residue);
}

void overlap_control(Emitter& em, Ctx& ctx) {
  auto sp = ctx.p("spq12");
  int x = sp->require_index("x"), xi = sp->require_index("xi");
  Word xxi = {char(x), char(xi)};
  std::vector<Element> rels;
  for (const auto& r : sp->relations()) {
    if (!r.coefficient(xxi).is_zero())
      rels.push_back(Element::word(xxi) - Element::word(Word{char(xi), char(x)}, Scalar::q() * Scalar::q()));
    else rels.push_back(r);
  }
  Presentation bad("spq12-rescaled", sp->generators(), rels);
  auto ov = check_overlaps(bad);
  std::vector<std::string> words;
  for (const auto& o : ov) words.push_back(bad.format_word(o.word));
  em.control("rescaled-x*xi", !ov.empty(), join(words, ", "));
}

std::vector<Task> presentation_tasks() {
  std::vector<Task> t;
  const std::pair<const char*, bool> certs[] = {
      {"spq12", true},  {"lambda-q", true}, {"ospq12", true},         {"weyl-q", true},     {"sph12", true},
      {"lambda-h", true}, {"gamma-plus", true}, {"weyl-q-derived", false}, {"weyl-h", false}, {"gamma-minus", false}};
  for (auto [name, is_claim] : certs) {
    std::string n = name;
    bool c = is_claim;
    t.push_back({"presentations." + n, [n, c](Emitter& em, Ctx& ctx) { certificate(em, ctx, n, c); }});
  }
  t.push_back({"presentations.reduce", reduction_examples});
  t.push_back({"presentations.pbw", pbw_examples});
  t.push_back({"presentations.representation", representations});
  t.push_back({"presentations.symmetry.spq12", [](Emitter& em, Ctx& ctx) {
                 symmetry(em, ctx, "spq12", {{"xi", "eta"}}, {{"x", Scalar::i()}});
               }});
  t.push_back({"presentations.symmetry.lambda-q", [](Emitter& em, Ctx& ctx) {
                 symmetry(em, ctx, "lambda-q", {{"y", "z"}}, {{"theta", Scalar::i()}});
               }});
  t.push_back({"presentations.symmetry.ospq12", [](Emitter& em, Ctx& ctx) {
                 symmetry(em, ctx, "ospq12", {{"a", "d"}, {"b", "c"}, {"alpha", "delta"}}, {});
               }});
  t.push_back({"presentations.control", overlap_control});
  return t;
}

// ---------------------------------------------------------------- hopf

void hopf_axioms(Emitter& em, Ctx& ctx) {
  auto ft = ctx.p("free-t"), sp = ctx.p("spq12");
  for (const auto& c : coproduct_axioms(ft)) em.invariant_zero("coproduct." + c.label, c.residue);
  for (const auto& c : coaction_axioms(sp, ft, Side::left)) em.invariant_zero("coaction-left." + c.label, c.residue);
  for (const auto& c : coaction_axioms(sp, ft, Side::right)) em.invariant_zero("coaction-right." + c.label, c.residue);
}

void hopf_examples(Emitter& em, Ctx& ctx) {
  auto ft = ctx.p("free-t"), sp = ctx.p("spq12");
  auto delta = coaction(sp, ft, Side::left);
  TensorElement expected = TensorElement::pure({ft, sp}, {ft->gen("a"), sp->gen("xi")}) +
                           TensorElement::pure({ft, sp}, {ft->gen("alpha"), sp->gen("x")}) +
                           TensorElement::pure({ft, sp}, {ft->gen("b"), sp->gen("eta")});
  em.claim_zero("left-coaction-of-xi", extend_comap(delta, sp->gen("xi")) - expected);
  em.invariant_zero("left-coaction-of-1",
                    extend_comap(delta, Element(Scalar(1))) - TensorElement::unit({ft, sp}));
  auto pure = [&](const char* a, const char* b) { return TensorElement::pure({sp, sp}, {sp->gen(a), sp->gen(b)}); };
  auto one = Element(Scalar(1));
  auto left_one = [&](const char* b) { return TensorElement::pure({sp, sp}, {one, sp->gen(b)}); };
  auto right_one = [&](const char* a) { return TensorElement::pure({sp, sp}, {sp->gen(a), one}); };
  em.invariant_zero("tensor.(1*x)(x*1)", tensor_multiply(left_one("x"), right_one("x")) - pure("x", "x"));
  em.claim_zero("tensor.(1*xi)(eta*1)", tensor_multiply(left_one("xi"), right_one("eta")) + pure("eta", "xi"));
  em.invariant_zero("tensor.(1*xi)(x*1)", tensor_multiply(left_one("xi"), right_one("x")) - pure("x", "xi"));

  auto gr = ctx.p("ospq12");
  auto into = group_into_free(gr, ft);
  auto eps = counit(ft);
  auto tags = relation_tags(*gr);
  for (std::size_t k = 0; k < gr->relations().size(); ++k) {
    TensorElement v = extend_comap(eps, apply_morphism(into, gr->relations()[k]));
    em.claim_zero("counit-of-relation:" + tags[k], v);
  }
}

void hopf_covariance(Emitter& em, Ctx& ctx) {
  auto ft = ctx.p("free-t"), sp = ctx.p("spq12"), gr = ctx.p("ospq12");
  auto left = derive_covariance_relations(sp, ft, Side::left);
  auto right = derive_covariance_relations(sp, ft, Side::right);
  em.invariant("left-nonempty", !left.empty(), std::to_string(left.size()) + " relations", "nonempty", "empty");
  em.invariant("right-nonempty", !right.empty(), std::to_string(right.size()) + " relations", "nonempty", "empty");
  ElementSpan span;
  for (const auto& e : left) span.insert(e);
  for (const auto& e : right) span.insert(e);
  em.emit("span-rank", Status::pass, std::to_string(span.rank()), "of 81 quadratic words", "");

  auto into = group_into_free(gr, ft);
  auto tags = relation_tags(*gr);
  for (std::size_t k = 0; k < gr->relations().size(); ++k) {
    Element img = apply_morphism(into, gr->relations()[k]);
    bool in = span.contains(img);
    em.claim("member:" + tags[k], in, fmt(*ft, img), "in covariance span", in ? "" : "not in the span");
  }
  Element ctrl = ft->parse("a*b - b*a");
  em.control("control.a*b-b*a", !span.contains(ctrl), fmt(*ft, ctrl));

  // Same span when the superspace relations are processed in reverse.
  std::vector<Element> rev(sp->relations().rbegin(), sp->relations().rend());
  auto sp_rev = std::make_shared<const Presentation>(sp->name(), sp->generators(), rev);
  ElementSpan span_rev;
  bool same = true;
  for (auto side : {Side::left, Side::right})
    for (const auto& e : derive_covariance_relations(sp_rev, ft, side)) {
      span_rev.insert(e);
      same = same && span.contains(e);
    }
  same = same && span_rev.rank() == span.rank();
  em.invariant("order-independent", same, std::to_string(span_rev.rank()), std::to_string(span.rank()),
               "spans differ");

  auto cl = classical_group(false);
  auto sub = classical_substitution(ft, cl);
  for (auto [side, list] : {std::pair{"left", &left}, std::pair{"right", &right}}) {
    std::vector<std::string> bad;
    for (std::size_t k = 0; k < list->size(); ++k) {
      Element v = apply_morphism(sub, (*list)[k]);
      if (!v.is_zero()) bad.push_back(std::to_string(k) + ": " + fmt(*cl, v));
    }
    em.claim(std::string("classical.") + side, bad.empty(), std::to_string(list->size()) + " relations at q=1",
             "all reduce to 0", join(bad, "; "));
  }
}

void hopf_central(Emitter& em, Ctx& ctx) {
  auto sp = ctx.p("spq12"), gr = ctx.p("ospq12");
  Element r = supersphere(*sp);
  for (const auto& c : central_residues(*sp, r)) em.claim_zero("supersphere.[r," + c.label + "]", *sp, c.residue);
  {
    std::vector<std::string> bad;
    for (const auto& c : central_residues(*sp, sp->gen("x")))
      if (!c.ok()) bad.push_back("[x," + c.label + "] = " + fmt(*sp, c.residue));
    em.control("control.x-not-central", !bad.empty(), join(bad, "; "));
  }
  auto D = superdeterminant(*gr);
  em.claim_zero("superdeterminant.two-expressions", *gr, gr->normal_form(D[0] - D[1]));
  for (const auto& c : central_residues(*gr, D[0]))
    em.claim_zero("superdeterminant.[D," + c.label + "]", *gr, c.residue);

  auto cl = classical_group(false);
  Morphism m;
  m.domain = gr;
  m.codomain = cl;
  m.scalars = ScalarMap(Scalar::i(), Scalar(1), Scalar::h());
  for (const auto& g : gr->generators()) m.images.push_back(cl->gen(g.name));
  em.claim_equal("superdeterminant.classical", *cl, apply_morphism(m, D[0]), cl->parse("a*d - b*c - alpha*delta"));

  auto ft = ctx.p("free-t");
  auto unimodular = classical_group(true);
  em.claim_zero("coinvariance.left.r", classical_coinvariance_residue(sp, ft, unimodular, r, Side::left));
  em.claim_zero("coinvariance.right.r", classical_coinvariance_residue(sp, ft, unimodular, r, Side::right));
  TensorElement x2 = classical_coinvariance_residue(sp, ft, unimodular, sp->parse("x^2"), Side::left);
  em.control("coinvariance.control.x^2", !x2.is_zero(), fmt(x2));
}

void hopf_inverse(Emitter& em, Ctx&) {
  auto cu = classical_group(true), cl = classical_group(false);
  for (const auto& c : classical_inverse_checks(*cl)) em.claim_zero("free-D." + c.label, *cl, c.residue);
  for (const auto& c : classical_inverse_checks(*cu)) em.claim_zero("unimodular." + c.label, *cu, c.residue);
}

std::vector<Task> hopf_tasks() {
  return {{"hopf.axioms", hopf_axioms},
          {"hopf.examples", hopf_examples},
          {"hopf.covariance", hopf_covariance},
          {"hopf.central", hopf_central},
          {"hopf.classical-inverse", hopf_inverse}};
}

// ---------------------------------------------------------------- star

void star_conjugations(Emitter& em, Ctx&) {
  const std::pair<const char*, ConjugationSpec> specs[] = {{"real-q", ConjugationSpec::real_q()},
                                                           {"unimodular-q", ConjugationSpec::unimodular_q()},
                                                           {"unimodular-q-imaginary-h",
                                                            ConjugationSpec::unimodular_q_imaginary_h()}};
  Scalar probe = (Scalar::i() + Scalar::s() * Scalar::h() + Scalar(2)) / (Scalar::s() - Scalar::h());
  for (const auto& [name, spec] : specs) {
    Scalar twice = conjugate(conjugate(probe, spec), spec);
    em.invariant(std::string(name) + ".involution", twice == probe, twice.to_string(), probe.to_string(),
                 (twice - probe).to_string());
    Scalar ci = conjugate(Scalar::i(), spec);
    em.invariant(std::string(name) + ".i", ci == -Scalar::i(), ci.to_string(), "-i", (ci + Scalar::i()).to_string());
  }
}

void star_structures(Emitter& em, Ctx& ctx) {
  for (const auto& [name, st] : ctx.cat.stars())
    for (const auto& c : verify_star_algebra(st)) em.claim_zero(name + "." + retag(c.label, *st.presentation), *st.presentation, c.residue);
  // The unit-circle star on the Weyl algebra built from the matrix form.
  StarStructure st = ctx.cat.star("weyl-q-unit");
  st.presentation = ctx.p("weyl-q-derived");
  for (const auto& c : verify_star_algebra(st))
    em.claim_zero("weyl-q-unit.on-weyl-q-derived." + retag(c.label, *st.presentation), *st.presentation, c.residue);
}

void star_examples(Emitter& em, Ctx& ctx) {
  const auto& real = ctx.cat.star("spq12-real");
  const auto& sp = *real.presentation;
  em.claim_equal("spq12-real.xi*", sp, apply_star(real, sp.gen("xi")), sp.parse("s*eta"));
  em.claim_equal("spq12-real.(xi*eta)*", sp, apply_star(real, sp.parse("xi*eta")), sp.parse("xi*eta"));
  const auto& unit = ctx.cat.star("weyl-q-unit");
  const auto& w = *unit.presentation;
  em.claim_equal("weyl-q-unit.x*", w, apply_star(unit, w.gen("x")), w.parse("i*x"));

  const auto& u = ctx.cat.star("uosp");
  const auto& g = *u.presentation;
  em.claim_equal("uosp.double-star.alpha", g, apply_star(u, apply_star(u, g.gen("alpha"))), -g.gen("alpha"));
  em.claim_equal("uosp.double-star.b", g, apply_star(u, apply_star(u, g.gen("b"))), g.gen("b"));
  const auto& uf = ctx.cat.star("uosp-free");
  const auto& f = *uf.presentation;
  em.invariant_equal("uosp-free.double-star.e", f, apply_star(uf, apply_star(uf, f.gen("e"))), f.gen("e"));
}

void star_unitary(Emitter& em, Ctx& ctx) {
  const auto& dict = ctx.cat.star("uosp");
  const auto& g = *dict.presentation;
  const std::pair<const char*, const char*> rels[] = {
      {"a*b", "a*b - q^2*b*a"},
      {"a*alpha", "a*alpha - q*alpha*a"},
      {"b*alpha", "b*alpha - 1/q*alpha*b"},
      {"a*b^*", "a*b^* - q^2*b^* * a"},
      {"b*b^*", "b*b^* - b^* * b"},
      {"b*alpha^*", "b*alpha^* - q*alpha^* * b"},
      {"a*alpha^*", "a*alpha^* - q*alpha^* * a - s*(1/q - q)*b^* * alpha"},
      {"alpha*alpha^*", "alpha*alpha^* + q*alpha^* * alpha - (1/q - q)*b^* * b"},
      {"a*a^*", "a*a^* - a^* * a - (1/q - q)*((1 + 1/q)*b^* * b + alpha^* * alpha)"},
      {"alpha^2", "alpha^2 - 1/s*(q - 1)*b*a"},
      {"alpha^*^2", "(alpha^*)^2 - 1/s*(1 - q)*a^* * b^*"},
  };
  for (const auto& [id, text] : rels) em.claim_zero(std::string("relation:") + id, g, translate_starred(dict, text));

  auto uq = ctx.p("uosp-q");
  auto osc = q_oscillator(*uq);
  em.claim_equal("q-oscillator.identity", *uq, osc.value, uq->parse("(1 - q^2)*(1 + b^* * b)"));
  Element at_one = osc.value.map_coefficients([](const Scalar& c) { return limit_s_to_1(c); });
  em.invariant_zero("q-oscillator.q-to-1", *uq, at_one);
  em.claim_equal("q-oscillator.rescaled", *uq, osc.rescaled, uq->parse("1 + (1 - q^2)*b^* * b"));
}

void star_hopf(Emitter& em, Ctx& ctx) {
  const auto& fs = ctx.cat.star("uosp-free");
  const auto& f = *fs.presentation;
  for (const auto& c : star_coproduct_checks(fs)) em.claim_zero("coproduct:" + c.label, c.residue);
  for (const auto& c : star_counit_checks(fs)) em.claim_zero("counit:" + c.label, f, c.residue);
  for (const auto& c : double_antipode_checks(fs)) em.claim_zero("double-antipode:" + c.label, f, c.residue);
}

void star_comodule(Emitter& em, Ctx& ctx) {
  auto ft = ctx.p("free-t"), sp = ctx.p("spq12");
  const auto& fs = ctx.cat.star("uosp-free");
  const auto& ss = ctx.cat.star("spq12-real");
  for (const auto& c : star_comodule_checks(coaction(sp, ft, Side::left), {&fs, &ss}, ss))
    em.claim_zero("left:" + c.label, c.residue);
  for (const auto& c : star_comodule_checks(supertransposed_right_coaction(sp, ft), {&ss, &fs}, ss))
    em.claim_zero("right-supertransposed:" + c.label, c.residue);
  std::vector<std::string> broken;
  for (const auto& c : star_comodule_checks(coaction(sp, ft, Side::right), {&ss, &fs}, ss))
    if (!c.ok()) broken.push_back(c.label);
  // The plain right coaction is asserted not to be star compatible.
  em.claim("right-plain.not-compatible", !broken.empty(),
           broken.empty() ? "compatible on every coordinate" : "incompatible on " + join(broken, ", "),
           "incompatible", "plain right coaction is star compatible");
}

void star_hermitian(Emitter& em, Ctx& ctx) {
  {
    StarStructure st = ctx.cat.star("weyl-q-unit");
    st.presentation = ctx.p("weyl-q-derived");
    const auto& w = *st.presentation;
    const std::pair<const char*, const char*> ops[] = {{"x", "(1 + i)*x"},         {"xi", "xi"},
                                                       {"eta", "eta"},             {"pxi", "@xi"},
                                                       {"px", "(1/q + i)*@x"},     {"peta", "(1 + 1/q^2)*@eta"}};
    for (const auto& [n, text] : ops) em.claim_zero(std::string("q.") + n, w, hermiticity_residue(st, w.parse(text)));
  }
  {
    const auto& st = ctx.cat.star("weyl-h-unit");
    const auto& w = *st.presentation;
    for (const auto& [n, e] : default_heisenberg_operators(w)) em.claim_zero("h." + n, w, hermiticity_residue(st, e));
  }
}

std::vector<Task> star_tasks() {
  return {{"star.conjugation", star_conjugations}, {"star.structure", star_structures},
          {"star.examples", star_examples},         {"star.unitary", star_unitary},
          {"star.hopf", star_hopf},                 {"star.comodule", star_comodule},
          {"star.hermitian", star_hermitian}};
}

// ---------------------------------------------------------------- rmatrix

void rmatrix_entries(Emitter& em, Ctx& ctx) {
  auto forms = ctx.p("gamma-plus");
  const MatrixRF& B = ctx.B();
  for (const auto& c : compare_B_entries(B))
    em.claim(c.label, c.match(), c.actual.to_string(), c.expected.to_string(), (c.actual - c.expected).to_string());
  auto score = [](const MatrixRF& m) {
    std::size_t ok = 0, n = 0;
    for (const auto& c : compare_B_entries(m)) {
      ++n;
      if (c.match()) ++ok;
    }
    return std::pair{ok, n};
  };
  auto [c_ok, c_n] = score(B);
  auto [d_ok, d_n] = score(build_B(*forms, SignSource::differential));
  std::string lhs = "sign from coordinate: " + std::to_string(c_ok) + "/" + std::to_string(c_n);
  std::string rhs = "sign from differential: " + std::to_string(d_ok) + "/" + std::to_string(d_n);
  em.claim("sign-fit", c_ok == c_n || d_ok == d_n, lhs, rhs, "neither sign source reproduces every listed entry");
}

void rmatrix_polynomial(Emitter& em, Ctx& ctx) {
  const MatrixRF& B = ctx.B();
  Scalar q = Scalar::q();
  MatrixRF I = MatrixRF::identity(9);
  MatrixRF f1 = B + I, f2 = B - I.scaled(q * q), f3 = B - I.scaled(q * q * q);
  MatrixRF cubic = f1 * f2 * f3;
  em.claim("cubic", cubic.is_zero(), "(B+1)(B-q^2)(B-q^3)", "0", matrix_residue(cubic));
  const std::pair<const char*, MatrixRF> pairs[] = {
      {"(B+1)(B-q^2)", f1 * f2}, {"(B+1)(B-q^3)", f1 * f3}, {"(B-q^2)(B-q^3)", f2 * f3}};
  for (const auto& [name, m] : pairs)
    em.invariant(std::string("not-annihilating.") + name, !m.is_zero(), name, "nonzero", "annihilates B");
  MatrixRF B1 = B.map([](const Scalar& c) { return limit_s_to_1(c); });
  MatrixRF g1 = B1 + I, g2 = B1 - I;
  bool quadratic = (g1 * g2).is_zero();
  em.invariant("q-to-1", (g1 * g2 * g2).is_zero(),
               quadratic ? "(B+1)(B-1) = 0" : "(B+1)(B-1)^2 = 0, (B+1)(B-1) != 0", "(B+1)(B-1)^2 = 0",
               matrix_residue(g1 * g2 * g2));
}

void projector_identities(Emitter& em, const std::string& tag, const Projectors& P, bool is_claim) {
  MatrixRF I = MatrixRF::identity(9);
  const std::pair<const char*, const MatrixRF*> ps[] = {{"minus", &P.minus}, {"plus", &P.plus}, {"zero", &P.zero}};
  auto check = [&](const std::string& id, const MatrixRF& got, const MatrixRF& want, const std::string& lhs,
                   const std::string& rhs) {
    if (is_claim) em.claim_matrix(tag + "." + id, got, want, lhs, rhs);
    else em.invariant_matrix(tag + "." + id, got, want, lhs, rhs);
  };
  check("sum", P.minus + P.plus + P.zero, I, "P- + P+ + P0", "I");
  MatrixRF zero(9, 9);
  for (const auto& [a, pa] : ps)
    for (const auto& [b, pb] : ps) {
      std::string name = std::string(a) + "*" + b;
      check(name, (*pa) * (*pb), a == b ? *pb : zero, name, a == b ? std::string(b) : "0");
    }
}

void rmatrix_projectors(Emitter& em, Ctx& ctx) {
  const MatrixRF& B = ctx.B();
  const Projectors& S = ctx.spectral();
  Projectors printed = printed_projectors(B);
  projector_identities(em, "printed", printed, true);
  projector_identities(em, "spectral", S, false);
  Scalar q = Scalar::q();
  em.invariant_matrix("spectral.eigen-minus", B * S.minus, S.minus.scaled(Scalar(-1)), "B P-", "-P-");
  em.invariant_matrix("spectral.eigen-plus", B * S.plus, S.plus.scaled(q * q), "B P+", "q^2 P+");
  em.invariant_matrix("spectral.eigen-zero", B * S.zero, S.zero.scaled(q * q * q), "B P0", "q^3 P0");
  std::size_t rm = rank(S.minus), rp = rank(S.plus), r0 = rank(S.zero);
  em.invariant("spectral.ranks", rm + rp + r0 == 9,
               std::to_string(rm) + " + " + std::to_string(rp) + " + " + std::to_string(r0), "9",
               "ranks sum to " + std::to_string(rm + rp + r0));
  em.claim_matrix("printed-equals-spectral.minus", printed.minus, S.minus, "printed P-", "interpolant P-");
  em.claim_matrix("printed-equals-spectral.plus", printed.plus, S.plus, "printed P+", "interpolant P+");
  em.claim_matrix("printed-equals-spectral.zero", printed.zero, S.zero, "printed P0", "interpolant P0");
}

void rmatrix_relations(Emitter& em, Ctx& ctx) {
  const MatrixRF& B = ctx.B();
  const Projectors& S = ctx.spectral();
  auto sp = ctx.p("spq12");
  MatrixRF rows = quadratic_relation_rows(sp->relations(), coordinate_order(*sp, {"xi", "x", "eta"}));
  MatrixRF K = kernel(B + MatrixRF::identity(9));
  std::size_t r = rank(S.minus);
  em.invariant("rank-minus", r == 5, std::to_string(r), "5", "rank " + std::to_string(r));
  bool im_ker = same_column_span(S.minus, K);
  em.claim("image-minus-equals-kernel", im_ker, "im P-", "ker(B+1)", "column spaces differ");
  bool im_rel = same_column_span(S.minus, rows.transpose());
  em.claim("image-minus-equals-relation-span", im_rel, "im P-", "coordinate relation vectors",
           "column space of P- differs from the relation span (rank " + std::to_string(rank(rows)) + ")");
  bool row_rel = same_row_span(S.minus, rows);
  em.claim("rows-minus-equal-relation-span", row_rel, "rows of P-", "coordinate relation vectors", "row spaces differ");

  auto forms = ctx.p("gamma-plus");
  std::vector<Element> dd;
  for (const auto& rel : forms->relations()) {
    bool only_forms = true;
    for (const auto& [w, c] : rel.terms())
      for (char g : w)
        if (forms->generators()[std::size_t((unsigned char)g)].name.rfind("d(", 0) != 0) only_forms = false;
    if (only_forms) dd.push_back(rel);
  }
  MatrixRF drows = quadratic_relation_rows(dd, coordinate_order(*forms, {"d(xi)", "d(x)", "d(eta)"}));
  // (-1)^{p(dX_i)} on column (i,j): d(x) is the odd differential.
  MatrixRF sign = MatrixRF::identity(9);
  for (int j = 0; j < 3; ++j) sign(pair_index(1, j), pair_index(1, j)) = Scalar(-1);
  MatrixRF plus = S.plus * sign, plus_zero = (S.plus + S.zero) * sign;
  std::string rd = std::to_string(rank(drows)), rp = std::to_string(rank(plus)), rpz = std::to_string(rank(plus_zero));
  em.claim("forms.plus-rows-in-form-relations", row_span_contained(plus, drows), "rows of P+ (rank " + rp + ")",
           "differential relation span (rank " + rd + ")", "not contained");
  em.claim("forms.plus-rows-equal-form-relations", same_row_span(plus, drows), "rows of P+ (rank " + rp + ")",
           "differential relation span (rank " + rd + ")", "rank " + rp + " against " + rd);
  em.claim("forms.plus-zero-rows-equal-form-relations", same_row_span(plus_zero, drows),
           "rows of P+ + P0 (rank " + rpz + ")", "differential relation span (rank " + rd + ")", "row spaces differ");
}

void rmatrix_solve(Emitter& em, Ctx& ctx) {
  MatrixRF I9 = MatrixRF::identity(9);
  em.invariant("rank-identity", rank(I9) == 9, std::to_string(rank(I9)), "9", "wrong rank");
  MatrixRF Bp = ctx.B() + I9;
  MatrixRF K = kernel(Bp);
  em.invariant("kernel-dimension", K.cols() == 5, std::to_string(K.cols()), "5", "dimension " + std::to_string(K.cols()));
  em.invariant("kernel-vectors", (Bp * K).is_zero(), "(B+1) K", "0", matrix_residue(Bp * K));
  Rref once = rref(Bp);
  em.invariant("rref-idempotent", rref(once.reduced).reduced == once.reduced, "rref(rref(B+1))", "rref(B+1)",
               "rref changed");
  MatrixRF g = contraction_g();
  MatrixRF expected = MatrixRF::identity(3);
  expected(0, 2) = -kappa();
  em.invariant_matrix("inverse-g", inverse(g), expected, "g^-1", "1 - h/(q-1) E13");
}

std::vector<Task> rmatrix_tasks() {
  return {{"rmatrix.entries", rmatrix_entries},
          {"rmatrix.annihilating", rmatrix_polynomial},
          {"rmatrix.projector", rmatrix_projectors},
          {"rmatrix.relations", rmatrix_relations},
          {"rmatrix.solve", rmatrix_solve}};
}

// ---------------------------------------------------------------- calculus

void calculus_consistency(Emitter& em, const Calculus& c, std::size_t degree, bool is_claim) {
  for (const auto& k : verify_calculus_consistency(c, degree)) {
    std::string label = k.label;
    if (label.rfind("d-relation:", 0) == 0) label = retag(label, *c.base);
    else label = retag(label, *c.forms);
    if (is_claim) em.claim_zero(label, *c.forms, k.residue);
    else em.invariant_zero(label, *c.forms, k.residue);
  }
}

void calculus_gamma_plus(Emitter& em, Ctx& ctx) { calculus_consistency(em, ctx.calculus(), ctx.depth(3), true); }

void calculus_examples(Emitter& em, Ctx& ctx) {
  const Calculus& c = ctx.calculus();
  const auto& f = *c.forms;
  const auto& base = *c.base;
  em.invariant_equal("d(x*xi)", f, apply_d(c, transport(base, f, base.parse("x*xi"))),
                     f.parse("d(x)*xi") + f.parse("x*d(xi)"));
  em.invariant_equal("d(xi^2)", f, f.parse("d(xi)*xi - xi*d(xi)"), Element());
  // Forms-side derivatives.
  const char* names[] = {"xi", "x", "eta"};
  for (const char* i : names) {
    em.invariant_equal(std::string("@") + i + "(1)", base, derivative_by_forms(c, i, Element(Scalar(1))), Element());
    for (const char* j : names)
      em.invariant_equal(std::string("@") + i + "(" + j + ")", base, derivative_by_forms(c, i, base.gen(j)),
                         Element(Scalar(std::string(i) == j ? 1 : 0)));
  }
  em.invariant_equal("@x(x^2)", base, derivative_by_forms(c, "x", base.parse("x^2")), base.parse("(1 + q)*x"));

  // Dropping the d(eta)d(xi) term from the d(x)^2 relation breaks d^2 = 0.
  int dx = f.require_index("d(x)"), dxi = f.require_index("d(xi)"), deta = f.require_index("d(eta)");
  Word dxdx = {char(dx), char(dx)};
  std::vector<Element> rels;
  for (const auto& r : f.relations()) {
    if (r.coefficient(dxdx).is_zero()) {
      rels.push_back(r);
      continue;
    }
    Element cut;
    for (const auto& [w, k] : r.terms())
      if (w != Word{char(deta), char(dxi)} && w != Word{char(dxi), char(deta)}) cut.add(w, k);
    rels.push_back(cut);
  }
  auto broken = std::make_shared<const Presentation>("gamma-plus-cut", f.generators(), rels);
  Calculus bc = make_calculus(c.base, broken);
  Element x2 = transport(base, *broken, base.parse("x^2"));
  Element dd = apply_d(bc, apply_d(bc, x2));
  em.control("control.dropped-term.d2(x^2)", !dd.is_zero(), fmt(*broken, dd));

  auto weyl = ctx.p("weyl-q");
  em.claim_zero("weyl.partials-xi-eta", *weyl, weyl->parse("@xi*@eta + q^2*@eta*@xi - s*(q - 1)*@x^2"));
}

void calculus_strategies(Emitter& em, Ctx& ctx) {
  const Calculus& c = ctx.calculus();
  std::size_t n = ctx.depth(4);
  for (const auto& [name, is_claim] : {std::pair{"weyl-q", true}, std::pair{"weyl-q-derived", false}}) {
    auto weyl = ctx.p(name);
    for (const auto& k : compare_derivative_strategies(c, *weyl, n)) {
      std::string id = std::string(name) + "." + k.label;
      std::string lhs = fmt(*c.base, k.by_forms), rhs = fmt(*c.base, k.by_weyl);
      std::string res = fmt(*c.base, k.by_forms - k.by_weyl);
      if (is_claim) em.claim(id, k.ok(), lhs, rhs, res);
      else em.invariant(id, k.ok(), lhs, rhs, res);
    }
  }
}

void calculus_supersphere(Emitter& em, Ctx& ctx) {
  const Calculus& c = ctx.calculus();
  for (const char* name : {"weyl-q", "weyl-q-derived"}) {
    auto weyl = ctx.p(name);
    bool printed = std::string(name) == "weyl-q";
    for (const auto& k : supersphere_derivative_relations(c, *weyl)) {
      bool on_forms = k.label.rfind("d(", 0) == 0;
      if (on_forms && !printed) continue;
      std::string id = on_forms ? k.label : std::string(name) + "." + k.label;
      em.claim_zero(id, on_forms ? *c.forms : *weyl, k.residue);
    }
  }
}

void calculus_gamma_minus(Emitter& em, Ctx& ctx) {
  auto gp = ctx.p("gamma-plus"), gm = ctx.p("gamma-minus");
  compare_presentations(em, "regenerated", *build_gamma_minus(*gp), *gm, false);
  compare_presentations(em, "twice-is-gamma-plus", *build_gamma_minus(*gm, "gamma-plus"), *gp, false);
  em.claim_equal("x*d(xi)", *gm, gm->parse("x*d(xi)"), gm->parse("1/q*d(xi)*x"));
  calculus_consistency(em, make_calculus(ctx.p("spq12"), gm), ctx.depth(3), true);
}

void calculus_covariance(Emitter& em, Ctx& ctx) {
  const Calculus& c = ctx.calculus();
  auto ft = ctx.p("free-t");
  for (const auto& k : verify_d_covariance(c, ft)) em.claim_zero(retag(k.label, *c.forms), k.residue);
  CoMap co = forms_coaction(c, ft);
  const auto& f = c.forms;
  TensorElement expected = TensorElement::pure({ft, f}, {ft->gen("a"), f->gen("d(xi)")}) -
                           TensorElement::pure({ft, f}, {ft->gen("alpha"), f->gen("d(x)")}) +
                           TensorElement::pure({ft, f}, {ft->gen("b"), f->gen("d(eta)")});
  em.claim_zero("coaction-of-d(xi)", extend_comap(co, f->gen("d(xi)")) - expected);
}

void calculus_regenerated(Emitter& em, Ctx& ctx) {
  auto wd = weyl_from_matrix(*ctx.p("weyl-q"), ctx.B(), "weyl-q-derived");
  compare_presentations(em, "weyl-q-derived", *wd, *ctx.p("weyl-q-derived"), false);
}

std::vector<Task> calculus_tasks() {
  return {{"calculus.gamma-plus", calculus_gamma_plus},
          {"calculus.examples", calculus_examples},
          {"calculus.strategies", calculus_strategies},
          {"calculus.supersphere", calculus_supersphere},
          {"calculus.gamma-minus", calculus_gamma_minus},
          {"calculus.d-covariance", calculus_covariance},
          {"calculus.regenerated", calculus_regenerated}};
}

// ---------------------------------------------------------------- contraction

void contraction_presentations(Emitter& em, Ctx& ctx) {
  const std::tuple<const char*, const char*, bool> pairs[] = {
      {"spq12", "sph12", true}, {"lambda-q", "lambda-h", true}, {"weyl-q-derived", "weyl-h", false}};
  for (const auto& [src, target, is_claim] : pairs) {
    auto p = ctx.p(src);
    auto cm = registered_contraction(*p);
    if (!cm) {
      em.invariant(std::string(src) + ".equals-bundled", false, src, target, "no registered contraction");
      continue;
    }
    auto h = contract_presentation(*p, *cm);
    compare_presentations(em, std::string(src) + ".equals-bundled", *h, *ctx.p(target), is_claim);
  }
  auto printed = ctx.p("weyl-q");
  auto h = contract_presentation(*printed, *registered_contraction(*printed));
  compare_presentations(em, "weyl-q.equals-weyl-h", *h, *ctx.p("weyl-h"), true);
}

void contraction_commutes(Emitter& em, Ctx& ctx) {
  const std::pair<const char*, const char*> pairs[] = {
      {"spq12", "sph12"}, {"lambda-q", "lambda-h"}, {"weyl-q-derived", "weyl-h"}, {"weyl-q", ""}};
  for (const auto& [src, target] : pairs) {
    auto p = ctx.p(src);
    auto cm = *registered_contraction(*p);
    PresentationPtr h = *target ? ctx.p(target) : contract_presentation(*p, cm);
    for (const auto& k : contraction_commutes_with_reduction(*p, cm, *h)) {
      std::string label = k.label.substr(k.label.find(':') + 1);
      em.claim_zero(std::string(src) + "." + retag(label, *p), *h, k.residue);
    }
  }
}


void contraction_h_zero(Emitter& em, Ctx& ctx) {
  for (const char* name : {"sph12", "lambda-h"}) {
    Emitter sub = em.child(name);
    h_zero_checks(sub, *ctx.p(name), false);
  }
  Emitter sub = em.child("weyl-h");
  h_zero_checks(sub, *ctx.p("weyl-h"), true);
}

void contraction_metric(Emitter& em, Ctx&) {
  Scalar h = Scalar::h();
  MatrixRF expected = {{0, 0, -1}, {0, 1, 0}, {1, 0, h}};
  MatrixRF Ch = contract_matrix(C_q(), MatrixContraction::congruence);
  em.claim_matrix("C_h", Ch, expected, "lim g^st C_q g", "[[0,0,-1],[0,1,0],[1,0,h]]");
  MatrixRF g = contraction_g();
  MatrixRF m = supertranspose(g) * C_q() * g;
  std::vector<std::string> poles;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      if (valuation_at_s_one(m(r, c)) < 0) poles.push_back("(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
  em.invariant("poles-cancel", poles.empty(), "g^st C_q g", "finite at q=1", "poles at " + join(poles, ", "));
  bool pole = false;
  try {
    (void)limit_s_to_1(kappa());
  } catch (const PoleError&) {
    pole = true;
  }
  em.control("g-has-no-limit", pole, "lim h/(q-1)");
}

void contraction_projectors(Emitter& em, Ctx& ctx) {
  const Projectors& S = ctx.spectral();
  Projectors H{contract_matrix(S.minus, MatrixContraction::conjugation_tensor),
               contract_matrix(S.plus, MatrixContraction::conjugation_tensor),
               contract_matrix(S.zero, MatrixContraction::conjugation_tensor)};
  em.emit("minus.exists", Status::pass, "lim (g(x)g)^-1 P- (g(x)g)", "finite", "");
  projector_identities(em, "identities", H, false);
  std::size_t r = rank(H.minus);
  em.invariant("minus.rank", r == 5, std::to_string(r), "5", "rank " + std::to_string(r));
  auto sph = ctx.p("sph12");
  MatrixRF rows = quadratic_relation_rows(sph->relations(), coordinate_order(*sph, {"xi", "x", "eta"}));
  em.claim("minus.rows-equal-relation-span", same_row_span(H.minus, rows), "rows of P_h-",
           "contracted coordinate relation vectors", "row spaces differ");
}

void contraction_supersphere(Emitter& em, Ctx& ctx) {
  auto sph = ctx.p("sph12");
  for (const auto& k : h_supersphere_checks(*sph)) em.claim_zero(k.label, *sph, k.residue);
}

void contraction_lie(Emitter& em, Ctx& ctx) {
  for (const char* name : {"sph12", "lambda-h"}) {
    auto p = ctx.p(name);
    auto rep = lie_superalgebra_checks(*p);
    for (const auto& k : rep.identities) em.invariant_zero(std::string(name) + "." + k.label, *p, k.residue);
    for (const auto& k : rep.closure) em.claim_zero(std::string(name) + "." + k.label, *p, k.residue);
  }
}

void contraction_similarity(Emitter& em, Ctx& ctx) {
  auto ft = ctx.p("free-t");
  auto T = similarity_transformed_T();
  Element b13 = T[0][2];
  em.invariant_equal("T'(1,3)", *ft, b13, ft->parse("b + h/(q - 1)*(d - a) - (h/(q - 1))^2*c"));
  auto cand = similarity_transform_group(*ctx.p("ospq12"));
  em.emit("candidate.relations", Status::pass, std::to_string(cand->rules().size()) + " rules", "finite at q=1", "");
  std::vector<std::string> h_poles;
  for (const auto& r : cand->rules())
    for (const auto& [w, c] : r.rhs.terms())
      if (c.den().has_h()) {
        h_poles.push_back(cand->format_word(r.lhs));
        break;
      }
  em.claim("candidate.h-to-0", h_poles.empty(), "coefficients at h = 0", "finite",
           "1/h coefficients in the rules for " + join(h_poles, ", "));
  auto ov = check_overlaps(*cand);
  em.claim("candidate.overlaps", ov.empty(), std::to_string(ov.size()) + " ambiguous overlaps", "none",
           std::to_string(ov.size()) + " ambiguous overlaps");
}

void contraction_compact(Emitter& em, Ctx& ctx) {
  const MatrixRF& B = ctx.B();
  for (const auto& k : compare_compact_form(*ctx.p("weyl-q"), B)) em.claim_zero("q." + k.label, *ctx.p("weyl-q"), k.residue);
  auto wd = ctx.p("weyl-q-derived");
  for (const auto& k : compare_compact_form(*wd, B)) em.invariant_zero("q-derived." + k.label, *wd, k.residue);
  auto wh = ctx.p("weyl-h");
  MatrixRF Bh = contract_matrix(B, MatrixContraction::conjugation_tensor);
  for (const auto& r : compact_derivative_relations(*wh, Bh)) {
    std::string tag = wh->format_word(leading_word(*wh, r));
    em.claim_zero("h." + tag, *wh, wh->normal_form(r));
  }
  MatrixRF Ph = contract_matrix(ctx.spectral().minus, MatrixContraction::conjugation_tensor);
  for (const auto& k : partial_projector_relations(*wh, Ph)) em.claim_zero("h-partials." + k.label, *wh, k.residue);
}

void contraction_heisenberg(Emitter& em, Ctx& ctx) {
  auto wh = ctx.p("weyl-h");
  for (const auto& k : heisenberg_h_verify(*wh, default_heisenberg_operators(*wh))) em.claim_zero(k.label, *wh, k.residue);
}

std::vector<Task> contraction_tasks() {
  return {{"contraction.presentation", contraction_presentations},
          {"contraction.commutes", contraction_commutes},
          {"contraction.h-zero", contraction_h_zero},
          {"contraction.metric", contraction_metric},
          {"contraction.projector", contraction_projectors},
          {"contraction.supersphere", contraction_supersphere},
          {"contraction.lie", contraction_lie},
          {"contraction.similarity", contraction_similarity},
          {"contraction.compact-form", contraction_compact},
          {"contraction.heisenberg", contraction_heisenberg}};
}

std::vector<Task> tasks_for(const std::string& suite) {
  if (suite == "presentations") return presentation_tasks();
  if (suite == "hopf") return hopf_tasks();
  if (suite == "star") return star_tasks();
  if (suite == "rmatrix") return rmatrix_tasks();
  if (suite == "calculus") return calculus_tasks();
  if (suite == "contraction") return contraction_tasks();
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

bool matches_filters(const std::string& check_id, const std::vector<std::string>& filters) {
  if (filters.empty()) return true;
  for (const auto& f : filters)
    if (glob(f, check_id) || glob(f, strip_suite(check_id))) return true;
  return false;
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt) {
  if (!is_suite(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
  Ctx ctx(opt, Catalog::load(opt.catalog));
  std::vector<Task> tasks;
  for (const auto& name : suite == "all" ? suite_names() : std::vector<std::string>{suite})
    for (auto& t : tasks_for(name)) tasks.push_back(std::move(t));
  std::vector<CheckResult> out;
  for (const auto& t : tasks) {
    if (!opt.filters.empty() &&
        std::none_of(opt.filters.begin(), opt.filters.end(), [&](const auto& f) { return may_match(t.prefix, f); }))
      continue;
    Emitter em(t.prefix, ctx.opt, out);
    try {
      t.run(em, ctx);
    } catch (const std::exception& e) {
      em.emit("error", Status::fail, "exception", "none", e.what());
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.check_id < b.check_id; });
  // Ids are unique by construction; keep the report well-formed if two collide.
  for (std::size_t k = 1; k < out.size(); ++k)
    if (out[k].check_id == out[k - 1].check_id) out[k].check_id += "#" + std::to_string(k);
  return out;
}

Summary summarize(const std::vector<CheckResult>& results) {
  Summary s;
  for (const auto& r : results) {
    ++s.total;
    switch (r.status) {
      case Status::pass: ++s.pass; break;
      case Status::fail: ++s.fail; break;
      case Status::finding: ++s.finding; break;
      case Status::skipped: ++s.skipped; break;
    }
  }
  return s;
}

std::string to_json_line(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["status"] = to_string(r.status);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["residue"] = r.residue;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

std::string to_json_line(const Summary& s) {
  nlohmann::ordered_json j;
  j["total"] = s.total;
  j["pass"] = s.pass;
  j["fail"] = s.fail;
  j["finding"] = s.finding;
  j["skipped"] = s.skipped;
  return j.dump();
}

std::string to_text_line(const CheckResult& r) {
  std::string status = to_string(r.status);
  status.resize(8, ' ');
  std::string line = status + r.check_id;
  if (r.status != Status::pass) line += "  [" + r.lhs + "] vs [" + r.rhs + "]  residue: " + r.residue;
  if (r.elapsed_ms) line += "  (" + std::to_string(r.elapsed_ms) + " ms)";
  return line;
}

std::string to_text_line(const Summary& s) {
  return "total " + std::to_string(s.total) + ", pass " + std::to_string(s.pass) + ", fail " + std::to_string(s.fail) +
         ", finding " + std::to_string(s.finding) + ", skipped " + std::to_string(s.skipped);
}

}  // namespace qsw
