#include "qsw/algebra.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "qsw/linalg.hpp"

namespace qsw {

// ---------------------------------------------------------------------------
// Element

Element::Element(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Word(), c);
}

Element Element::word(const Word& w, const Scalar& c) {
  Element e;
  e.add(w, c);
  return e;
}

bool Element::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Scalar Element::scalar_part() const { return coefficient(Word()); }

Scalar Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

std::size_t Element::max_length() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }
std::size_t Element::min_length() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }

void Element::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Element concat(const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(wa + wb, ca * cb);
  return out;
}

Element free_eval(const Expr& e, const std::function<Element(const Symbol&)>& resolve) {
  ExprEvaluator<Element> ev;
  ev.symbol_value = resolve;
  ev.from_scalar = [](const Scalar& c) { return Element(c); };
  ev.multiply = [](const Element& a, const Element& b) { return concat(a, b); };
  ev.add = [](const Element& a, const Element& b) { return a + b; };
  ev.negate = [](const Element& a) { return -a; };
  ev.as_scalar = [](const Element& a) {
    if (!a.is_scalar()) throw std::invalid_argument("divisor is not a scalar");
    return a.scalar_part();
  };
  ev.scale = [](const Element& a, const Scalar& c) { return a * c; };
  return ev(e);
}

// ---------------------------------------------------------------------------
// Presentation

Presentation::Presentation(std::string name, std::vector<Generator> generators, std::vector<Element> relations)
    : name_(std::move(name)), gens_(std::move(generators)), relations_(std::move(relations)) {
  if (gens_.size() > 120) throw std::invalid_argument("too many generators");
  pair_rule_.assign(gens_.size() * gens_.size(), -1);
  std::vector<Element> nonzero;
  for (const auto& r : relations_)
    if (!r.is_zero()) nonzero.push_back(r);
  if (nonzero.empty()) return;

  std::vector<Word> words;
  for (const auto& r : nonzero)
    for (const auto& [w, c] : r.terms()) words.push_back(w);
  std::sort(words.begin(), words.end(), [this](const Word& a, const Word& b) { return word_less(b, a); });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::map<Word, std::size_t> column;
  for (std::size_t k = 0; k < words.size(); ++k) column[words[k]] = k;

  MatrixRF m(nonzero.size(), words.size());
  for (std::size_t r = 0; r < nonzero.size(); ++r)
    for (const auto& [w, c] : nonzero[r].terms()) m(r, column[w]) = c;
  Rref red = rref(m);
  for (std::size_t k = 0; k < red.pivot_columns.size(); ++k) {
    const Word& lhs = words[red.pivot_columns[k]];
    if (lhs.size() != 2)
      throw std::invalid_argument("presentation " + name_ + ": relation with leading word '" + format_word(lhs) +
                                  "' cannot be oriented as a quadratic rule");
    Element rhs;
    for (std::size_t c = red.pivot_columns[k] + 1; c < words.size(); ++c)
      if (!red.reduced(k, c).is_zero()) rhs.add(words[c], -red.reduced(k, c));
    pair_rule_[std::size_t((unsigned char)lhs[0]) * gens_.size() + (unsigned char)lhs[1]] = int(rules_.size());
    rules_.push_back({lhs, std::move(rhs)});
  }
}

std::optional<int> Presentation::index_of(const std::string& name) const {
  for (std::size_t k = 0; k < gens_.size(); ++k)
    if (gens_[k].name == name) return int(k);
  return std::nullopt;
}

int Presentation::require_index(const std::string& name) const {
  auto k = index_of(name);
  if (!k) throw UndeclaredSymbol(name);
  return *k;
}

int Presentation::weight(const Word& w) const {
  int total = 0;
  for (char c : w) total += gens_[(unsigned char)c].weight;
  return total;
}

bool Presentation::word_less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](char x, char y) { return (unsigned char)x < (unsigned char)y; });
}

int Presentation::parity(const Word& w) const {
  int p = 0;
  for (char c : w) p ^= gens_[(unsigned char)c].parity;
  return p;
}

int Presentation::parity(const Element& e) const {
  int p = -2;
  for (const auto& [w, c] : e.terms()) {
    int q = parity(w);
    if (p == -2) p = q;
    else if (p != q) return -1;
  }
  return p == -2 ? 0 : p;
}

bool Presentation::is_homogeneous_presentation() const {
  for (const auto& r : relations_)
    if (r.min_length() != r.max_length()) return false;
  return true;
}

bool Presentation::is_normal(const Word& w) const {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (rule_for(w[k], w[k + 1])) return false;
  return true;
}

std::optional<Element> Presentation::rewrite_at(const Word& w, std::size_t pos) const {
  if (pos + 1 >= w.size()) return std::nullopt;
  const Rule* r = rule_for(w[pos], w[pos + 1]);
  if (!r) return std::nullopt;
  Element out;
  Word prefix = w.substr(0, pos), suffix = w.substr(pos + 2);
  for (const auto& [rw, rc] : r->rhs.terms()) out.add(prefix + rw + suffix, rc);
  return out;
}

Element Presentation::normal_form(const Element& e) const {
  if (rules_.empty()) return e;
  auto greater = [this](const Word& a, const Word& b) { return word_less(b, a); };
  std::map<Word, Scalar, decltype(greater)> pending(greater);
  for (const auto& [w, c] : e.terms()) pending.emplace(w, c);
  Element result;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto it = pending.begin();
    Word w = it->first;
    Scalar c = std::move(it->second);
    pending.erase(it);
    if (c.is_zero()) continue;
    std::size_t pos = 0;
    const Rule* rule = nullptr;
    for (; pos + 1 < w.size(); ++pos)
      if ((rule = rule_for(w[pos], w[pos + 1]))) break;
    if (!rule) {
      result.add(w, c);
      continue;
    }
    if (++steps > step_budget) throw NonTermination("rewrite budget exceeded while reducing " + format_word(w));
    Word prefix = w.substr(0, pos), suffix = w.substr(pos + 2);
    for (const auto& [rw, rc] : rule->rhs.terms()) {
      Word nw = prefix + rw + suffix;
      auto [slot, inserted] = pending.emplace(nw, c * rc);
      if (!inserted) {
        slot->second += c * rc;
        if (slot->second.is_zero()) pending.erase(slot);
      }
    }
  }
  return result;
}

Element Presentation::multiply(const Element& a, const Element& b) const { return normal_form(concat(a, b)); }

Element Presentation::power(const Element& a, unsigned n) const {
  Element acc(Scalar(1));
  for (unsigned k = 0; k < n; ++k) acc = multiply(acc, a);
  return acc;
}

Element Presentation::from_expr(const Expr& e) const {
  return free_eval(e, [this](const Symbol& s) { return gen(s.text()); });
}

Element Presentation::parse(const std::string& text) const { return normal_form(from_expr(parse_expr(text))); }

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    if (!out.empty()) out += "*";
    out += gens_[(unsigned char)w[k]].name;
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

std::string format_coefficient(const Scalar& c, bool& negative) {
  negative = false;
  if (c.is_polynomial() && c.num().is_monomial()) {
    std::string t = c.to_string();
    if (t[0] == '-') {
      negative = true;
      return t.substr(1);
    }
    return t;
  }
  return "(" + c.to_string() + ")";
}

std::string Presentation::format(const Element& e) const {
  if (e.is_zero()) return "0";
  std::vector<std::pair<Word, Scalar>> terms(e.terms().begin(), e.terms().end());
  std::sort(terms.begin(), terms.end(), [this](const auto& a, const auto& b) { return word_less(b.first, a.first); });
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    bool negative;
    std::string coeff = format_coefficient(c, negative);
    std::string body;
    if (w.empty()) body = coeff;
    else if (coeff == "1") body = format_word(w);
    else body = coeff + "*" + format_word(w);
    if (first) out = (negative ? "-" : "") + body;
    else out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

Element super_commutator(const Element& a, const Element& b, const Presentation& p, BracketKind kind) {
  int sign = 1;
  switch (kind) {
    case BracketKind::bracket: sign = 1; break;
    case BracketKind::antibracket: sign = -1; break;
    case BracketKind::automatic: {
      int pa = p.parity(a), pb = p.parity(b);
      if (pa < 0 || pb < 0) {
        // extend bilinearly over the even and odd parts
        Element parts[2][2];
        for (const auto& [w, c] : a.terms()) parts[0][p.parity(w)].add(w, c);
        for (const auto& [w, c] : b.terms()) parts[1][p.parity(w)].add(w, c);
        Element out;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            if (!parts[0][i].is_zero() && !parts[1][j].is_zero())
              out += super_commutator(parts[0][i], parts[1][j], p, kind);
        return out;
      }
      sign = (pa & pb) ? -1 : 1;
      break;
    }
  }
  Element ab = p.multiply(a, b), ba = p.multiply(b, a);
  return sign == 1 ? ab - ba : ab + ba;
}

std::vector<Word> enumerate_pbw(const Presentation& p, std::size_t degree) {
  std::vector<Word> out;
  Word w;
  std::function<void()> grow = [&] {
    if (w.size() == degree) {
      out.push_back(w);
      return;
    }
    for (std::size_t g = 0; g < p.size(); ++g) {
      if (!w.empty() && p.rule_for(w.back(), char(g))) continue;
      w.push_back(char(g));
      grow();
      w.pop_back();
    }
  };
  grow();
  return out;
}

namespace {

void words_of_length(std::size_t gens, std::size_t len, std::vector<Word>& out) {
  Word w(len, '\0');
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == len) {
      out.push_back(w);
      return;
    }
    for (std::size_t g = 0; g < gens; ++g) {
      w[k] = char(g);
      fill(k + 1);
    }
  };
  fill(0);
}

}  // namespace

std::vector<std::size_t> hilbert_dims_oracle(const Presentation& p, std::size_t max_degree) {
  if (max_degree > 8) throw std::invalid_argument("oracle degree cap exceeded");
  std::vector<Word> all;
  std::vector<std::size_t> count_upto;
  for (std::size_t len = 0; len <= max_degree; ++len) {
    words_of_length(p.size(), len, all);
    count_upto.push_back(all.size());
  }
  std::sort(all.begin(), all.end(), [&p](const Word& a, const Word& b) { return p.word_less(b, a); });
  std::unordered_map<Word, std::size_t> column;
  for (std::size_t k = 0; k < all.size(); ++k) column.emplace(all[k], k);

  SparseEchelon echelon;
  std::vector<std::size_t> dims;
  std::size_t previous = 0;
  for (std::size_t total = 0; total <= max_degree; ++total) {
    for (const auto& r : p.relations()) {
      if (r.is_zero()) continue;
      std::size_t len = r.max_length();
      if (len > total) continue;
      std::size_t outer = total - len;
      for (std::size_t left = 0; left <= outer; ++left) {
        std::vector<Word> us, vs;
        words_of_length(p.size(), left, us);
        words_of_length(p.size(), outer - left, vs);
        for (const auto& u : us)
          for (const auto& v : vs) {
            SparseEchelon::Row row;
            for (const auto& [w, c] : r.terms()) row.emplace(column.at(u + w + v), c);
            echelon.insert(std::move(row));
          }
      }
    }
    std::size_t quotient = count_upto[total] - echelon.rank();
    dims.push_back(quotient - previous);
    previous = quotient;
  }
  return dims;
}

std::size_t hilbert_dim_oracle(const Presentation& p, std::size_t degree) { return hilbert_dims_oracle(p, degree).back(); }

SparseEchelon::Row ElementSpan::row_of(const Element& e, bool grow) const {
  SparseEchelon::Row row;
  for (const auto& [w, c] : e.terms()) {
    auto it = columns_.find(w);
    if (it == columns_.end()) {
      if (!grow) return {{std::size_t(-1), Scalar(1)}};
      it = columns_.emplace(w, columns_.size()).first;
    }
    row.emplace(it->second, c);
  }
  return row;
}

bool ElementSpan::insert(const Element& e) { return echelon_.insert(row_of(e, true)); }

bool ElementSpan::contains(const Element& e) const {
  auto row = row_of(e, false);
  if (row.count(std::size_t(-1))) return false;
  return echelon_.contains(std::move(row));
}

std::vector<OverlapIssue> check_overlaps(const Presentation& p) {
  std::vector<OverlapIssue> issues;
  std::vector<Word> words;
  words_of_length(p.size(), 3, words);
  for (const auto& w : words) {
    std::vector<Element> forms;
    for (std::size_t pos = 0; pos < 2; ++pos) {
      auto step = p.rewrite_at(w, pos);
      if (!step) continue;
      Element nf = p.normal_form(*step);
      if (std::find(forms.begin(), forms.end(), nf) == forms.end()) forms.push_back(std::move(nf));
    }
    if (forms.size() > 1) issues.push_back({w, std::move(forms)});
  }
  return issues;
}

Element apply_morphism(const Morphism& m, const Element& e) {
  const Presentation& target = *m.codomain;
  if (m.images.size() != m.domain->size()) throw std::invalid_argument("morphism image count mismatch");
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Element term(m.scalars(c));
    for (char g : w) term = target.multiply(term, m.images[(unsigned char)g]);
    out += term;
  }
  return out;
}

std::vector<RelationCheck> verify_morphism(const Morphism& m) {
  std::vector<RelationCheck> out;
  for (std::size_t k = 0; k < m.domain->relations().size(); ++k) {
    const Element& r = m.domain->relations()[k];
    out.push_back({k, r, apply_morphism(m, r)});
  }
  return out;
}

MatrixRF evaluate_in_matrices(const Element& e, const std::vector<MatrixRF>& images) {
  if (images.empty()) throw std::invalid_argument("no matrices to evaluate in");
  std::size_t n = images.front().rows();
  MatrixRF out(n, n);
  for (const auto& [w, c] : e.terms()) {
    MatrixRF m = MatrixRF::identity(n);
    for (char g : w) m = m * images.at((unsigned char)g);
    out += m.scaled(c);
  }
  return out;
}

}  // namespace qsw
