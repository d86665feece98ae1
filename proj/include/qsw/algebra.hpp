#pragma once

// Graded free algebras, presentations as quadratic rewrite systems and
// normal ordering.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsw/expr.hpp"
#include "qsw/linalg.hpp"
#include "qsw/scalar.hpp"

namespace qsw {

/// A word is a sequence of generator indices, one char per letter.
using Word = std::string;

struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class Element {
public:
  using Terms = std::map<Word, Scalar, ShortLex>;

  Element() = default;
  Element(const Scalar& c);  // NOLINT(implicit)
  static Element word(const Word& w, const Scalar& c = Scalar(1));
  static Element generator(int index) { return word(Word(1, char(index))); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  Scalar scalar_part() const;  // coefficient of the empty word
  Scalar coefficient(const Word& w) const;
  std::size_t max_length() const;
  std::size_t min_length() const;

  void add(const Word& w, const Scalar& c);

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// Free (unreduced) product: concatenation of words.
  friend Element concat(const Element& a, const Element& b);
  /// Applies f to every coefficient.
  template <class F>
  Element map_coefficients(F f) const {
    Element out;
    for (const auto& [w, c] : terms_) out.add(w, f(c));
    return out;
  }

private:
  Terms terms_;
};

struct Generator {
  std::string name;  // symbol spelling, e.g. "xi", "d(x)", "@eta"
  int parity = 0;
  int weight = 1;
};

struct Rule {
  Word lhs;
  Element rhs;
};

class NonTermination : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Presentation {
public:
  /// Generators in order (lowest first). Relations are free-algebra elements
  /// that vanish; they are oriented into rules by row reduction, the leading
  /// word being the largest in the termination order.
  Presentation(std::string name, std::vector<Generator> generators, std::vector<Element> relations);

  const std::string& name() const { return name_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  std::optional<int> index_of(const std::string& name) const;
  int require_index(const std::string& name) const;
  Element gen(const std::string& name) const { return Element::generator(require_index(name)); }

  const std::vector<Element>& relations() const { return relations_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule* rule_for(char first, char second) const {
    int k = pair_rule_[std::size_t((unsigned char)first) * gens_.size() + (unsigned char)second];
    return k < 0 ? nullptr : &rules_[std::size_t(k)];
  }
  bool is_free() const { return rules_.empty(); }

  /// Termination order: length, then weight, then lexicographic by index.
  bool word_less(const Word& a, const Word& b) const;
  int weight(const Word& w) const;
  int parity(const Word& w) const;
  /// Parity of a homogeneous element; -1 when mixed. Zero is even.
  int parity(const Element& e) const;
  bool is_homogeneous_presentation() const;

  Element normal_form(const Element& e) const;
  Element multiply(const Element& a, const Element& b) const;
  Element power(const Element& a, unsigned n) const;
  bool is_normal(const Word& w) const;
  /// One rewrite step at position pos (pos, pos+1), if a rule applies there.
  std::optional<Element> rewrite_at(const Word& w, std::size_t pos) const;

  Element parse(const std::string& text) const;
  Element from_expr(const Expr& e) const;
  std::string format(const Element& e) const;
  std::string format_word(const Word& w) const;

  static constexpr std::size_t step_budget = 1000000;

private:
  std::string name_;
  std::vector<Generator> gens_;
  std::vector<Element> relations_;
  std::vector<Rule> rules_;
  std::vector<int> pair_rule_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Evaluates an expression as a free-algebra element with a custom symbol
/// resolver (no reduction).
Element free_eval(const Expr& e, const std::function<Element(const Symbol&)>& resolve);

/// Formats a coefficient for use in front of a word.
std::string format_coefficient(const Scalar& c, bool& negative);

enum class BracketKind { bracket, antibracket, automatic };

/// The automatic kind picks the bracket from the parities and extends
/// bilinearly over the even and odd parts of inhomogeneous arguments.
Element super_commutator(const Element& a, const Element& b, const Presentation& p,
                         BracketKind kind = BracketKind::automatic);

/// Normal words of the given length, lexicographic by generator index.
std::vector<Word> enumerate_pbw(const Presentation& p, std::size_t degree);

/// Quotient dimensions of degree 0..max_degree computed from the defining
/// relations alone by row reduction of all u*r*v in the filtered free algebra.
std::vector<std::size_t> hilbert_dims_oracle(const Presentation& p, std::size_t max_degree);
std::size_t hilbert_dim_oracle(const Presentation& p, std::size_t degree);

/// Linear span of free-algebra elements, for exact membership tests.
class ElementSpan {
public:
  /// Returns true when e was independent of the span so far.
  bool insert(const Element& e);
  bool contains(const Element& e) const;
  std::size_t rank() const { return echelon_.rank(); }

private:
  SparseEchelon::Row row_of(const Element& e, bool grow) const;
  mutable std::map<Word, std::size_t, ShortLex> columns_;
  SparseEchelon echelon_;
};

struct OverlapIssue {
  Word word;
  std::vector<Element> normal_forms;
};

/// Length-3 words whose single-step reductions lead to different normal forms.
std::vector<OverlapIssue> check_overlaps(const Presentation& p);

struct Morphism {
  PresentationPtr domain;
  PresentationPtr codomain;
  std::vector<Element> images;  // one per domain generator, in the codomain
  ScalarMap scalars;
};

Element apply_morphism(const Morphism& m, const Element& e);

/// A labelled residue; zero means the checked identity holds.
struct ElementCheck {
  std::string label;
  Element residue;
  bool ok() const { return residue.is_zero(); }
};

struct RelationCheck {
  std::size_t index;
  Element relation;
  Element residue;
  bool ok() const { return residue.is_zero(); }
};

std::vector<RelationCheck> verify_morphism(const Morphism& m);

/// Value of a free-algebra element when generator k acts as images[k]
/// (square matrices of one size).
MatrixRF evaluate_in_matrices(const Element& e, const std::vector<MatrixRF>& images);

}  // namespace qsw
