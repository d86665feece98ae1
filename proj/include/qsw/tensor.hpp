#pragma once

// Koszul-signed tensor products of presented superalgebras.

#include <map>
#include <string>
#include <vector>

#include "qsw/algebra.hpp"

namespace qsw {

class TensorElement {
public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, Scalar>;

  TensorElement() = default;
  explicit TensorElement(std::vector<PresentationPtr> legs) : legs_(std::move(legs)) {}
  /// a_1 (x) a_2 (x) ... with every factor expanded.
  static TensorElement pure(std::vector<PresentationPtr> legs, const std::vector<Element>& factors);
  static TensorElement unit(std::vector<PresentationPtr> legs);

  const std::vector<PresentationPtr>& legs() const { return legs_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Key& k, const Scalar& c);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Scalar& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const Scalar& c) { return a *= c; }
  friend TensorElement operator*(const Scalar& c, TensorElement a) { return a *= c; }
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

  /// Normal-orders every leg.
  TensorElement normalized() const;
  /// Collects the element on leg `leg` for each fixed assignment of the other legs.
  std::map<Key, Element> split(std::size_t leg) const;

  std::string format() const;

private:
  std::vector<PresentationPtr> legs_;
  Terms terms_;
};

struct TensorCheck {
  std::string label;
  TensorElement residue;
  bool ok() const { return residue.is_zero(); }
};

/// (a_1 (x) ... (x) a_n)(b_1 (x) ... (x) b_n) with sign (-1)^{sum_{i>j} p(a_i)p(b_j)}.
TensorElement tensor_multiply(const TensorElement& u, const TensorElement& v);

/// Algebra map from a presentation into a tensor product, given on generators.
/// An empty leg list means scalar-valued (a counit).
struct CoMap {
  PresentationPtr source;
  std::vector<PresentationPtr> target;
  std::vector<TensorElement> images;
};

TensorElement extend_comap(const CoMap& c, const Element& e);
/// Applies c to leg `leg`, splicing its target legs in place.
TensorElement apply_on_leg(const TensorElement& t, std::size_t leg, const CoMap& c);

}  // namespace qsw
