#include "qsw/tensor.hpp"

#include <stdexcept>

namespace qsw {

namespace {

bool same_legs(const std::vector<PresentationPtr>& a, const std::vector<PresentationPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k] && a[k]->name() != b[k]->name()) return false;
  return true;
}

void check_legs(const TensorElement& a, const TensorElement& b) {
  if (!same_legs(a.legs(), b.legs())) throw std::invalid_argument("tensor factors over different algebras");
}

// Expands a product of per-leg elements into keys.
void expand(const std::vector<Element>& factors, std::size_t leg, TensorElement::Key& key, const Scalar& coeff,
            TensorElement& out) {
  if (leg == factors.size()) {
    out.add(key, coeff);
    return;
  }
  for (const auto& [w, c] : factors[leg].terms()) {
    key[leg] = w;
    expand(factors, leg + 1, key, coeff * c, out);
  }
}

}  // namespace

TensorElement TensorElement::pure(std::vector<PresentationPtr> legs, const std::vector<Element>& factors) {
  if (legs.size() != factors.size()) throw std::invalid_argument("tensor factor count mismatch");
  TensorElement t(std::move(legs));
  Key key(factors.size());
  expand(factors, 0, key, Scalar(1), t);
  return t;
}

TensorElement TensorElement::unit(std::vector<PresentationPtr> legs) {
  TensorElement t(std::move(legs));
  t.add(Key(t.legs_.size()), Scalar(1));
  return t;
}

void TensorElement::add(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (legs_.empty() && terms_.empty()) legs_ = o.legs_;
  else if (!o.terms_.empty()) check_legs(*this, o);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  if (legs_.empty() && terms_.empty()) legs_ = o.legs_;
  else if (!o.terms_.empty()) check_legs(*this, o);
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TensorElement TensorElement::normalized() const {
  TensorElement out(legs_);
  for (const auto& [k, c] : terms_) {
    std::vector<Element> factors;
    for (std::size_t l = 0; l < k.size(); ++l) factors.push_back(legs_[l]->normal_form(Element::word(k[l])));
    Key key(k.size());
    expand(factors, 0, key, c, out);
  }
  return out;
}

std::map<TensorElement::Key, Element> TensorElement::split(std::size_t leg) const {
  std::map<Key, Element> out;
  for (const auto& [k, c] : terms_) {
    Key rest = k;
    rest.erase(rest.begin() + std::ptrdiff_t(leg));
    out[rest].add(k[leg], c);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::string TensorElement::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    bool negative;
    std::string coeff = format_coefficient(c, negative);
    std::string body = "[";
    for (std::size_t l = 0; l < k.size(); ++l) {
      if (l) body += " (x) ";
      body += legs_[l]->format_word(k[l]);
    }
    body += "]";
    if (coeff != "1") body = coeff + "*" + body;
    if (first) out = (negative ? "-" : "") + body;
    else out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

TensorElement tensor_multiply(const TensorElement& u, const TensorElement& v) {
  check_legs(u, v);
  const auto& legs = u.legs();
  const std::size_t n = legs.size();
  TensorElement out(legs);
  for (const auto& [ka, ca] : u.terms()) {
    std::vector<int> pa(n);
    for (std::size_t l = 0; l < n; ++l) pa[l] = legs[l]->parity(ka[l]);
    for (const auto& [kb, cb] : v.terms()) {
      int sign = 0;
      // b_j moves past a_i for every i > j
      int odd_a_after = 0;
      for (std::size_t j = n; j-- > 0;) {
        if (legs[j]->parity(kb[j])) sign ^= odd_a_after;
        odd_a_after ^= pa[j];
      }
      std::vector<Element> factors(n);
      for (std::size_t l = 0; l < n; ++l) factors[l] = legs[l]->normal_form(Element::word(ka[l] + kb[l]));
      TensorElement::Key key(n);
      expand(factors, 0, key, sign ? -(ca * cb) : ca * cb, out);
    }
  }
  return out;
}

TensorElement extend_comap(const CoMap& c, const Element& e) {
  if (c.images.size() != c.source->size()) throw std::invalid_argument("comap is not defined on every generator");
  TensorElement out(c.target);
  for (const auto& [w, coeff] : e.terms()) {
    TensorElement term = TensorElement::unit(c.target);
    for (char g : w) term = tensor_multiply(term, c.images[(unsigned char)g]);
    out += term * coeff;
  }
  return out;
}

TensorElement apply_on_leg(const TensorElement& t, std::size_t leg, const CoMap& c) {
  std::vector<PresentationPtr> legs;
  for (std::size_t l = 0; l < leg; ++l) legs.push_back(t.legs()[l]);
  for (const auto& p : c.target) legs.push_back(p);
  for (std::size_t l = leg + 1; l < t.legs().size(); ++l) legs.push_back(t.legs()[l]);
  TensorElement out(legs);
  for (const auto& [k, coeff] : t.terms()) {
    TensorElement img = extend_comap(c, Element::word(k[leg]));
    for (const auto& [ik, ic] : img.terms()) {
      TensorElement::Key key(k.begin(), k.begin() + std::ptrdiff_t(leg));
      key.insert(key.end(), ik.begin(), ik.end());
      key.insert(key.end(), k.begin() + std::ptrdiff_t(leg) + 1, k.end());
      out.add(key, coeff * ic);
    }
  }
  return out;
}

}  // namespace qsw
