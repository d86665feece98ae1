#include "qsw/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace qsw {

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (sgn(im_) == 0) return {mpq_class(1) / re_, 0};
  mpq_class n = re_ * re_ + im_ * im_;
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw ArithmeticError("division by zero");
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  auto imag = [&](const mpq_class& v) {
    if (v == 1) return std::string("i");
    if (v == -1) return std::string("-i");
    return v.get_str() + "*i";
  };
  if (sgn(re_) == 0) return imag(im_);
  std::string im_text = imag(abs(im_));
  return "(" + re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + im_text + ")";
}

// ---------------------------------------------------------------------------
// Dense univariate helpers (polynomials in h with Gaussian coefficients and
// polynomials in s over those). Only used inside gcd and (s-1) division.

namespace {

using UPoly = std::vector<GaussianRational>;  // index = degree in h
using SPoly = std::vector<UPoly>;             // index = degree in s

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

void trim(SPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly u_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k];
  for (size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  trim(r);
  return r;
}

UPoly u_add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k];
  for (size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  trim(r);
  return r;
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (size_t x = 0; x < a.size(); ++x) {
    if (a[x].is_zero()) continue;
    for (size_t y = 0; y < b.size(); ++y) r[x + y] += a[x] * b[y];
  }
  trim(r);
  return r;
}

// a = q*b + r over the coefficient field
void u_divmod(const UPoly& a, const UPoly& b, UPoly* quot, UPoly* rem) {
  UPoly r = a;
  UPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, GaussianRational());
  const GaussianRational lc_inv = b.back().inverse();
  while (!r.empty() && r.size() >= b.size()) {
    size_t shift = r.size() - b.size();
    GaussianRational c = r.back() * lc_inv;
    q[shift] = c;
    for (size_t k = 0; k < b.size(); ++k) r[k + shift] -= c * b[k];
    r.pop_back();
    trim(r);
  }
  trim(q);
  if (quot) *quot = std::move(q);
  if (rem) *rem = std::move(r);
}

UPoly u_monic(UPoly u) {
  if (u.empty()) return u;
  GaussianRational inv = u.back().inverse();
  for (auto& c : u) c *= inv;
  return u;
}

UPoly u_gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r;
    u_divmod(a, b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return u_monic(std::move(a));
}

UPoly u_exact_div(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  u_divmod(a, b, &q, &r);
  if (!r.empty()) throw ArithmeticError("inexact polynomial division");
  return q;
}

SPoly to_spoly(const Poly& p) {
  SPoly out;
  for (const auto& t : p.terms()) {
    if (out.size() <= t.exp.s) out.resize(t.exp.s + 1);
    UPoly& u = out[t.exp.s];
    if (u.size() <= t.exp.h) u.resize(t.exp.h + 1);
    u[t.exp.h] = t.coeff;
  }
  return out;
}

Poly from_spoly(const SPoly& p) {
  Poly out;
  for (size_t ds = 0; ds < p.size(); ++ds)
    for (size_t dh = 0; dh < p[ds].size(); ++dh)
      if (!p[ds][dh].is_zero())
        out += Poly::monomial(p[ds][dh], {std::uint16_t(ds), std::uint16_t(dh)});
  return out;
}

UPoly s_content(const SPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? u_monic(c) : u_gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

SPoly s_divide_content(const SPoly& p, const UPoly& c) {
  if (c.size() == 1 && c[0].is_one()) return p;
  SPoly out(p.size());
  for (size_t k = 0; k < p.size(); ++k)
    if (!p[k].empty()) out[k] = u_exact_div(p[k], c);
  return out;
}

SPoly s_primitive(const SPoly& p) { return s_divide_content(p, s_content(p)); }

int s_degree(const SPoly& p) { return int(p.size()) - 1; }

// Pseudo-remainder of a by b in s (a nonzero multiple of the true prem).
SPoly s_prem(SPoly a, const SPoly& b) {
  const int db = s_degree(b);
  const UPoly& lcb = b.back();
  while (!a.empty() && s_degree(a) >= db) {
    const int da = s_degree(a);
    UPoly lca = a.back();
    for (auto& c : a) c = u_mul(c, lcb);
    for (int k = 0; k <= db; ++k) {
      if (b[k].empty()) continue;
      a[k + da - db] = u_sub(a[k + da - db], u_mul(lca, b[k]));
    }
    trim(a);
  }
  return a;
}

// gcd of polynomials with no monomial factor, both nonconstant
Poly gcd_general(const Poly& a, const Poly& b) {
  SPoly pa = to_spoly(a), pb = to_spoly(b);
  UPoly ca = s_content(pa), cb = s_content(pb);
  UPoly c = u_gcd(ca, cb);
  pa = s_divide_content(pa, ca);
  pb = s_divide_content(pb, cb);
  if (s_degree(pa) < s_degree(pb)) std::swap(pa, pb);
  SPoly g;
  while (true) {
    if (s_degree(pb) <= 0) {
      g = SPoly{UPoly{GaussianRational(1)}};
      break;
    }
    SPoly r = s_prem(pa, pb);
    if (r.empty()) {
      g = pb;
      break;
    }
    if (s_degree(r) == 0) {
      g = SPoly{UPoly{GaussianRational(1)}};
      break;
    }
    pa = std::move(pb);
    pb = s_primitive(r);
  }
  g = s_primitive(g);
  for (auto& coeff : g) coeff = u_mul(coeff, c);
  return from_spoly(g).make_monic();
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(GaussianRational c) {
  if (!c.is_zero()) terms_.push_back({{0, 0}, std::move(c)});
}

Poly Poly::monomial(GaussianRational c, Exponent e) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({e, std::move(c)});
  return p;
}

Poly Poly::from_unsorted(std::vector<Term> t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return grlex_less(b.exp, a.exp); });
  std::vector<Term> out;
  out.reserve(t.size());
  for (auto& term : t) {
    if (!out.empty() && out.back().exp == term.exp) {
      out.back().coeff += term.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(term));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return Poly(std::move(out));
}

bool Poly::has_h() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exp.h > 0; });
}

bool Poly::has_s() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exp.s > 0; });
}

int Poly::degree_s() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.exp.s));
  return d;
}

int Poly::degree_h() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.exp.h));
  return d;
}

Exponent Poly::min_exponents() const {
  if (terms_.empty()) return {};
  Exponent m = terms_[0].exp;
  for (const auto& t : terms_) {
    m.s = std::min(m.s, t.exp.s);
    m.h = std::min(m.h, t.exp.h);
  }
  return m;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <class Combine>
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                                    Combine combine, bool negate_b) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  size_t x = 0, y = 0;
  while (x < a.size() || y < b.size()) {
    if (y == b.size() || (x < a.size() && grlex_less(b[y].exp, a[x].exp))) {
      out.push_back(a[x++]);
    } else if (x == a.size() || grlex_less(a[x].exp, b[y].exp)) {
      out.push_back(b[y++]);
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      GaussianRational c = a[x].coeff;
      combine(c, b[y].coeff);
      if (!c.is_zero()) out.push_back({a[x].exp, std::move(c)});
      ++x;
      ++y;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](GaussianRational& c, const GaussianRational& d) { c += d; }, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](GaussianRational& c, const GaussianRational& d) { c -= d; }, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  std::vector<Poly::Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      t.push_back({{std::uint16_t(x.exp.s + y.exp.s), std::uint16_t(x.exp.h + y.exp.h)}, x.coeff * y.coeff});
  return Poly::from_unsorted(std::move(t));
}

Poly Poly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::shifted(Exponent e) const {
  Poly r = *this;
  for (auto& t : r.terms_) {
    t.exp.s += e.s;
    t.exp.h += e.h;
  }
  return r;
}

Poly Poly::unshifted(Exponent e) const {
  Poly r = *this;
  for (auto& t : r.terms_) {
    t.exp.s -= e.s;
    t.exp.h -= e.h;
  }
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].exp != b.terms_[k].exp || a.terms_[k].coeff != b.terms_[k].coeff) return false;
  return true;
}

Poly Poly::exact_div(const Poly& d) const {
  if (d.is_zero()) throw ArithmeticError("division by zero polynomial");
  if (d.is_one()) return *this;
  if (d.is_monomial()) {
    const auto& ld = d.terms_[0];
    GaussianRational inv = ld.coeff.inverse();
    Poly r = *this;
    for (auto& t : r.terms_) {
      if (t.exp.s < ld.exp.s || t.exp.h < ld.exp.h) throw ArithmeticError("inexact polynomial division");
      t.exp.s -= ld.exp.s;
      t.exp.h -= ld.exp.h;
      t.coeff *= inv;
    }
    return r;
  }
  Poly rem = *this;
  std::vector<Term> quot;
  const Term& ld = d.terms_[0];
  const GaussianRational inv = ld.coeff.inverse();
  while (!rem.is_zero()) {
    const Term& lt = rem.terms_[0];
    if (lt.exp.s < ld.exp.s || lt.exp.h < ld.exp.h) throw ArithmeticError("inexact polynomial division");
    Term t{{std::uint16_t(lt.exp.s - ld.exp.s), std::uint16_t(lt.exp.h - ld.exp.h)}, lt.coeff * inv};
    rem -= d.shifted(t.exp).scaled(t.coeff);
    quot.push_back(std::move(t));
  }
  return Poly(std::move(quot));
}

Poly Poly::at_s_one() const {
  std::vector<Term> t;
  for (const auto& term : terms_) t.push_back({{0, term.exp.h}, term.coeff});
  return from_unsorted(std::move(t));
}

Poly Poly::div_s_minus_one() const {
  SPoly p = to_spoly(*this);
  if (p.empty()) return {};
  const int n = s_degree(p);
  SPoly q(n);
  UPoly carry;
  for (int k = n; k >= 1; --k) {
    carry = u_add(p[k], carry);
    q[k - 1] = carry;
  }
  if (!u_add(p[0], carry).empty()) throw ArithmeticError("polynomial not divisible by (s-1)");
  trim(q);
  return from_spoly(q);
}

Poly Poly::conj_coefficients() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = t.coeff.conj();
  return r;
}

Poly Poly::make_monic() const {
  if (terms_.empty() || terms_[0].coeff.is_one()) return *this;
  return scaled(terms_[0].coeff.inverse());
}

namespace {

std::string monomial_text(Exponent e) {
  std::string out;
  auto var = [&](const char* name, int k) {
    if (k == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (k > 1) out += "^" + std::to_string(k);
  };
  var("s", e.s);
  var("h", e.h);
  return out;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const auto& c = t.coeff;
    bool negative = false;
    GaussianRational mag = c;
    if (c.is_real() && sgn(c.re()) < 0) {
      negative = true;
      mag = -c;
    } else if (sgn(c.re()) == 0 && sgn(c.im()) < 0) {
      negative = true;
      mag = -c;
    }
    std::string mono = monomial_text(t.exp);
    std::string body;
    if (mono.empty()) {
      body = mag.to_string();
    } else if (mag.is_one()) {
      body = mono;
    } else {
      body = mag.to_string() + "*" + mono;
    }
    if (first) {
      out = (negative ? "-" : "") + body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.make_monic();
  if (b.is_zero()) return a.make_monic();
  Exponent ma = a.min_exponents(), mb = b.min_exponents();
  Exponent common{std::min(ma.s, mb.s), std::min(ma.h, mb.h)};
  Poly mono = Poly::monomial(1, common);
  if (a.is_monomial() || b.is_monomial()) return mono;
  Poly ra = a.unshifted(ma), rb = b.unshifted(mb);
  if (ra.is_constant() || rb.is_constant()) return mono;
  return gcd_general(ra, rb) * mono;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void Scalar::normalize() {
  if (den_.is_zero()) throw ArithmeticError("division by zero");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  const GaussianRational& lc = den_.leading().coeff;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Reduced{}); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n = num_.exact_div(g1) * o.num_.exact_div(g2);
  Poly d = den_.exact_div(g2) * o.den_.exact_div(g1);
  num_ = std::move(n);
  den_ = std::move(d);
  const GaussianRational& lc = den_.leading().coeff;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (num_.is_zero()) throw ArithmeticError("division by zero");
  Scalar r(den_, num_, Reduced{});
  const GaussianRational& lc = r.den_.leading().coeff;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  bool bare = den_.is_monomial() && d.find('*') == std::string::npos;
  if (!bare) d = "(" + d + ")";
  return n + "/" + d;
}

// ---------------------------------------------------------------------------
// ScalarMap / ConjugationSpec

ScalarMap::ScalarMap() : i_(Scalar::i()), s_(Scalar::s()), h_(Scalar::h()) {}

ScalarMap::ScalarMap(Scalar image_of_i, Scalar image_of_s, Scalar image_of_h)
    : i_(std::move(image_of_i)), s_(std::move(image_of_s)), h_(std::move(image_of_h)) {}

bool ScalarMap::is_identity() const { return i_ == Scalar::i() && s_ == Scalar::s() && h_ == Scalar::h(); }

bool ScalarMap::is_involution() const {
  return (*this)((*this)(Scalar::i())) == Scalar::i() && (*this)((*this)(Scalar::s())) == Scalar::s() &&
         (*this)((*this)(Scalar::h())) == Scalar::h();
}

Scalar ScalarMap::apply_poly(const Poly& p) const {
  if (p.is_zero()) return Scalar();
  std::vector<Scalar> spow{Scalar(1)}, hpow{Scalar(1)};
  Scalar acc;
  for (const auto& t : p.terms()) {
    while (spow.size() <= t.exp.s) spow.push_back(spow.back() * s_);
    while (hpow.size() <= t.exp.h) hpow.push_back(hpow.back() * h_);
    Scalar c(GaussianRational(t.coeff.re()));
    if (sgn(t.coeff.im()) != 0) c += Scalar(GaussianRational(t.coeff.im())) * i_;
    acc += c * spow[t.exp.s] * hpow[t.exp.h];
  }
  return acc;
}

Scalar ScalarMap::operator()(const Scalar& a) const {
  if (is_identity()) return a;
  if (a.num().is_constant() && a.den().is_one() && i_ == -Scalar::i()) return Scalar(a.num().conj_coefficients());
  return apply_poly(a.num()) / apply_poly(a.den());
}

ConjugationSpec::ConjugationSpec(Scalar image_of_i, Scalar image_of_s, Scalar image_of_h)
    : map_(std::move(image_of_i), std::move(image_of_s), std::move(image_of_h)) {
  if (!map_.is_involution()) throw std::invalid_argument("conjugation is not an involution");
}

ConjugationSpec ConjugationSpec::real_q() { return {-Scalar::i(), Scalar::s(), Scalar::h()}; }

ConjugationSpec ConjugationSpec::unimodular_q() { return {-Scalar::i(), Scalar::s().inverse(), Scalar::h()}; }

ConjugationSpec ConjugationSpec::unimodular_q_imaginary_h() {
  return {-Scalar::i(), Scalar::s().inverse(), -Scalar::h()};
}

Scalar conjugate(const Scalar& a, const ConjugationSpec& spec) { return spec(a); }

// ---------------------------------------------------------------------------
// Limits at s = 1

namespace {

int strip_s_minus_one(Poly& p) {
  int k = 0;
  while (!p.is_zero() && p.at_s_one().is_zero()) {
    p = p.div_s_minus_one();
    ++k;
  }
  return k;
}

}  // namespace

Scalar limit_s_to_1(const Scalar& a) {
  Poly num = a.num(), den = a.den();
  int kn = strip_s_minus_one(num);
  int kd = strip_s_minus_one(den);
  if (num.is_zero()) return Scalar();
  if (kd > kn) throw PoleError("pole at s = 1 in " + a.to_string());
  if (kn > kd) return Scalar();
  return Scalar(num.at_s_one(), den.at_s_one());
}

int valuation_at_s_one(const Scalar& a) {
  if (a.is_zero()) return 1 << 20;
  Poly num = a.num(), den = a.den();
  return strip_s_minus_one(num) - strip_s_minus_one(den);
}

Scalar shift_s_minus_one(const Scalar& a, int k) {
  Scalar f = Scalar(Poly::var_s() - Poly(1));
  return a * f.pow(k);
}

}  // namespace qsw
