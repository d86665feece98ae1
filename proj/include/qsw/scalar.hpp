#pragma once

// Exact arithmetic in Q(i)(s,h): Gaussian-rational coefficients, two
// commuting indeterminates. q is always represented as s^2.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qsw {

class ArithmeticError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class PoleError : public ArithmeticError {
public:
  using ArithmeticError::ArithmeticError;
};

class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long n) : re_(n), im_(0) {}  // NOLINT(implicit)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational imaginary_unit() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string to_string() const;

private:
  mpq_class re_;
  mpq_class im_;
};

/// Exponent pair of a monomial s^s h^h. Ordered graded-lex: total degree
/// first, ties broken by the s-degree.
struct Exponent {
  std::uint16_t s = 0;
  std::uint16_t h = 0;

  int total() const { return int(s) + int(h); }
  friend bool operator==(Exponent a, Exponent b) { return a.s == b.s && a.h == b.h; }
  friend bool operator!=(Exponent a, Exponent b) { return !(a == b); }
  friend bool grlex_less(Exponent a, Exponent b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.s < b.s;
  }
};

/// Polynomial in s and h over Q(i). Terms are kept sorted in decreasing
/// graded-lex order with no zero coefficients; the zero polynomial is empty.
class Poly {
public:
  struct Term {
    Exponent exp;
    GaussianRational coeff;
  };

  Poly() = default;
  Poly(GaussianRational c);  // NOLINT(implicit)
  Poly(long c) : Poly(GaussianRational(c)) {}  // NOLINT(implicit)
  static Poly monomial(GaussianRational c, Exponent e);
  static Poly var_s(unsigned power = 1) { return monomial(1, {std::uint16_t(power), 0}); }
  static Poly var_h(unsigned power = 1) { return monomial(1, {0, std::uint16_t(power)}); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.total() == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].exp.total() == 0 && terms_[0].coeff.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_h() const;
  bool has_s() const;
  const Term& leading() const { return terms_.front(); }
  int degree_s() const;
  int degree_h() const;
  Exponent min_exponents() const;  // componentwise minimum; zero poly -> {0,0}

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const GaussianRational& c) const;
  Poly shifted(Exponent e) const;  // multiply by s^e.s h^e.h
  Poly unshifted(Exponent e) const;  // divide by a monomial dividing every term

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Exact quotient; throws ArithmeticError if the division leaves a remainder.
  Poly exact_div(const Poly& d) const;
  /// Value at s = 1 (a polynomial in h).
  Poly at_s_one() const;
  /// Quotient by (s - 1); requires at_s_one() == 0.
  Poly div_s_minus_one() const;
  Poly conj_coefficients() const;
  Poly make_monic() const;

  std::string to_string() const;

private:
  explicit Poly(std::vector<Term> t) : terms_(std::move(t)) {}
  static Poly from_unsorted(std::vector<Term> t);
  std::vector<Term> terms_;
};

/// Greatest common divisor, normalized to be monic in graded-lex order.
Poly gcd(const Poly& a, const Poly& b);

/// Element of Q(i)(s,h) in lowest terms. The denominator is monic with
/// respect to its graded-lex leading term, so equality is structural.
class Scalar {
public:
  Scalar() : num_(), den_(1) {}
  Scalar(long n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Scalar(GaussianRational c) : num_(std::move(c)), den_(1) {}  // NOLINT(implicit)
  Scalar(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(implicit)
  Scalar(Poly num, Poly den);

  static Scalar s() { return Scalar(Poly::var_s()); }
  static Scalar h() { return Scalar(Poly::var_h()); }
  static Scalar q() { return Scalar(Poly::var_s(2)); }
  static Scalar i() { return Scalar(GaussianRational::imaginary_unit()); }
  static Scalar rational(long n, long d) { return Scalar(GaussianRational(mpq_class(n, d))); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool has_h() const { return num_.has_h() || den_.has_h(); }
  bool has_s() const { return num_.has_s() || den_.has_s(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(int e) const;

  /// Canonical text: integers, i, s, h, ^, *, /, parentheses.
  std::string to_string() const;

private:
  struct Reduced {};
  Scalar(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  Poly num_;
  Poly den_;
};

/// Ring map on Q(i)(s,h) fixed by the images of i, s and h. Used both for
/// star conjugations (i -> -i) and for parameter substitutions such as
/// q -> 1/q (i fixed).
class ScalarMap {
public:
  ScalarMap();  // identity
  ScalarMap(Scalar image_of_i, Scalar image_of_s, Scalar image_of_h);

  const Scalar& image_of_i() const { return i_; }
  const Scalar& image_of_s() const { return s_; }
  const Scalar& image_of_h() const { return h_; }
  bool is_identity() const;
  bool is_involution() const;

  Scalar operator()(const Scalar& a) const;

private:
  Scalar apply_poly(const Poly& p) const;
  Scalar i_, s_, h_;
};

/// Conjugation used by star structures; construction rejects maps that are
/// not involutions.
class ConjugationSpec {
public:
  ConjugationSpec(Scalar image_of_i, Scalar image_of_s, Scalar image_of_h);
  const ScalarMap& map() const { return map_; }
  Scalar operator()(const Scalar& a) const { return map_(a); }

  /// q real: s fixed, i -> -i.
  static ConjugationSpec real_q();
  /// |q| = 1: s -> 1/s, i -> -i.
  static ConjugationSpec unimodular_q();
  /// |q| = 1 and h imaginary: s -> 1/s, i -> -i, h -> -h.
  static ConjugationSpec unimodular_q_imaginary_h();

private:
  ScalarMap map_;
};

Scalar conjugate(const Scalar& a, const ConjugationSpec& spec);

/// Cancels every (s-1) factor and evaluates at s = 1. Throws PoleError when
/// the denominator still vanishes there.
Scalar limit_s_to_1(const Scalar& a);

/// Order of vanishing at s = 1 (negative for poles). Zero maps to a large value.
int valuation_at_s_one(const Scalar& a);

/// Multiply by (s-1)^k for any integer k.
Scalar shift_s_minus_one(const Scalar& a, int k);

}  // namespace qsw
