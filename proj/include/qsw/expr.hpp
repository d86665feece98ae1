#pragma once

// Text syntax for algebra expressions.
//
//   expr   := term (('+'|'-') term)*
//   term   := '-' term | factor (('*'|'/') factor)*
//   factor := atom ('^' NAT)?
//   atom   := INT | 'i' | 's' | 'q' | 'h' | symbol | '(' expr ')'
//   symbol := NAME | 'd(' NAME ')' | '@' NAME | NAME '^*' | NAME "'"
//
// The right operand of '/' must evaluate to a scalar.

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsw/scalar.hpp"

namespace qsw {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

class UndeclaredSymbol : public std::runtime_error {
public:
  explicit UndeclaredSymbol(const std::string& name)
      : std::runtime_error("undeclared symbol '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

enum class Decoration { plain, differential, partial, star, prime };

struct Symbol {
  std::string base;
  Decoration decoration = Decoration::plain;

  /// Spelling used in expressions and as generator name: x, d(x), @x, x^*, x'.
  std::string text() const;
  static Symbol from_text(const std::string& text);
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

struct Expr {
  enum class Kind { sum, product, quotient, neg, power, scalar, symbol };

  Kind kind = Kind::scalar;
  std::vector<Expr> children;
  unsigned exponent = 0;  // power
  std::string literal;    // scalar: decimal integer or one of i s q h
  Symbol symbol;

  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr quotient(Expr num, Expr den);
  static Expr neg(Expr e);
  static Expr power(Expr base, unsigned n);
  static Expr scalar(std::string literal);
  static Expr sym(Symbol s);

  friend bool operator==(const Expr&, const Expr&) = default;
};

Expr parse_expr(const std::string& text);
std::string pretty(const Expr& e);

/// Value of a scalar literal (q means s^2).
Scalar literal_value(const std::string& literal);

/// Generic evaluation. `symbol_value` resolves each symbol (and should throw
/// UndeclaredSymbol for unknown ones); `from_scalar` embeds scalars.
template <class T>
struct ExprEvaluator {
  std::function<T(const Symbol&)> symbol_value;
  std::function<T(const Scalar&)> from_scalar;
  std::function<T(const T&, const T&)> multiply;
  std::function<T(const T&, const T&)> add;
  std::function<T(const T&)> negate;
  /// Returns nullptr-like failure by throwing when the value is not a scalar.
  std::function<Scalar(const T&)> as_scalar;
  std::function<T(const T&, const Scalar&)> scale;

  T operator()(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::scalar:
        return from_scalar(literal_value(e.literal));
      case Expr::Kind::symbol:
        return symbol_value(e.symbol);
      case Expr::Kind::neg:
        return negate((*this)(e.children[0]));
      case Expr::Kind::sum: {
        T acc = (*this)(e.children[0]);
        for (std::size_t k = 1; k < e.children.size(); ++k) acc = add(acc, (*this)(e.children[k]));
        return acc;
      }
      case Expr::Kind::product: {
        T acc = (*this)(e.children[0]);
        for (std::size_t k = 1; k < e.children.size(); ++k) acc = multiply(acc, (*this)(e.children[k]));
        return acc;
      }
      case Expr::Kind::quotient: {
        Scalar d = as_scalar((*this)(e.children[1]));
        if (d.is_zero()) throw ArithmeticError("division by zero in expression");
        return scale((*this)(e.children[0]), d.inverse());
      }
      case Expr::Kind::power: {
        T base = (*this)(e.children[0]);
        T acc = from_scalar(Scalar(1));
        for (unsigned k = 0; k < e.exponent; ++k) acc = multiply(acc, base);
        return acc;
      }
    }
    throw std::logic_error("bad expression node");
  }
};

/// Evaluates an expression that contains no symbols.
Scalar eval_scalar_expr(const Expr& e);
Scalar parse_scalar(const std::string& text);

}  // namespace qsw
