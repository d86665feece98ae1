#include "qsw/expr.hpp"

#include <cctype>

namespace qsw {

std::string Symbol::text() const {
  switch (decoration) {
    case Decoration::plain: return base;
    case Decoration::differential: return "d(" + base + ")";
    case Decoration::partial: return "@" + base;
    case Decoration::star: return base + "^*";
    case Decoration::prime: return base + "'";
  }
  return base;
}

Symbol Symbol::from_text(const std::string& t) {
  if (t.size() > 3 && t.compare(0, 2, "d(") == 0 && t.back() == ')') return {t.substr(2, t.size() - 3), Decoration::differential};
  if (t.size() > 1 && t[0] == '@') return {t.substr(1), Decoration::partial};
  if (t.size() > 2 && t.compare(t.size() - 2, 2, "^*") == 0) return {t.substr(0, t.size() - 2), Decoration::star};
  if (t.size() > 1 && t.back() == '\'') return {t.substr(0, t.size() - 1), Decoration::prime};
  return {t, Decoration::plain};
}

Expr Expr::sum(std::vector<Expr> terms) {
  Expr e;
  e.kind = Kind::sum;
  e.children = std::move(terms);
  return e;
}

Expr Expr::product(std::vector<Expr> factors) {
  Expr e;
  e.kind = Kind::product;
  e.children = std::move(factors);
  return e;
}

Expr Expr::quotient(Expr num, Expr den) {
  Expr e;
  e.kind = Kind::quotient;
  e.children = {std::move(num), std::move(den)};
  return e;
}

Expr Expr::neg(Expr inner) {
  Expr e;
  e.kind = Kind::neg;
  e.children = {std::move(inner)};
  return e;
}

Expr Expr::power(Expr base, unsigned n) {
  Expr e;
  e.kind = Kind::power;
  e.children = {std::move(base)};
  e.exponent = n;
  return e;
}

Expr Expr::scalar(std::string literal) {
  Expr e;
  e.kind = Kind::scalar;
  e.literal = std::move(literal);
  return e;
}

Expr Expr::sym(Symbol s) {
  Expr e;
  e.kind = Kind::symbol;
  e.symbol = std::move(s);
  return e;
}

Scalar literal_value(const std::string& lit) {
  if (lit == "i") return Scalar::i();
  if (lit == "s") return Scalar::s();
  if (lit == "q") return Scalar::q();
  if (lit == "h") return Scalar::h();
  return Scalar(GaussianRational(mpq_class(mpz_class(lit))));
}

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expr parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    std::vector<Expr> terms;
    terms.push_back(term());
    while (true) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        terms.push_back(Expr::neg(term()));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return std::move(terms[0]);
    return Expr::sum(std::move(terms));
  }

  Expr term() {
    if (accept('-')) return Expr::neg(term());
    std::vector<Expr> factors;
    factors.push_back(factor());
    while (true) {
      if (accept('*')) {
        factors.push_back(factor());
      } else if (accept('/')) {
        Expr num = factors.size() == 1 ? std::move(factors[0]) : Expr::product(std::move(factors));
        factors.clear();
        factors.push_back(Expr::quotient(std::move(num), factor()));
      } else {
        break;
      }
    }
    if (factors.size() == 1) return std::move(factors[0]);
    return Expr::product(std::move(factors));
  }

  Expr factor() {
    Expr base = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", start);
      if (pos_ - start > 4) throw ParseError("exponent too large", start);
      return Expr::power(std::move(base), unsigned(std::stoul(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  std::string name() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !is_name_start(text_[pos_])) throw ParseError("expected a name", pos_);
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Expr atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (is_name_start(text_[pos_]) || text_[pos_] == '.'))
        throw ParseError("malformed scalar literal", start);
      std::string digits = text_.substr(start, pos_ - start);
      std::size_t nz = digits.find_first_not_of('0');
      digits = nz == std::string::npos ? "0" : digits.substr(nz);
      return Expr::scalar(digits);
    }
    if (c == '@') {
      ++pos_;
      return Expr::sym({name(), Decoration::partial});
    }
    if (!is_name_start(c)) throw ParseError(std::string("unexpected '") + c + "'", pos_);
    std::size_t start = pos_;
    std::string n = name();
    if (n == "d" && pos_ < text_.size() && text_[pos_] == '(') {
      std::size_t save = pos_;
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && is_name_start(text_[pos_])) {
        std::string inner = name();
        if (accept(')')) return Expr::sym({inner, Decoration::differential});
      }
      pos_ = save;
      throw ParseError("malformed differential", start);
    }
    if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == '*') {
      pos_ += 2;
      return Expr::sym({n, Decoration::star});
    }
    if (pos_ < text_.size() && text_[pos_] == '\'') {
      ++pos_;
      return Expr::sym({n, Decoration::prime});
    }
    if (n == "i" || n == "s" || n == "q" || n == "h") return Expr::scalar(n);
    return Expr::sym({n, Decoration::plain});
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

bool is_atom(const Expr& e) { return e.kind == Expr::Kind::scalar || e.kind == Expr::Kind::symbol; }

std::string wrap(const std::string& s) { return "(" + s + ")"; }

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string pretty(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::scalar: return e.literal;
    case K::symbol: return e.symbol.text();
    case K::power: {
      const Expr& b = e.children[0];
      std::string base = pretty(b);
      return (is_atom(b) ? base : wrap(base)) + "^" + std::to_string(e.exponent);
    }
    case K::neg: {
      const Expr& inner = e.children[0];
      std::string t = pretty(inner);
      return "-" + (inner.kind == K::sum ? wrap(t) : t);
    }
    case K::sum: {
      std::string out;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        const Expr& c = e.children[k];
        if (k == 0) {
          out = c.kind == K::sum ? wrap(pretty(c)) : pretty(c);
        } else if (c.kind == K::neg) {
          const Expr& inner = c.children[0];
          out += " - " + (inner.kind == K::sum ? wrap(pretty(inner)) : pretty(inner));
        } else {
          out += " + " + (c.kind == K::sum ? wrap(pretty(c)) : pretty(c));
        }
      }
      return out;
    }
    case K::product: {
      std::string out;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        const Expr& c = e.children[k];
        bool paren = c.kind == K::sum || c.kind == K::neg || c.kind == K::product || (c.kind == K::quotient && k > 0);
        if (k) out += "*";
        out += paren ? wrap(pretty(c)) : pretty(c);
      }
      return out;
    }
    case K::quotient: {
      const Expr& n = e.children[0];
      const Expr& d = e.children[1];
      bool paren_n = n.kind == K::sum || n.kind == K::neg;
      bool paren_d = !(is_atom(d) || d.kind == K::power);
      return (paren_n ? wrap(pretty(n)) : pretty(n)) + "/" + (paren_d ? wrap(pretty(d)) : pretty(d));
    }
  }
  return {};
}

Scalar eval_scalar_expr(const Expr& e) {
  ExprEvaluator<Scalar> ev;
  ev.symbol_value = [](const Symbol& s) -> Scalar { throw UndeclaredSymbol(s.text()); };
  ev.from_scalar = [](const Scalar& c) { return c; };
  ev.multiply = [](const Scalar& a, const Scalar& b) { return a * b; };
  ev.add = [](const Scalar& a, const Scalar& b) { return a + b; };
  ev.negate = [](const Scalar& a) { return -a; };
  ev.as_scalar = [](const Scalar& a) { return a; };
  ev.scale = [](const Scalar& a, const Scalar& c) { return a * c; };
  return ev(e);
}

Scalar parse_scalar(const std::string& text) { return eval_scalar_expr(parse_expr(text)); }

}  // namespace qsw
