#include <doctest.h>

#include "qsw/expr.hpp"

using namespace qsw;

TEST_CASE("parse and pretty round trip") {
  for (const char* text : {"xi*eta + q*eta*xi", "d(x)*x - s^3*x*d(x)", "@eta*xi^2", "(1 - q)/2*a^**b", "-x'"}) {
    Expr e = parse_expr(text);
    CHECK(parse_expr(pretty(e)) == e);
  }
}

TEST_CASE("symbol decorations") {
  CHECK(Symbol::from_text("d(x)").decoration == Decoration::differential);
  CHECK(Symbol::from_text("@xi").decoration == Decoration::partial);
  CHECK(Symbol::from_text("a^*").decoration == Decoration::star);
  CHECK(Symbol::from_text("t'").decoration == Decoration::prime);
  for (const char* t : {"x", "d(x)", "@eta", "alpha^*", "x'"}) CHECK(Symbol::from_text(t).text() == t);
}

TEST_CASE("scalar expressions") {
  CHECK(parse_scalar("q") == Scalar::s() * Scalar::s());
  CHECK(parse_scalar("(q - 1)/(s - 1)") == Scalar::s() + Scalar(1));
  CHECK(parse_scalar("i^2") == Scalar(-1));
  CHECK(parse_scalar("3/6") == Scalar::rational(1, 2));
}

TEST_CASE("parse errors carry the byte offset") {
  try {
    parse_expr("x + * y");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse_expr("(x + y"), ParseError);
  CHECK_THROWS_AS(parse_scalar("x / y"), std::exception);
}
