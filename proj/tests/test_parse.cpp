#include "doctest.h"
#include "test_support.hpp"

using namespace liesym;
using liesym::testing::ExprGenOptions;
using liesym::testing::Fixture;
using liesym::testing::Rng;

TEST_CASE("parse: spec forms") {
  Fixture fx;
  SymbolTable& tb = fx.table;
  SymbolId f = tb.function("f", 2);

  SUBCASE("function application with jet power") {
    Expression e = parse(tb, "f(x,u)*u_x^2");
    Expression expect = Expression::apply(f, {0, 0}, {Expression::symbol(fx.x),
                                                      Expression::symbol(fx.u)}) *
                        pow(Expression::jet(JetCoord{1, 0}), 2);
    CHECK(e == expect);
  }
  SUBCASE("zero elimination") {
    Expression e = parse(tb, "u*exp(-x) + 0*t");
    CHECK(e.terms().size() == 1);
    CHECK(e == Expression::symbol(fx.u) *
                   Expression::exponential(LinForm::single(fx.x, rat(-1))));
  }
  SUBCASE("lowest terms") {
    CHECK(parse(tb, "2/4 * u_xx") ==
          rat(1, 2) * Expression::jet(JetCoord{2, 0}));
  }
  SUBCASE("mixed jets canonicalize x-before-t") {
    CHECK(parse(tb, "u_tx") == parse(tb, "u_xt"));
    CHECK(render(tb, parse(tb, "u_tx")) == "u_xt");
  }
  SUBCASE("precedence and unary minus") {
    CHECK(parse(tb, "-x^2") == -pow(Expression::symbol(fx.x), 2));
    CHECK(parse(tb, "2*x + 3*x") == rat(5) * Expression::symbol(fx.x));
    CHECK(parse(tb, "x - t - u") ==
          Expression::symbol(fx.x) - Expression::symbol(fx.t) - Expression::symbol(fx.u));
    CHECK(parse(tb, "u^-2") == pow(Expression::symbol(fx.u), -2));
  }
  SUBCASE("derivative notation, names and indices") {
    Expression by_name = parse(tb, "D[f,x,u](x,u)");
    Expression by_index = parse(tb, "D[f,1,2](x,u)");
    CHECK(by_name == by_index);
    CHECK(by_name == Expression::apply(f, {1, 1}, {Expression::symbol(fx.x),
                                                   Expression::symbol(fx.u)}));
    // second derivative in one slot
    CHECK(parse(tb, "D[f,1,1](x,u)") ==
          Expression::apply(f, {2, 0}, {Expression::symbol(fx.x), Expression::symbol(fx.u)}));
  }
  SUBCASE("errors carry positions and kinds") {
    CHECK_THROWS_AS(parse(tb, "x + "), Error);
    CHECK_THROWS_AS(parse(tb, "y + 1"), Error);          // unknown symbol
    CHECK_THROWS_AS(parse(tb, "f(x)"), Error);           // arity
    CHECK_THROWS_AS(parse(tb, "exp(u*u)"), Error);       // nonlinear exponent
    CHECK_THROWS_AS(parse(tb, "1/(x+u)"), Error);        // non-monomial divisor
    try {
      parse(tb, "x + + u");
      CHECK(false);
    } catch (const Error& err) {
      CHECK(err.kind() == Error::Kind::Syntax);
      CHECK(std::string(err.what()).find("position") != std::string::npos);
    }
  }
}

TEST_CASE("parse-render-parse is a fixed point on random expressions") {
  Fixture fx;
  Rng rng(1234);
  ExprGenOptions opt;
  for (int iter = 0; iter < 120; ++iter) {
    Expression e = random_expression(rng, fx, opt);
    std::string text = render(fx.table, e);
    Expression back = parse(fx.table, text);
    CHECK(back == e);
    CHECK(render(fx.table, back) == text);
  }
}
