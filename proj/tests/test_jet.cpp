#include "doctest.h"
#include "liesym/jet.hpp"
#include "test_support.hpp"

using namespace liesym;
using liesym::testing::ExprGenOptions;
using liesym::testing::Fixture;
using liesym::testing::Rng;

namespace {

struct JetFixture : Fixture {
  JetSpace js{x, t, u, 4};

  Expression ux = Expression::jet(JetCoord{1, 0});
  Expression ut = Expression::jet(JetCoord{0, 1});
  Expression uxx = Expression::jet(JetCoord{2, 0});
  Expression uxt = Expression::jet(JetCoord{1, 1});
  Expression utt = Expression::jet(JetCoord{0, 2});
};

}  // namespace

TEST_CASE("total derivatives") {
  JetFixture fx;
  CHECK(fx.js.total_derivative(Expression::symbol(fx.u), fx.x) == fx.ux);
  CHECK(fx.js.total_derivative(Expression::symbol(fx.x) * Expression::symbol(fx.u), fx.t) ==
        Expression::symbol(fx.x) * fx.ut);
  // chain rule through an arbitrary-function atom: D_x F(x,u) = F_x + F_u u_x
  Expression f = parse(fx.table, "F(x,u)");
  CHECK(fx.js.total_derivative(f, fx.x) ==
        parse(fx.table, "D[F,x](x,u) + D[F,u](x,u)*u_x"));

  SUBCASE("order cap overflow is a named hard error") {
    Expression top = Expression::jet(JetCoord{4, 0});
    try {
      fx.js.total_derivative(top, fx.x);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == Error::Kind::OrderCap);
      CHECK(std::string(e.what()).find("u_xxxxx") != std::string::npos);
    }
  }
  SUBCASE("cap below 3 is rejected") {
    CHECK_THROWS_AS(JetSpace(fx.x, fx.t, fx.u, 2), Error);
  }
}

TEST_CASE("total derivatives commute") {
  JetFixture fx;
  Rng rng(5150);
  ExprGenOptions opt;
  opt.allow_func = false;
  int done = 0;
  for (int iter = 0; iter < 200; ++iter) {
    Expression e = liesym::testing::random_expression(rng, fx, opt);
    Expression xt = fx.js.total_derivative(fx.js.total_derivative(e, fx.x), fx.t);
    Expression tx = fx.js.total_derivative(fx.js.total_derivative(e, fx.t), fx.x);
    CHECK(xt == tx);
    ++done;
  }
  CHECK(done == 200);
}

TEST_CASE("characteristics") {
  JetFixture fx;
  VectorField dt = VectorField::direction(fx.t);
  CHECK(characteristic(fx.js, dt).q == -fx.ut);

  VectorField scaling;  // t d_t + u d_u
  scaling.set(fx.t, Expression::symbol(fx.t));
  scaling.set(fx.u, Expression::symbol(fx.u));
  CHECK(characteristic(fx.js, scaling).q ==
        Expression::symbol(fx.u) - Expression::symbol(fx.t) * fx.ut);

  VectorField dxu = VectorField::direction(fx.x) + VectorField::single(fx.u, Expression::symbol(fx.u));
  CHECK(characteristic(fx.js, dxu).q == Expression::symbol(fx.u) - fx.ux);
}

TEST_CASE("second prolongation: closed-form cases") {
  JetFixture fx;

  SUBCASE("translation has zero prolongation") {
    ProlongedField p = prolong2(fx.js, VectorField::direction(fx.t));
    CHECK(p.phi_x.is_zero());
    CHECK(p.phi_t.is_zero());
    CHECK(p.phi_xx.is_zero());
    CHECK(p.phi_xt.is_zero());
  }
  SUBCASE("t d_t + u d_u") {
    VectorField v;
    v.set(fx.t, Expression::symbol(fx.t));
    v.set(fx.u, Expression::symbol(fx.u));
    ProlongedField p = prolong2(fx.js, v);
    CHECK(p.phi_x == fx.ux);
    CHECK(p.phi_t.is_zero());
    CHECK(p.phi_xx == fx.uxx);
    CHECK(p.phi_xt.is_zero());
  }
  SUBCASE("x d_x") {
    VectorField v = VectorField::single(fx.x, Expression::symbol(fx.x));
    ProlongedField p = prolong2(fx.js, v);
    CHECK(p.phi_x == -fx.ux);
    CHECK(p.phi_xx == rat(-2) * fx.uxx);
    CHECK(p.phi_t.is_zero());
    CHECK(p.phi_xt == -fx.uxt);
  }
}

namespace {

VectorField random_field(Rng& rng, const JetFixture& fx) {
  auto coeff = [&] {
    // polynomial in (x,t,u) of low degree
    Expression e = Expression::rational(rng.rational(3, 2));
    if (rng.below(2)) e += rng.rational(3, 2) * Expression::symbol(fx.x);
    if (rng.below(2)) e += rng.rational(3, 2) * Expression::symbol(fx.t);
    if (rng.below(2)) e += rng.rational(3, 2) * Expression::symbol(fx.u);
    if (rng.below(3) == 0) e += rng.rational(2, 1) * Expression::symbol(fx.x) * Expression::symbol(fx.u);
    return e;
  };
  VectorField v;
  v.set(fx.x, coeff());
  v.set(fx.t, coeff());
  v.set(fx.u, coeff());
  return v;
}

}  // namespace

TEST_CASE("prolongation is linear in the field") {
  JetFixture fx;
  Rng rng(808);
  for (int iter = 0; iter < 25; ++iter) {
    VectorField a = random_field(rng, fx);
    VectorField b = random_field(rng, fx);
    Rat ca = rng.rational(), cb = rng.rational();
    ProlongedField pa = prolong2(fx.js, a);
    ProlongedField pb = prolong2(fx.js, b);
    ProlongedField pc = prolong2(fx.js, ca * a + cb * b);
    CHECK(pc.phi_x == ca * pa.phi_x + cb * pb.phi_x);
    CHECK(pc.phi_t == ca * pa.phi_t + cb * pb.phi_t);
    CHECK(pc.phi_xx == ca * pa.phi_xx + cb * pb.phi_xx);
    CHECK(pc.phi_xt == ca * pa.phi_xt + cb * pb.phi_xt);
  }
}

TEST_CASE("prolongation coefficients match the characteristic form") {
  // phi^i = D_i Q + xi1 u_{xi} + xi2 u_{ti}, for i in {x, t}
  JetFixture fx;
  Rng rng(909);
  for (int iter = 0; iter < 25; ++iter) {
    VectorField v = random_field(rng, fx);
    ProlongedField p = prolong2(fx.js, v);
    Expression q = characteristic(fx.js, v).q;
    const Expression& xi1 = v.coefficient(fx.x);
    const Expression& xi2 = v.coefficient(fx.t);
    CHECK(p.phi_x == fx.js.total_derivative(q, fx.x) + xi1 * fx.uxx + xi2 * fx.uxt);
    CHECK(p.phi_t == fx.js.total_derivative(q, fx.t) + xi1 * fx.uxt + xi2 * fx.utt);
  }
}

TEST_CASE("fields with jet-bearing coefficients are rejected") {
  JetFixture fx;
  VectorField bad = VectorField::single(fx.x, fx.ux);
  CHECK_THROWS_AS(prolong2(fx.js, bad), Error);
  CHECK_THROWS_AS(characteristic(fx.js, bad), Error);
}
