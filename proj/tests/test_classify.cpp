#include "doctest.h"
#include "liesym/workspace.hpp"
#include "test_support.hpp"

using namespace liesym;

namespace {

struct ClsFixture {
  Workspace ws = Workspace::bundled();
  Workspace::Built built = ws.build();
  const EquationContext& ctx() const { return *built.ctx; }
};

}  // namespace

TEST_CASE("project: drops d_t, keeps the restricted shape") {
  ClsFixture fx;
  const EquationContext& ctx = fx.ctx();

  SUBCASE("Y^12 projects to d_x + u d_u") {
    VectorField y;
    y.set(ctx.et, Expression::symbol(ctx.et));
    y.set(ctx.ex, Expression::integer(1));
    y.set(ctx.eu, Expression::symbol(ctx.eu));
    auto z = project(ctx, y);
    REQUIRE(z.has_value());
    CHECK(z->alpha == 1);
    CHECK(z->beta == 1);
    CHECK(z->beta0 == 0);
    CHECK(z->gamma == 0);
    CHECK(render_field(ctx.eq, z->field) == "d_x + u*d_u");
  }
  SUBCASE("d_t projects to none") {
    CHECK(!project(ctx, VectorField::direction(ctx.et)).has_value());
  }
  SUBCASE("Y^4 projects to u d_u - 2f d_f - g d_g") {
    VectorField y;
    y.set(ctx.et, Expression::symbol(ctx.et));
    y.set(ctx.eu, Expression::symbol(ctx.eu));
    y.set(ctx.ef, rat(-2) * Expression::symbol(ctx.ef));
    y.set(ctx.eg, -Expression::symbol(ctx.eg));
    auto z = project(ctx, y);
    REQUIRE(z.has_value());
    CHECK(z->alpha == 0);
    CHECK(z->beta == 1);
    CHECK(z->gamma == -2);
    CHECK(z->delta == -1);
  }
  SUBCASE("outside the restricted shape errors") {
    VectorField y;
    y.set(ctx.ex, Expression::symbol(ctx.eu));  // non-constant d_x coefficient
    CHECK_THROWS_AS(project(ctx, y), Error);
  }
}

TEST_CASE("invariants: closed forms with annihilation checks") {
  ClsFixture fx;
  const EquationContext& ctx = fx.ctx();
  Expression u = Expression::symbol(ctx.eu);
  Expression f = Expression::symbol(ctx.ef);
  Expression g = Expression::symbol(ctx.eg);
  Expression x = Expression::symbol(ctx.ex);

  auto zop = [&](long a, long b, long b0, long c, long d) {
    VectorField v;
    if (a) v.set(ctx.ex, Expression::integer(a));
    v.set(ctx.eu, rat(b) * u + Expression::integer(b0));
    if (c) v.set(ctx.ef, rat(c) * f);
    if (d) v.set(ctx.eg, rat(d) * g);
    return *project(ctx, v);
  };

  SUBCASE("Z^2 = d_u") {
    InvariantBasis inv = invariants(ctx, zop(0, 0, 1, 0, 0));
    CHECK(inv.lambda == x);
    CHECK(inv.i_f == f);
    CHECK(inv.i_g == g);
  }
  SUBCASE("Z^6: exponential case") {
    InvariantBasis inv = invariants(ctx, zop(1, -1, 0, 4, 2));
    CHECK(inv.lambda == u * Expression::exponential(LinForm::single(ctx.ex, rat(1))));
    CHECK(inv.i_f == f * Expression::exponential(LinForm::single(ctx.ex, rat(-4))));
    CHECK(inv.i_g == g * Expression::exponential(LinForm::single(ctx.ex, rat(-2))));
  }
  SUBCASE("Z^3: power case") {
    InvariantBasis inv = invariants(ctx, zop(0, 1, 0, -2, -1));
    CHECK(inv.lambda == x);
    CHECK(inv.i_f == f * pow(u, 2));
    CHECK(inv.i_g == g * u);
  }
  SUBCASE("non-integer exponent in the power case is an error") {
    CHECK_THROWS_AS(invariants(ctx, zop(0, 2, 0, -1, 0)), Error);
  }
  SUBCASE("annihilation holds for every bundled operator") {
    for (const auto& zf : fx.built.printed_z) {
      auto z = project(ctx, zf);
      REQUIRE(z.has_value());
      InvariantBasis inv = invariants(ctx, *z);
      CHECK(z->field.apply(inv.lambda).is_zero());
      CHECK(z->field.apply(inv.i_f).is_zero());
      CHECK(z->field.apply(inv.i_g).is_zero());
    }
  }
  SUBCASE("scaling robustness: c*Z gives the same induced forms") {
    InvariantBasis a = invariants(ctx, zop(1, -1, 0, 4, 2));
    VectorField scaled;
    scaled.set(ctx.ex, Expression::integer(3));
    scaled.set(ctx.eu, rat(-3) * u);
    scaled.set(ctx.ef, rat(12) * f);
    scaled.set(ctx.eg, rat(6) * g);
    InvariantBasis b = invariants(ctx, *project(ctx, scaled));
    CHECK(a.lambda == b.lambda);
    CHECK(a.i_f == b.i_f);
    CHECK(a.i_g == b.i_g);
  }
}

TEST_CASE("build_table: six rows, exact verification outcomes, full deltas") {
  ClsFixture fx;
  const EquationContext& ctx = fx.ctx();
  ClassificationReport report =
      build_table(ctx, *fx.built.optimal, fx.built.printed_z, fx.ws.classification_fixture());

  REQUIRE(report.rows.size() == 6);
  CHECK(report.verifications_performed == 16);
  CHECK(report.verifications_passed == 7);

  SUBCASE("row shapes and forms") {
    const ClassificationRow& r3 = report.rows[2];
    Expression u = Expression::symbol(ctx.su);
    Expression phi_x = Expression::apply(ctx.sPhi, {0}, {Expression::symbol(ctx.sx)});
    Expression psi_x = Expression::apply(ctx.sPsi, {0}, {Expression::symbol(ctx.sx)});
    CHECK(r3.f_form == pow(u, -2) * phi_x);
    CHECK(r3.g_form == pow(u, -1) * psi_x);

    const ClassificationRow& r4 = report.rows[3];
    Expression e2x = Expression::exponential(LinForm::single(ctx.sx, rat(2)));
    Expression ex = Expression::exponential(LinForm::single(ctx.sx, rat(1)));
    Expression uu = Expression::symbol(ctx.su);
    Expression phi_u = Expression::apply(ctx.sPhi, {0}, {uu});
    Expression psi_u = Expression::apply(ctx.sPsi, {0}, {uu});
    CHECK(r4.f_form == e2x * phi_u);
    CHECK(r4.g_form == ex * psi_u);
  }

  SUBCASE("rows 1-3 verify completely; rows 4-6 candidates all fail") {
    for (int i : {0, 1, 2}) {
      for (const auto& cand : report.rows[static_cast<std::size_t>(i)].candidates) {
        CHECK(cand.verified);
      }
    }
    CHECK(report.rows[0].candidates.size() == 3);
    CHECK(report.rows[1].candidates.size() == 1);
    CHECK(report.rows[2].candidates.size() == 3);
    for (int i : {3, 4, 5}) {
      const auto& row = report.rows[static_cast<std::size_t>(i)];
      CHECK(!row.candidates.empty());
      for (const auto& cand : row.candidates) {
        CHECK(!cand.verified);
        // exact witness: residual = -2 f u_x^2 - g u_xx in the row's forms
        Expression ux = Expression::jet(JetCoord{1, 0});
        Expression uxx = Expression::jet(JetCoord{2, 0});
        CHECK(cand.residual == rat(-2) * row.f_form * pow(ux, 2) - row.g_form * uxx);
      }
    }
  }

  SUBCASE("rows 1-2 match the fixture byte-for-byte") {
    for (const auto& d : report.deltas) {
      CHECK(d.find("row 1 ") == std::string::npos);
      CHECK(d.find("row 2 ") == std::string::npos);
    }
  }

  SUBCASE("rows 3-6 deltas name exactly the printed cells") {
    auto has_delta = [&](const std::string& needle) {
      for (const auto& d : report.deltas) {
        if (d.find(needle) != std::string::npos) return true;
      }
      return false;
    };
    CHECK(has_delta("row 3 f: machine 'u^-2*Phi(x)' vs printed 'u^2*Phi(x)'"));
    CHECK(has_delta("row 3 g: machine 'u^-1*Psi(x)' vs printed 'u*Psi(x)'"));
    CHECK(has_delta("row 4 f: machine 'exp(2*x)*Phi(u)' vs printed 'exp(x^2)*Phi(u)'"));
    CHECK(has_delta("row 5 g: machine 'Psi(lambda)' vs printed 'u*Psi(lambda)'"));
    CHECK(has_delta("row 6 f: machine 'exp(4*x)*Phi(lambda)' vs printed 'exp(x^4)*Phi(lambda)'"));
    CHECK(has_delta("row 6 g: machine 'exp(2*x)*Psi(lambda)' vs printed 'exp(x^2)*Psi(lambda)'"));
    CHECK(has_delta("row 6 invariant: machine 'u*exp(x)' vs printed '-u^-1'"));
    // no f-cell delta for row 4's g, no deltas for row 4 operators
    CHECK(!has_delta("row 4 g:"));
    CHECK(!has_delta("row 4 operators"));
    // membership deltas for the misprinted representative 16
    CHECK(has_delta("row 3 members"));
    CHECK(has_delta("row 6 members"));
  }

  SUBCASE("published additional operators are exactly the verified ones") {
    int published = 0;
    for (const auto& row : report.rows) published += static_cast<int>(row.additional_operators().size());
    CHECK(published == 7);
  }
}

TEST_CASE("projection consistency: operators sharing a projection share invariants") {
  ClsFixture fx;
  const EquationContext& ctx = fx.ctx();
  const auto& osys = *fx.built.optimal;
  const auto& reps = osys.representatives();
  // Y^5, Y^10, Y^11 all project onto Z^4
  auto inv_of = [&](int rep_index) {
    VectorField y = osys.normalization_algebra().from_coefficients(
        reps[static_cast<std::size_t>(rep_index - 1)].combo);
    return invariants(ctx, *project(ctx, y));
  };
  InvariantBasis a = inv_of(5), b = inv_of(10), c = inv_of(11);
  CHECK(a.lambda == b.lambda);
  CHECK(a.i_f == b.i_f);
  CHECK(a.i_g == b.i_g);
  CHECK(a.lambda == c.lambda);
  CHECK(a.i_f == c.i_f);
  CHECK(a.i_g == c.i_g);
}
