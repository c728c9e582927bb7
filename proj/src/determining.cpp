#include "liesym/determining.hpp"

#include <set>

#include "liesym/render.hpp"

namespace liesym {

EquationContext::EquationContext() {
  sx = sym.coordinate("x");
  st = sym.coordinate("t");
  su = sym.coordinate("u");
  sf = sym.function("f", 2);
  sg = sym.function("g", 2);
  sPhi = sym.function("Phi", 1);
  sPsi = sym.function("Psi", 1);
  sxi1 = sym.function("xi1", 3);
  sxi2 = sym.function("xi2", 3);
  sphi = sym.function("phi", 3);
  slambda = sym.constant("lambda");

  ex = eq.coordinate("x");
  et = eq.coordinate("t");
  eu = eq.coordinate("u");
  ef = eq.coordinate("f");
  eg = eq.coordinate("g");
  ef_x = eq.coordinate("f_x");
  ef_u = eq.coordinate("f_u");
  ef_t = eq.coordinate("f_t");
  eg_x = eq.coordinate("g_x");
  eg_u = eq.coordinate("g_u");
  eg_t = eq.coordinate("g_t");
  ea = eq.function("a", 1);
  eb = eq.function("b", 1);
  ec1 = eq.constant("c1");
  ec2 = eq.constant("c2");
  es = eq.group_parameter("s");
  es1 = eq.group_parameter("s1");
  es2 = eq.group_parameter("s2");
}

Expression EquationContext::f_symbolic() const {
  return Expression::apply(sf, {0, 0}, {Expression::symbol(sx), Expression::symbol(su)});
}

Expression EquationContext::g_symbolic() const {
  return Expression::apply(sg, {0, 0}, {Expression::symbol(sx), Expression::symbol(su)});
}

static Expression ternary(const EquationContext& ctx, SymbolId fn) {
  return Expression::apply(fn, {0, 0, 0},
                           {Expression::symbol(ctx.sx), Expression::symbol(ctx.st),
                            Expression::symbol(ctx.su)});
}

Expression EquationContext::xi1_symbolic() const { return ternary(*this, sxi1); }
Expression EquationContext::xi2_symbolic() const { return ternary(*this, sxi2); }
Expression EquationContext::phi_symbolic() const { return ternary(*this, sphi); }

// ---------------------------------------------------------------------------

namespace {

void require_t_free(const EquationContext& ctx, const Expression& e, const char* what) {
  if (contains_var(e, Var{ctx.st})) {
    throw Error(Error::Kind::Domain, std::string(what) + " must not depend on t");
  }
}

// All jet atoms occurring anywhere in e (including function arguments).
std::set<std::pair<int, int>> jet_atoms(const Expression& e) {
  std::set<std::pair<int, int>> out;
  auto walk = [&](auto&& self, const Expression& ex) -> void {
    for (const auto& t : ex.terms()) {
      for (const auto& pa : t.factors) {
        if (std::holds_alternative<JetCoord>(pa.atom)) {
          const auto& j = std::get<JetCoord>(pa.atom);
          out.insert({j.nx, j.nt});
        } else if (std::holds_alternative<FuncPtr>(pa.atom)) {
          for (const auto& arg : std::get<FuncPtr>(pa.atom)->args) self(self, arg);
        }
      }
    }
  };
  walk(walk, e);
  return out;
}

Collected collect_jets(const SymbolTable& table, const Expression& e) {
  std::vector<Atom> basis;
  for (const auto& [nx, nt] : jet_atoms(e)) basis.push_back(Atom{JetCoord{nx, nt}});
  return collect(table, e, basis);
}

}  // namespace

Expression symmetry_residual(const EquationContext& ctx, const VectorField& field,
                             const Expression& f, const Expression& g) {
  require_t_free(ctx, f, "f");
  require_t_free(ctx, g, "g");
  JetSpace js = ctx.sym_jet();
  ProlongedField pr = prolong2(js, field);

  const Expression& xi1 = field.coefficient(ctx.sx);
  const Expression& phi = field.coefficient(ctx.su);
  Expression ux = Expression::jet(JetCoord{1, 0});
  Expression uxx = Expression::jet(JetCoord{2, 0});

  Expression fx = differentiate(f, Var{ctx.sx});
  Expression fu = differentiate(f, Var{ctx.su});
  Expression gx = differentiate(g, Var{ctx.sx});
  Expression gu = differentiate(g, Var{ctx.su});

  Expression residual = pr.phi_t - (fx * xi1 + fu * phi) * pow(ux, 2) -
                        (gx * xi1 + gu * phi) * uxx - rat(2) * f * pr.phi_x * ux -
                        g * pr.phi_xx;

  Bindings elim;
  elim.vars[Var{JetCoord{0, 1}}] = f * pow(ux, 2) + g * uxx;
  return substitute(ctx.sym, residual, elim);
}

DeterminingSystem determining_system(const EquationContext& ctx, const VectorField& field,
                                     const Expression& f, const Expression& g) {
  DeterminingSystem out;
  out.residual = symmetry_residual(ctx, field, f, g);
  out.items = collect_jets(ctx.sym, out.residual);
  return out;
}

EquivalenceResiduals equivalence_residuals(const EquationContext& ctx,
                                           const EquivalenceField& field) {
  for (const auto& [d, coeff] : field.base.components()) {
    if (d != ctx.ex && d != ctx.et && d != ctx.eu) {
      throw Error(Error::Kind::Domain, "equivalence base field must live on (x,t,u)");
    }
    if (contains_var(coeff, Var{ctx.ef}) || contains_var(coeff, Var{ctx.eg})) {
      throw Error(Error::Kind::Domain, "xi1, xi2, phi must not depend on f or g");
    }
  }
  for (const Expression* e : {&field.mu, &field.nu}) {
    if (!jet_atoms(*e).empty()) {
      throw Error(Error::Kind::Domain, "mu and nu must not contain jet coordinates");
    }
  }

  JetSpace js = ctx.eq_jet();
  ProlongedField pr = prolong2(js, field.base);
  Expression ux = Expression::jet(JetCoord{1, 0});
  Expression uxx = Expression::jet(JetCoord{2, 0});
  Expression f = Expression::symbol(ctx.ef);
  Expression g = Expression::symbol(ctx.eg);

  EquivalenceResiduals out;
  Expression main = pr.phi_t - rat(2) * f * ux * pr.phi_x - g * pr.phi_xx -
                    field.mu * pow(ux, 2) - field.nu * uxx;
  Bindings elim;
  elim.vars[Var{JetCoord{0, 1}}] = f * pow(ux, 2) + g * uxx;
  out.main = substitute(ctx.eq, main, elim);

  // mu^t = Dt(mu) - f_x Dt(xi1) - f_u Dt(phi) with Dt = d/dt extended through
  // the differential variables f, g; then f_t = g_t = 0 is imposed.
  const Expression& xi1 = field.base.coefficient(ctx.ex);
  const Expression& phi = field.base.coefficient(ctx.eu);
  auto ext_dt = [&](const Expression& e) {
    return differentiate(e, Var{ctx.et}) +
           Expression::symbol(ctx.ef_t) * differentiate(e, Var{ctx.ef}) +
           Expression::symbol(ctx.eg_t) * differentiate(e, Var{ctx.eg});
  };
  Expression mu_t = ext_dt(field.mu) -
                    Expression::symbol(ctx.ef_x) * differentiate(xi1, Var{ctx.et}) -
                    Expression::symbol(ctx.ef_u) * differentiate(phi, Var{ctx.et});
  Expression nu_t = ext_dt(field.nu) -
                    Expression::symbol(ctx.eg_x) * differentiate(xi1, Var{ctx.et}) -
                    Expression::symbol(ctx.eg_u) * differentiate(phi, Var{ctx.et});
  Bindings stationary;
  stationary.vars[Var{ctx.ef_t}] = Expression();
  stationary.vars[Var{ctx.eg_t}] = Expression();
  out.ft = substitute(ctx.eq, mu_t, stationary);
  out.gt = substitute(ctx.eq, nu_t, stationary);
  return out;
}

EquivalenceField equivalence_family_field(const EquationContext& ctx,
                                          const std::optional<Expression>& a,
                                          const std::optional<Expression>& b,
                                          const Expression& c1, const Expression& c2,
                                          FamilyForm form) {
  Expression xexpr = Expression::symbol(ctx.ex);
  Expression a_expr = a ? *a : Expression::apply(ctx.ea, {0}, {xexpr});
  Expression b_expr = b ? *b : Expression::apply(ctx.eb, {0}, {xexpr});
  Expression a_prime = differentiate(a_expr, Var{ctx.ex});

  EquivalenceField out;
  out.base.set(ctx.ex, a_expr);
  out.base.set(ctx.et, c1 * Expression::symbol(ctx.et) + c2);
  out.base.set(ctx.eu, c1 * Expression::symbol(ctx.eu) + b_expr);
  Expression f = Expression::symbol(ctx.ef);
  Expression g = Expression::symbol(ctx.eg);
  if (form == FamilyForm::AsPrinted) {
    out.mu = rat(-2) * f * (c1 - a_expr);
    out.nu = -(g * (c1 - a_prime));
  } else {
    out.mu = rat(-2) * f * (c1 - a_prime);
    out.nu = -(g * (c1 - rat(2) * a_prime));
  }
  return out;
}

DeterminingSystem check_equivalence_family(const EquationContext& ctx,
                                           const std::optional<Expression>& a,
                                           const std::optional<Expression>& b,
                                           const Expression& c1, const Expression& c2,
                                           FamilyForm form) {
  EquivalenceField field = equivalence_family_field(ctx, a, b, c1, c2, form);
  EquivalenceResiduals res = equivalence_residuals(ctx, field);
  DeterminingSystem out;
  out.residual = res.main;
  out.items = collect_jets(ctx.eq, res.main);
  // mu^t, nu^t join the system under the empty monomial convention only if
  // nonzero; for this family they vanish identically.
  if (!res.ft.is_zero() || !res.gt.is_zero()) {
    Expression extra = res.ft + res.gt;
    auto [it, inserted] = out.items.try_emplace(Monomial{}, extra);
    if (!inserted) it->second += extra;
  }
  return out;
}

}  // namespace liesym
