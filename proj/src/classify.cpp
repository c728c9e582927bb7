#include "liesym/classify.hpp"

#include <algorithm>

#include "liesym/evaluate.hpp"
#include "liesym/render.hpp"

namespace liesym {

namespace {

// coefficient patterns of the restricted shape
Rat expect_constant(const Expression& e, const char* what) {
  if (e.is_zero()) return rat(0);
  if (const Rat* r = e.as_rational()) return *r;
  throw Error(Error::Kind::Domain, std::string("projection outside the restricted shape: ") +
                                       what + " coefficient is not constant");
}

void expect_linear_in(const Expression& e, SymbolId var, Rat* slope, Rat* offset,
                      const char* what) {
  *slope = rat(0);
  *offset = rat(0);
  for (const auto& t : e.terms()) {
    if (t.factors.empty()) {
      *offset += t.coeff;
    } else if (t.factors.size() == 1 && t.factors[0].power == 1 &&
               std::holds_alternative<SymbolId>(t.factors[0].atom) &&
               std::get<SymbolId>(t.factors[0].atom) == var) {
      *slope += t.coeff;
    } else {
      throw Error(Error::Kind::Domain,
                  std::string("projection outside the restricted shape: ") + what);
    }
  }
}

Expression transfer_xtu(const EquationContext& ctx, const Expression& e) {
  // rebuilds an (x,t,u)-polynomial from the equivalence table on the
  // symmetry table
  std::vector<Term> out;
  for (const auto& t : e.terms()) {
    Term nt;
    nt.coeff = t.coeff;
    for (const auto& pa : t.factors) {
      if (!std::holds_alternative<SymbolId>(pa.atom)) {
        throw Error(Error::Kind::Domain, "cannot transfer non-coordinate atom");
      }
      SymbolId s = std::get<SymbolId>(pa.atom);
      SymbolId mapped;
      if (s == ctx.ex) {
        mapped = ctx.sx;
      } else if (s == ctx.et) {
        mapped = ctx.st;
      } else if (s == ctx.eu) {
        mapped = ctx.su;
      } else {
        throw Error(Error::Kind::Domain, "cannot transfer atom outside (x,t,u)");
      }
      nt.factors.push_back(PowAtom{Atom{mapped}, pa.power});
    }
    out.push_back(std::move(nt));
  }
  return Expression::from_terms(std::move(out));
}

}  // namespace

std::optional<ProjectedOperator> project(const EquationContext& ctx, const VectorField& y) {
  ProjectedOperator z;
  z.alpha = expect_constant(y.coefficient(ctx.ex), "d_x");
  expect_linear_in(y.coefficient(ctx.eu), ctx.eu, &z.beta, &z.beta0, "d_u");
  Rat fslope, foff, gslope, goff;
  expect_linear_in(y.coefficient(ctx.ef), ctx.ef, &fslope, &foff, "d_f");
  expect_linear_in(y.coefficient(ctx.eg), ctx.eg, &gslope, &goff, "d_g");
  if (foff != 0 || goff != 0) {
    throw Error(Error::Kind::Domain, "projection outside the restricted shape: d_f/d_g");
  }
  z.gamma = fslope;
  z.delta = gslope;
  if (z.alpha == 0 && z.beta == 0 && z.beta0 == 0) return std::nullopt;

  z.field = VectorField();
  if (z.alpha != 0) z.field.set(ctx.ex, Expression::rational(z.alpha));
  Expression ucoeff = z.beta * Expression::symbol(ctx.eu) + Expression::rational(z.beta0);
  z.field.set(ctx.eu, ucoeff);
  if (z.gamma != 0) z.field.set(ctx.ef, z.gamma * Expression::symbol(ctx.ef));
  if (z.delta != 0) z.field.set(ctx.eg, z.delta * Expression::symbol(ctx.eg));
  return z;
}

namespace {

Expression exp_in(SymbolId s, const Rat& k) {
  return Expression::exponential(LinForm::single(s, k));
}

void check_annihilation(const EquationContext& ctx, const ProjectedOperator& z,
                        const InvariantBasis& inv) {
  for (const Expression* e : {&inv.lambda, &inv.i_f, &inv.i_g}) {
    if (!z.field.apply(*e).is_zero()) {
      throw Error(Error::Kind::Domain, "invariant fails the annihilation check");
    }
  }
  // functional independence: the Jacobian over (x,u,f,g) has rank 3 at a
  // generic rational point with x = 0 (the (u,f,g) minor alone is singular
  // for the lambda = x rows)
  EvalContext ec;
  ec.values[Var{ctx.ex}] = rat(0);
  ec.values[Var{ctx.eu}] = rat(2);
  ec.values[Var{ctx.ef}] = rat(3);
  ec.values[Var{ctx.eg}] = rat(5);
  const std::array<const Expression*, 3> invs{&inv.lambda, &inv.i_f, &inv.i_g};
  const std::array<SymbolId, 4> vars{ctx.ex, ctx.eu, ctx.ef, ctx.eg};
  RatMatrix j = rm_zero(3, 4);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      j[r][c] = evaluate(ctx.eq, differentiate(*invs[r], Var{vars[c]}), ec);
    }
  }
  if (rm_rank(j) != 3) {
    throw Error(Error::Kind::Domain, "invariants are functionally dependent");
  }
}

}  // namespace

InvariantBasis invariants(const EquationContext& ctx, const ProjectedOperator& z) {
  InvariantBasis inv;
  Expression f = Expression::symbol(ctx.ef);
  Expression g = Expression::symbol(ctx.eg);
  Expression u = Expression::symbol(ctx.eu);
  if (z.alpha != 0 && z.beta0 == 0) {
    inv.lambda = u * exp_in(ctx.ex, -z.beta / z.alpha);
    inv.i_f = f * exp_in(ctx.ex, -z.gamma / z.alpha);
    inv.i_g = g * exp_in(ctx.ex, -z.delta / z.alpha);
  } else if (z.alpha == 0 && z.beta != 0 && z.beta0 == 0) {
    Rat ef = -z.gamma / z.beta;
    Rat eg = -z.delta / z.beta;
    ef.canonicalize();
    eg.canonicalize();
    if (!is_integer(ef) || !is_integer(eg)) {
      throw Error(Error::Kind::Domain, "power-case invariant needs integer exponents");
    }
    inv.lambda = Expression::symbol(ctx.ex);
    inv.i_f = f * pow(u, static_cast<int>(ef.get_num().get_si()));
    inv.i_g = g * pow(u, static_cast<int>(eg.get_num().get_si()));
  } else if (z.alpha == 0 && z.beta == 0 && z.beta0 != 0 && z.gamma == 0 && z.delta == 0) {
    inv.lambda = Expression::symbol(ctx.ex);
    inv.i_f = f;
    inv.i_g = g;
  } else {
    throw Error(Error::Kind::Domain, "projected operator outside the supported invariant cases");
  }
  check_annihilation(ctx, z, inv);
  return inv;
}

Expression lambda_on_symmetry_side(const EquationContext& ctx, const ProjectedOperator& z) {
  if (z.alpha != 0 && z.beta0 == 0) {
    return Expression::symbol(ctx.su) * exp_in(ctx.sx, -z.beta / z.alpha);
  }
  return Expression::symbol(ctx.sx);
}

namespace {

// (f_form, g_form) on the symmetry side solving I_f = Phi(lambda),
// I_g = Psi(lambda).
std::pair<Expression, Expression> forms_for(const EquationContext& ctx,
                                            const ProjectedOperator& z) {
  Expression lam = lambda_on_symmetry_side(ctx, z);
  Expression phi = Expression::apply(ctx.sPhi, {0}, {lam});
  Expression psi = Expression::apply(ctx.sPsi, {0}, {lam});
  if (z.alpha != 0 && z.beta0 == 0) {
    return {exp_in(ctx.sx, z.gamma / z.alpha) * phi, exp_in(ctx.sx, z.delta / z.alpha) * psi};
  }
  if (z.alpha == 0 && z.beta != 0 && z.beta0 == 0) {
    Rat ef = z.gamma / z.beta;
    Rat eg = z.delta / z.beta;
    ef.canonicalize();
    eg.canonicalize();
    Expression u = Expression::symbol(ctx.su);
    return {pow(u, static_cast<int>(ef.get_num().get_si())) * phi,
            pow(u, static_cast<int>(eg.get_num().get_si())) * psi};
  }
  return {phi, psi};
}

bool proportional(const ProjectedOperator& a, const ProjectedOperator& b, Rat* factor) {
  const std::array<const Rat*, 5> ta{&a.alpha, &a.beta, &a.beta0, &a.gamma, &a.delta};
  const std::array<const Rat*, 5> tb{&b.alpha, &b.beta, &b.beta0, &b.gamma, &b.delta};
  Rat c = rat(0);
  for (std::size_t i = 0; i < 5; ++i) {
    if (*tb[i] != 0) {
      c = *ta[i] / *tb[i];
      c.canonicalize();
      break;
    }
  }
  if (c == 0) return false;
  for (std::size_t i = 0; i < 5; ++i) {
    if (*ta[i] != c * *tb[i]) return false;
  }
  *factor = c;
  return true;
}

}  // namespace

VectorField to_symmetry_side(const EquationContext& ctx, const VectorField& y) {
  VectorField out;
  for (SymbolId d : {ctx.ex, ctx.et, ctx.eu}) {
    const Expression& c = y.coefficient(d);
    if (c.is_zero()) continue;
    SymbolId mapped = d == ctx.ex ? ctx.sx : d == ctx.et ? ctx.st : ctx.su;
    out.set(mapped, transfer_xtu(ctx, c));
  }
  return out;
}

std::vector<const RowCandidate*> ClassificationRow::additional_operators() const {
  std::vector<const RowCandidate*> out;
  for (const auto& c : candidates) {
    if (c.verified) out.push_back(&c);
  }
  return out;
}

ClassificationReport build_table(const EquationContext& ctx, const OptimalSystem& osys,
                                 const std::vector<VectorField>& printed_z,
                                 const std::vector<RowFixture>& fixture) {
  ClassificationReport report;
  const auto& reps = osys.representatives();

  // machine association: representative -> printed row, by proportional
  // projection match
  std::vector<ProjectedOperator> zs;
  for (const auto& zf : printed_z) {
    auto z = project(ctx, zf);
    if (!z) throw Error(Error::Kind::Domain, "fixture Z operator has empty projection");
    zs.push_back(*z);
  }
  std::vector<std::vector<std::pair<int, Rat>>> members(zs.size());
  for (std::size_t r = 0; r < reps.size(); ++r) {
    VectorField field = osys.normalization_algebra().from_coefficients(reps[r].combo);
    auto p = project(ctx, field);
    if (!p) continue;
    bool placed = false;
    for (std::size_t zi = 0; zi < zs.size(); ++zi) {
      Rat c;
      if (proportional(*p, zs[zi], &c)) {
        members[zi].push_back({static_cast<int>(r) + 1, c});
        placed = true;
        break;
      }
    }
    if (!placed) {
      report.deltas.push_back("representative " + reps[r].label +
                              " projects outside every printed operator");
    }
  }

  for (std::size_t zi = 0; zi < zs.size(); ++zi) {
    ClassificationRow row;
    row.index = static_cast<int>(zi) + 1;
    row.z = zs[zi];
    row.inv = invariants(ctx, row.z);
    auto [ff, gg] = forms_for(ctx, row.z);
    row.f_form = ff;
    row.g_form = gg;
    for (const auto& [ri, c] : members[zi]) row.members.push_back(ri);

    // candidates: (t,x,u)-projections of the associated elements, de-duped
    for (const auto& [ri, c] : members[zi]) {
      VectorField x = to_symmetry_side(
          ctx, osys.normalization_algebra().from_coefficients(reps[static_cast<std::size_t>(ri - 1)].combo));
      bool merged = false;
      for (auto& cand : row.candidates) {
        if (cand.op == x) {
          cand.source += "," + reps[static_cast<std::size_t>(ri - 1)].label;
          merged = true;
          break;
        }
      }
      if (merged) continue;
      RowCandidate cand;
      cand.source = reps[static_cast<std::size_t>(ri - 1)].label;
      cand.op = x;
      cand.residual = symmetry_residual(ctx, x, row.f_form, row.g_form);
      cand.verified = cand.residual.is_zero();
      ++report.verifications_performed;
      if (cand.verified) ++report.verifications_passed;
      row.candidates.push_back(std::move(cand));
    }
    report.rows.push_back(std::move(row));
  }

  // fixture comparison, cell by cell
  for (std::size_t zi = 0; zi < report.rows.size() && zi < fixture.size(); ++zi) {
    const ClassificationRow& row = report.rows[zi];
    const RowFixture& fx = fixture[zi];
    auto delta = [&](const std::string& cell, const std::string& machine,
                     const std::string& printed) {
      if (machine != printed) {
        report.deltas.push_back("row " + std::to_string(row.index) + " " + cell + ": machine '" +
                                machine + "' vs printed '" + printed + "'");
      }
    };
    delta("z", render_field(ctx.eq, row.z.field), fx.z);
    delta("invariant", render(ctx.eq, row.inv.lambda), fx.invariant);
    Expression lam = lambda_on_symmetry_side(ctx, row.z);
    delta("f", render_form_with_lambda(ctx, row.f_form, lam), fx.f);
    delta("g", render_form_with_lambda(ctx, row.g_form, lam), fx.g);
    delta("equation", render_row_equation(ctx, row), fx.equation);
    std::string ops;
    for (std::size_t i = 0; i < row.candidates.size(); ++i) {
      if (i) ops += "; ";
      ops += render_field(ctx.sym, row.candidates[i].op);
    }
    std::string fops;
    for (std::size_t i = 0; i < fx.operators.size(); ++i) {
      if (i) fops += "; ";
      fops += fx.operators[i];
    }
    delta("operators", ops, fops);
    std::string mem;
    for (std::size_t i = 0; i < row.members.size(); ++i) {
      if (i) mem += ",";
      mem += reps[static_cast<std::size_t>(row.members[i] - 1)].label;
    }
    std::string fmem;
    for (std::size_t i = 0; i < fx.members.size(); ++i) {
      if (i) fmem += ",";
      fmem += fx.members[i];
    }
    delta("members", mem, fmem);
    for (const auto& cand : row.candidates) {
      if (!cand.verified) {
        report.deltas.push_back(
            "row " + std::to_string(row.index) + " operator " +
            render_field(ctx.sym, cand.op) + " (from " + cand.source +
            ") fails verification: residual = " + render(ctx.sym, cand.residual));
      }
    }
  }
  return report;
}

namespace {

Expression display_with_lambda(const EquationContext& ctx, const Expression& e,
                               const Expression& lam) {
  // replace Phi/Psi arguments equal to lambda by the display symbol, unless
  // lambda is already a plain symbol
  if (lam.terms().size() == 1 && lam.terms()[0].factors.size() == 1 &&
      lam.terms()[0].coeff == 1 &&
      std::holds_alternative<SymbolId>(lam.terms()[0].factors[0].atom)) {
    return e;
  }
  std::vector<Term> out;
  for (const auto& t : e.terms()) {
    Term nt;
    nt.coeff = t.coeff;
    for (const auto& pa : t.factors) {
      if (std::holds_alternative<FuncPtr>(pa.atom)) {
        const FuncAtom& f = *std::get<FuncPtr>(pa.atom);
        std::vector<Expression> args;
        for (const auto& a : f.args) {
          args.push_back(a == lam ? Expression::symbol(ctx.slambda) : a);
        }
        Expression rebuilt = Expression::apply(f.fn, f.deriv, std::move(args));
        nt.factors.push_back(PowAtom{rebuilt.terms()[0].factors[0].atom, pa.power});
      } else {
        nt.factors.push_back(pa);
      }
    }
    out.push_back(std::move(nt));
  }
  return Expression::from_terms(std::move(out));
}

}  // namespace

std::string render_form_with_lambda(const EquationContext& ctx, const Expression& form,
                                    const Expression& lambda_sym_side) {
  return render(ctx.sym, display_with_lambda(ctx, form, lambda_sym_side));
}

std::string render_row_equation(const EquationContext& ctx, const ClassificationRow& row) {
  Expression lam = lambda_on_symmetry_side(ctx, row.z);
  return "u_t = " + render_form_with_lambda(ctx, row.f_form, lam) + "*u_x^2 + " +
         render_form_with_lambda(ctx, row.g_form, lam) + "*u_xx";
}

}  // namespace liesym
