#include "liesym/evaluate.hpp"

#include "liesym/render.hpp"

namespace liesym {

namespace {

// Taylor sum of exp(q) until the next term drops below 10^-(prec+4).
Rat exp_approx(const Rat& q, int prec) {
  if (q == 0) return rat(1);
  Rat tol = rat_pow(rat(1, 10), prec + 4);
  Rat term = rat(1);
  Rat sum = rat(1);
  for (int k = 1; k < 2000; ++k) {
    term *= q;
    term /= k;
    sum += term;
    Rat mag = abs(term);
    // past k >= |q| the terms decay monotonically
    if (mag < tol && Rat(abs(q)) < Rat(k)) return sum;
  }
  throw Error(Error::Kind::Domain, "exp argument too large for evaluation");
}

struct Evaluator {
  const SymbolTable& table;
  const EvalContext& ctx;

  Rat var(const Var& v) const {
    auto it = ctx.values.find(v);
    if (it == ctx.values.end()) {
      std::string name = std::holds_alternative<SymbolId>(v)
                             ? table.info(std::get<SymbolId>(v)).name
                             : std::get<JetCoord>(v).name();
      throw Error(Error::Kind::Domain, "missing binding for " + name);
    }
    return it->second;
  }

  Rat expr(const Expression& e) const {
    Rat sum = rat(0);
    for (const auto& t : e.terms()) {
      Rat prod = t.coeff;
      for (const auto& pa : t.factors) {
        Rat base = atom(pa.atom);
        if (base == 0 && pa.power < 0) {
          throw Error(Error::Kind::Domain, "division by zero while evaluating");
        }
        prod *= rat_pow(base, pa.power);
      }
      sum += prod;
    }
    sum.canonicalize();
    return sum;
  }

  Rat atom(const Atom& a) const {
    switch (a.index()) {
      case 0:
        return var(Var{std::get<SymbolId>(a)});
      case 1:
        return var(Var{std::get<JetCoord>(a)});
      case 2: {
        Rat q = rat(0);
        for (const auto& [s, c] : std::get<LinForm>(a).terms()) q += c * var(Var{s});
        q.canonicalize();
        return exp_approx(q, ctx.exp_precision);
      }
      default: {
        const FuncAtom& f = *std::get<FuncPtr>(a);
        auto it = ctx.models.find(f.fn);
        if (it == ctx.models.end()) {
          throw Error(Error::Kind::Domain,
                      "missing function model for " + table.info(f.fn).name);
        }
        const FuncTemplate& tpl = it->second;
        if (tpl.params.size() != f.args.size()) {
          throw Error(Error::Kind::Arity, "model arity mismatch for " + table.info(f.fn).name);
        }
        Expression body = tpl.body;
        for (std::size_t i = 0; i < f.args.size(); ++i) {
          for (int k = 0; k < f.deriv[i]; ++k) body = differentiate(body, Var{tpl.params[i]});
        }
        EvalContext inner_ctx;
        inner_ctx.models = ctx.models;
        inner_ctx.exp_precision = ctx.exp_precision;
        for (std::size_t i = 0; i < f.args.size(); ++i) {
          inner_ctx.values[Var{tpl.params[i]}] = expr(f.args[i]);
        }
        return Evaluator{table, inner_ctx}.expr(body);
      }
    }
  }
};

}  // namespace

Rat evaluate(const SymbolTable& table, const Expression& e, const EvalContext& ctx) {
  return Evaluator{table, ctx}.expr(e);
}

}  // namespace liesym
