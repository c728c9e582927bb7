#pragma once

#include <map>

#include "liesym/expr.hpp"

namespace liesym {

// Numeric spot-evaluation for property tests. Exact rational arithmetic
// except for exponential atoms, which are approximated by a rational with
// absolute error below 10^-precision (exp(0) stays exact). Never used by
// the symbolic paths.
struct EvalContext {
  std::map<Var, Rat, VarLess> values;
  std::map<SymbolId, FuncTemplate> models;
  int exp_precision = 30;
};

Rat evaluate(const SymbolTable& table, const Expression& e, const EvalContext& ctx);

}  // namespace liesym
