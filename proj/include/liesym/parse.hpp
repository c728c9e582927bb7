#pragma once

#include <string>

#include "liesym/expr.hpp"

namespace liesym {

// Parses the expression grammar:
//   rationals        p/q (nonnegative integer literals, '/' is division)
//   identifiers      [A-Za-z][A-Za-z0-9']* with one optional _suffix
//   jet coordinates  u_x, u_t, u_xx, u_xt, ... (u_tx accepted, canonicalized)
//   operators        + - * / ^ with standard precedence, unary minus,
//                    ^ takes an integer exponent (negative allowed)
//   exponentials     exp(<rational linear form in symbols>)
//   applications     f(x,u) for declared function symbols
//   derivatives      D[f,x,u](x,u) or D[f,1,2](args): mixed partials
// Division requires a single-term divisor. Symbols must be declared.
Expression parse(const SymbolTable& table, const std::string& text);

}  // namespace liesym
