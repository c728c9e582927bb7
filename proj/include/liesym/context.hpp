#pragma once

#include "liesym/jet.hpp"

namespace liesym {

// Symbol environments for the equation class u_t = f(x,u) u_x^2 + g(x,u) u_xx.
//
// The symmetry side treats f and g as binary function symbols over (x, u)
// (or as concrete expressions). The equivalence side treats f and g as
// coordinates of the extended space (x, t, u, f, g), with opaque derivative
// atoms f_x, f_u, f_t, g_x, g_u, g_t for the prolongation to f_t, g_t.
struct EquationContext {
  // symmetry side
  SymbolTable sym;
  SymbolId sx, st, su;
  SymbolId sf, sg;            // f(x,u), g(x,u)
  SymbolId sPhi, sPsi;        // unary classification functions
  SymbolId sxi1, sxi2, sphi;  // unknown field coefficients xi1(x,t,u), ...
  SymbolId slambda;           // display name for the row invariant

  // equivalence side
  SymbolTable eq;
  SymbolId ex, et, eu, ef, eg;
  SymbolId ef_x, ef_u, ef_t, eg_x, eg_u, eg_t;
  SymbolId ea, eb;    // a(x), b(x) of the equivalence family
  SymbolId ec1, ec2;  // family constants
  SymbolId es, es1, es2;

  EquationContext();

  JetSpace sym_jet() const { return JetSpace(sx, st, su); }
  JetSpace eq_jet() const { return JetSpace(ex, et, eu); }

  // f(x,u) and g(x,u) as expressions (the "symbolic f, g" inputs).
  Expression f_symbolic() const;
  Expression g_symbolic() const;
  // xi1(x,t,u)... as expressions for the generic determining system.
  Expression xi1_symbolic() const;
  Expression xi2_symbolic() const;
  Expression phi_symbolic() const;
};

}  // namespace liesym
