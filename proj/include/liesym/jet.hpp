#pragma once

#include "liesym/vector_field.hpp"

namespace liesym {

// Jet-space bookkeeping for one dependent variable u over (x, t): derivative
// coordinates up to a configurable order cap, total derivatives, and second
// prolongation of vector fields.
class JetSpace {
 public:
  JetSpace(SymbolId x, SymbolId t, SymbolId u, int order_cap = 4);

  SymbolId x() const { return x_; }
  SymbolId t() const { return t_; }
  SymbolId u() const { return u_; }
  int order_cap() const { return cap_; }

  // D_v e with v one of x, t. Exceeding the order cap is a hard error that
  // names the coordinate that would be created.
  Expression total_derivative(const Expression& e, SymbolId v) const;

 private:
  SymbolId x_, t_, u_;
  int cap_;
};

struct Characteristic {
  Expression q;
};

// Q = phi - xi1*u_x - xi2*u_t.
Characteristic characteristic(const JetSpace& js, const VectorField& field);

// The four second-prolongation coefficients of a vector field on (x, t, u).
struct ProlongedField {
  VectorField base;
  Expression phi_x, phi_t, phi_xx, phi_xt;
};

// phi^x  = D_x phi - u_x D_x xi1 - u_t D_x xi2
// phi^t  = D_t phi - u_x D_t xi1 - u_t D_t xi2
// phi^xx = D_x phi^x - u_xx D_x xi1 - u_xt D_x xi2
// phi^xt = D_t phi^x - u_xx D_t xi1 - u_xt D_t xi2
ProlongedField prolong2(const JetSpace& js, const VectorField& field);

}  // namespace liesym
