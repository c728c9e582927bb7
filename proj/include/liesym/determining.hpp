#pragma once

#include <optional>

#include "liesym/context.hpp"

namespace liesym {

// One coefficient-collected residual: summing monomial * coefficient over
// the items reproduces the residual exactly.
struct DeterminingSystem {
  Expression residual;
  Collected items;  // jet-coordinate monomial -> coefficient
  bool empty() const { return items.empty(); }
};

// Determining function of the class for a candidate symmetry field on
// (x,t,u):
//   phi^t - (f_x xi1 + f_u phi) u_x^2 - (g_x xi1 + g_u phi) u_xx
//         - 2 f phi^x u_x - g phi^xx
// with u_t eliminated through u_t = f u_x^2 + g u_xx. Zero iff the field is
// a symmetry of the given equation. f and g are expressions in (x, u); pass
// ctx.f_symbolic()/g_symbolic() for the arbitrary-coefficient case.
Expression symmetry_residual(const EquationContext& ctx, const VectorField& field,
                             const Expression& f, const Expression& g);

// Collects the residual over all jet-coordinate monomials; each coefficient
// is one determining equation.
DeterminingSystem determining_system(const EquationContext& ctx, const VectorField& field,
                                     const Expression& f, const Expression& g);

// Equivalence-space operator: a field on (x,t,u) extended with coefficients
// mu (on d_f) and nu (on d_g); mu, nu are expressions in (x,t,u,f,g).
struct EquivalenceField {
  VectorField base;  // xi1 d_x + xi2 d_t + phi d_u
  Expression mu;
  Expression nu;
};

struct EquivalenceResiduals {
  Expression main;  // invariance of u_t - f u_x^2 - g u_xx, u_t eliminated
  Expression ft;    // mu^t after imposing f_t = g_t = 0
  Expression gt;    // nu^t after imposing f_t = g_t = 0
  bool all_zero() const { return main.is_zero() && ft.is_zero() && gt.is_zero(); }
};

EquivalenceResiduals equivalence_residuals(const EquationContext& ctx,
                                           const EquivalenceField& field);

enum class FamilyForm {
  AsPrinted,         // mu = -2f(c1 - a(x)),  nu = -g(c1 - a'(x))
  MachineCorrected,  // mu = -2f(c1 - a'(x)), nu = -g(c1 - 2a'(x))
};

// Builds the candidate equivalence-family operator
//   Y = a(x) d_x + (c1 t + c2) d_t + (c1 u + b(x)) d_u + mu d_f + nu d_g
// and returns the coefficient-collected main residual. Pass nullopt for a or
// b to keep them generic function symbols; pass expressions in x otherwise.
// c1, c2 may be rationals or expressions in declared constants.
DeterminingSystem check_equivalence_family(const EquationContext& ctx,
                                           const std::optional<Expression>& a,
                                           const std::optional<Expression>& b,
                                           const Expression& c1, const Expression& c2,
                                           FamilyForm form);

// The family operator itself, for report rendering.
EquivalenceField equivalence_family_field(const EquationContext& ctx,
                                          const std::optional<Expression>& a,
                                          const std::optional<Expression>& b,
                                          const Expression& c1, const Expression& c2,
                                          FamilyForm form);

}  // namespace liesym
