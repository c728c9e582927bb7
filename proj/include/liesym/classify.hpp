#pragma once

#include "liesym/determining.hpp"
#include "liesym/optimal.hpp"

namespace liesym {

// Projection of an optimal-system element onto (x,u,f,g), restricted to the
// shape alpha d_x + (beta u + beta0) d_u + gamma f d_f + delta g d_g.
struct ProjectedOperator {
  Rat alpha, beta, beta0, gamma, delta;
  VectorField field;  // on the equivalence coordinates
};

// Drops the d_t component; none when both the x- and u-projections vanish.
// Errors when the projection falls outside the restricted shape.
std::optional<ProjectedOperator> project(const EquationContext& ctx, const VectorField& y);

// Closed-form invariants of a projected operator, annihilation-checked and
// functionally independent (Jacobian w.r.t. (u,f,g) of full rank at a
// generic rational point with x = 0).
struct InvariantBasis {
  Expression lambda;  // the (x,u) invariant
  Expression i_f;     // f-bearing invariant
  Expression i_g;     // g-bearing invariant
};

InvariantBasis invariants(const EquationContext& ctx, const ProjectedOperator& z);

// One candidate additional operator: the (t,x,u)-projection of an associated
// optimal-system element, with its exact symmetry residual against the
// row's (f,g) forms.
struct RowCandidate {
  std::string source;   // representative label
  VectorField op;       // field on (t,x,u), symmetry-side table
  Expression residual;  // exact; zero iff verified
  bool verified = false;
};

struct ClassificationRow {
  int index = 0;             // 1-based row number
  ProjectedOperator z;
  InvariantBasis inv;        // on the equivalence-side table
  Expression f_form, g_form; // on the symmetry-side table, over Phi/Psi
  std::vector<RowCandidate> candidates;
  std::vector<int> members;  // 1-based representative indices
  // verified candidates only; the row's published additional operators
  std::vector<const RowCandidate*> additional_operators() const;
};

struct ClassificationReport {
  std::vector<ClassificationRow> rows;
  std::vector<std::string> deltas;          // per-cell mismatches vs the fixture
  int verifications_performed = 0;          // residual checks run
  int verifications_passed = 0;
};

// Fixture row as shipped in the workspace (printed-table transcription).
struct RowFixture {
  std::string z;
  std::string invariant;
  std::string f, g;
  std::string equation;
  std::vector<std::string> operators;
  std::vector<std::string> members;
};

// Rebuilds every classification row from the optimal system, verifies each
// candidate operator exactly, and reports all deltas against the fixture.
// A row's (f,g) forms always reproduce I_f = Phi(lambda), I_g = Psi(lambda)
// exactly; candidates failing verification are reported, never published.
ClassificationReport build_table(const EquationContext& ctx, const OptimalSystem& osys,
                                 const std::vector<VectorField>& printed_z,
                                 const std::vector<RowFixture>& fixture);

// (t,x,u)-projection of an equivalence-space field, rebuilt on the
// symmetry-side table.
VectorField to_symmetry_side(const EquationContext& ctx, const VectorField& y);

// Rendering helpers shared by the CLI and the fixtures.
std::string render_row_equation(const EquationContext& ctx, const ClassificationRow& row);
std::string render_form_with_lambda(const EquationContext& ctx, const Expression& form,
                                    const Expression& lambda_sym_side);
Expression lambda_on_symmetry_side(const EquationContext& ctx, const ProjectedOperator& z);

}  // namespace liesym
