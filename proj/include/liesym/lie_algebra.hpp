#pragma once

#include <string>
#include <vector>

#include "liesym/rat_matrix.hpp"
#include "liesym/vector_field.hpp"

namespace liesym {

// Finite-dimensional Lie algebra given by an ordered basis of vector fields
// on a declared coordinate list, with rational structure constants
// [Y_i, Y_j] = sum_k c[i][j][k] Y_k.
class LieAlgebraPresentation {
 public:
  // Checks rational linear independence and closure (fails loudly naming the
  // offending pair) and extracts the structure constants.
  LieAlgebraPresentation(const SymbolTable& table, std::vector<SymbolId> coords,
                         std::vector<std::string> names, std::vector<VectorField> basis);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<VectorField>& basis() const { return basis_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<SymbolId>& coords() const { return coords_; }
  const SymbolTable& table() const { return *table_; }
  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[i][j][k]; }

  // Expands a field in the basis; nullopt when outside the rational span.
  std::optional<RatVector> in_basis(const VectorField& v) const;

  VectorField from_coefficients(const RatVector& v) const;

  // ad(Y_i) acting on basis coefficient vectors: A[k][j] = c[i][j][k].
  RatMatrix ad_matrix(std::size_t i) const;

 private:
  const SymbolTable* table_;
  std::vector<SymbolId> coords_;
  std::vector<std::string> names_;
  std::vector<VectorField> basis_;
  std::vector<std::vector<RatVector>> c_;
};

// m x m table of commutators [Y_i, Y_j].
std::vector<std::vector<VectorField>> commutator_table(const LieAlgebraPresentation& alg);

// Ad(exp(s Y_i)) = exp(-s ad(Y_i)) on basis coefficient vectors, entries
// exact exponential-polynomials in the group parameter.
struct AdjointMatrix {
  std::vector<std::vector<Expression>> entries;
  SymbolId param;

  enum class Kind { Identity, Translation, Scaling, Mixed };
  Kind kind() const;

  // Exact specialization at a translation parameter s.
  RatMatrix at_translation(const Rat& s) const;
  // Exact specialization with sigma = e^s (> 0) for scaling-type matrices.
  RatMatrix at_scaling(const Rat& sigma) const;
};

// Exact exp(s M) for a rational matrix whose characteristic polynomial
// splits over Q: commuting semisimple + nilpotent splitting through
// eigenprojections. Unsupported-algebra error otherwise.
std::vector<std::vector<Expression>> exact_exp(const RatMatrix& m, SymbolId s);

AdjointMatrix adjoint_matrix(const LieAlgebraPresentation& alg, std::size_t i, SymbolId s);

// Entry (i,j) = Ad(exp(s Y_i)) Y_j expanded in the basis: coefficient
// expressions over s, one vector per cell.
std::vector<std::vector<std::vector<Expression>>> adjoint_table(
    const LieAlgebraPresentation& alg, SymbolId s);

// Renders a basis expansion like "-s*Y2 + Y4", "exp(s)*Y2", "0".
std::string render_basis_combo(const SymbolTable& table,
                               const std::vector<std::string>& names,
                               const std::vector<Expression>& coeffs);
std::string render_basis_combo(const std::vector<std::string>& names, const RatVector& coeffs);

}  // namespace liesym
