#pragma once

#include <optional>
#include <vector>

#include "liesym/rational.hpp"

namespace liesym {

// Dense exact-rational matrix helpers for the small systems that show up in
// structure-constant extraction and adjoint exponentials.
using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

RatMatrix rm_zero(std::size_t rows, std::size_t cols);
RatMatrix rm_identity(std::size_t n);
RatMatrix rm_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix rm_add(const RatMatrix& a, const RatMatrix& b);
RatMatrix rm_scale(const Rat& c, const RatMatrix& a);
RatVector rm_apply(const RatMatrix& a, const RatVector& v);
bool rm_is_zero(const RatMatrix& a);
Rat rm_trace(const RatMatrix& a);

// Solves A x = b exactly (any shape). Returns nullopt when inconsistent;
// free variables, if any, are set to zero.
std::optional<RatVector> rm_solve(const RatMatrix& a, const RatVector& b);

std::size_t rm_rank(RatMatrix a);

// Characteristic polynomial coefficients c[0..n] with
// p(x) = c[n] x^n + ... + c[0] and c[n] = 1 (Faddeev-LeVerrier).
std::vector<Rat> rm_charpoly(const RatMatrix& a);

// All rational roots with multiplicity. Fails (nullopt) when the polynomial
// does not split over the rationals.
struct RationalRoots {
  std::vector<std::pair<Rat, int>> roots;  // (root, multiplicity)
};
std::optional<RationalRoots> rational_roots(const std::vector<Rat>& poly);

}  // namespace liesym
