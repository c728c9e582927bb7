#pragma once

#include <string>
#include <vector>

#include "liesym/expr.hpp"

namespace liesym {

// First-order differential operator: sum of coefficient * d/d(direction).
// Components are kept sorted by direction id; zero coefficients dropped.
class VectorField {
 public:
  VectorField() = default;

  static VectorField direction(SymbolId d) { return single(d, Expression::integer(1)); }
  static VectorField single(SymbolId d, Expression coeff);

  void set(SymbolId d, Expression coeff);
  const Expression& coefficient(SymbolId d) const;  // zero if absent
  const std::vector<std::pair<SymbolId, Expression>>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  // Applies the operator to a scalar expression: sum coeff_i * de/d(dir_i).
  Expression apply(const Expression& e) const;

  VectorField operator+(const VectorField& o) const;
  VectorField operator-() const;
  VectorField operator-(const VectorField& o) const { return *this + (-o); }
  friend VectorField operator*(const Rat& c, const VectorField& v);
  friend bool operator==(const VectorField& a, const VectorField& b);

 private:
  std::vector<std::pair<SymbolId, Expression>> comps_;
};

// [X, Y]: coefficient of each direction k is X(eta^k) - Y(xi^k).
VectorField commutator(const VectorField& x, const VectorField& y);

// "c1*d_x + (1 + t)*d_t" style rendering, directions in id order.
std::string render_field(const SymbolTable& table, const VectorField& v);

}  // namespace liesym
