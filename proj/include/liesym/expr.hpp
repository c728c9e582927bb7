#pragma once

#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "liesym/rational.hpp"
#include "liesym/symbols.hpp"

namespace liesym {

// Derivative coordinate of the dependent variable u: nx x-derivatives and
// nt t-derivatives. Mixed indices are symmetric; (nx, nt) is the canonical
// key and renders with the x's first ("u_xt", never "u_tx").
struct JetCoord {
  int nx = 0;
  int nt = 0;
  int order() const { return nx + nt; }
  std::string name() const;
  friend bool operator==(const JetCoord&, const JetCoord&) = default;
};

// Rational linear combination of symbols, the only admissible exponent of an
// exponential atom. Sorted by symbol id; zero coefficients dropped.
class LinForm {
 public:
  LinForm() = default;
  static LinForm single(SymbolId s, Rat c);

  void add(SymbolId s, const Rat& c);
  void add(const LinForm& other, const Rat& scale);
  LinForm scaled(const Rat& c) const;

  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<SymbolId, Rat>>& terms() const { return terms_; }

 private:
  std::vector<std::pair<SymbolId, Rat>> terms_;
};

int compare(const LinForm& a, const LinForm& b);
inline bool operator==(const LinForm& a, const LinForm& b) { return compare(a, b) == 0; }

class Expression;
struct FuncAtom;
using FuncPtr = std::shared_ptr<const FuncAtom>;

// Atom kinds, in canonical order: plain symbol < jet coordinate <
// exponential < function application.
using Atom = std::variant<SymbolId, JetCoord, LinForm, FuncPtr>;

int compare(const Atom& a, const Atom& b);
inline bool atoms_equal(const Atom& a, const Atom& b) { return compare(a, b) == 0; }

struct PowAtom {
  Atom atom;
  int power = 1;  // nonzero; negative allowed
};

// Monomial: sorted product of powers of atoms (a Term without coefficient).
using Monomial = std::vector<PowAtom>;

int compare(const Monomial& a, const Monomial& b);

struct Term {
  Rat coeff;
  Monomial factors;
};

// Canonical sum-of-terms expression. Equal mathematical content (under the
// supported operations) has identical representation: terms are sorted by a
// fixed total order, coefficients are in lowest terms, zero terms are
// dropped, exponential atoms are merged per term and exp(0) is eliminated.
class Expression {
 public:
  Expression() = default;  // zero

  static Expression rational(const Rat& r);
  static Expression integer(long n) { return rational(rat(n)); }
  static Expression symbol(SymbolId s);
  static Expression jet(const JetCoord& j);
  static Expression exponential(const LinForm& lf);
  static Expression apply(SymbolId fn, std::vector<int> deriv, std::vector<Expression> args);
  static Expression from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // Non-null iff the expression is a plain rational (including zero).
  const Rat* as_rational() const;
  const std::vector<Term>& terms() const { return terms_; }

  Expression operator-() const;
  friend Expression operator+(const Expression& a, const Expression& b);
  friend Expression operator-(const Expression& a, const Expression& b);
  friend Expression operator*(const Expression& a, const Expression& b);
  Expression& operator+=(const Expression& o) { *this = *this + o; return *this; }
  Expression& operator-=(const Expression& o) { *this = *this - o; return *this; }
  Expression& operator*=(const Expression& o) { *this = *this * o; return *this; }

  friend Expression operator*(const Rat& c, const Expression& e);

  friend bool operator==(const Expression& a, const Expression& b) {
    return compare(a, b) == 0;
  }
  friend int compare(const Expression& a, const Expression& b);

 private:
  std::vector<Term> terms_;
};

// Mixed partial-derivative application of an arbitrary-function symbol:
// fn^(deriv)(args). Two applications are the same atom iff name, derivative
// multi-index, and canonically-equal argument lists all match.
struct FuncAtom {
  SymbolId fn;
  std::vector<int> deriv;  // per argument slot, size == args.size()
  std::vector<Expression> args;
};

int compare(const FuncAtom& a, const FuncAtom& b);

// Integer power with canonicalization; n < 0 requires a single-term base.
Expression pow(const Expression& e, int n);

// A differentiation/substitution variable: a symbol or a jet coordinate.
using Var = std::variant<SymbolId, JetCoord>;

int compare(const Var& a, const Var& b);
struct VarLess {
  bool operator()(const Var& a, const Var& b) const { return compare(a, b) < 0; }
};

// Exact partial derivative; every atom other than v is independent of v.
// The chain rule is applied through function-application arguments.
Expression differentiate(const Expression& e, const Var& v);

// Concrete replacement for an arbitrary-function symbol: a body over
// declared placeholder parameters.
struct FuncTemplate {
  std::vector<SymbolId> params;
  Expression body;
};

struct Bindings {
  std::map<Var, Expression, VarLess> vars;
  std::map<SymbolId, SymbolId> func_renames;
  std::map<SymbolId, FuncTemplate> func_templates;
};

// Simultaneous substitution. Rejects direct self-reference (a var bound to
// an expression containing itself) and function-arity mismatches.
Expression substitute(const SymbolTable& table, const Expression& e, const Bindings& b);

// Same engine without the self-reference guard, for structural remaps like
// s -> -s or s -> s1 + s2 (substitution is simultaneous, so these are
// well-defined); not part of the public substitution contract.
Expression substitute_unchecked(const SymbolTable& table, const Expression& e, const Bindings& b);

bool contains_var(const Expression& e, const Var& v);
bool contains_atom(const Expression& e, const Atom& a);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};
using Collected = std::map<Monomial, Expression, MonomialLess>;

// Writes e as sum of monomial * coefficient over the basis atoms; the empty
// monomial keys the basis-free remainder. Errors if a basis atom occurs
// inside a function-application argument.
Collected collect(const SymbolTable& table, const Expression& e, const std::vector<Atom>& basis);

}  // namespace liesym
