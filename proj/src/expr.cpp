#include "liesym/expr.hpp"

#include <algorithm>

#include "liesym/render.hpp"

namespace liesym {

Rat rat_pow(const Rat& r, long n) {
  if (n == 0) return rat(1);
  if (r == 0 && n < 0) throw Error(Error::Kind::Domain, "0 has no negative power");
  Rat base = n < 0 ? Rat(1 / r) : r;
  unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
  Rat out = rat(1);
  while (k) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  out.canonicalize();
  return out;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string JetCoord::name() const {
  std::string s = "u_";
  s.append(static_cast<std::size_t>(nx), 'x');
  s.append(static_cast<std::size_t>(nt), 't');
  return s;
}

// ---------------------------------------------------------------------------
// LinForm

LinForm LinForm::single(SymbolId s, Rat c) {
  LinForm lf;
  lf.add(s, c);
  return lf;
}

void LinForm::add(SymbolId s, const Rat& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const auto& p, SymbolId v) { return p.first < v; });
  if (it != terms_.end() && it->first == s) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {s, c});
  }
}

void LinForm::add(const LinForm& other, const Rat& scale) {
  for (const auto& [s, c] : other.terms_) add(s, c * scale);
}

LinForm LinForm::scaled(const Rat& c) const {
  LinForm out;
  if (c == 0) return out;
  for (const auto& [s, v] : terms_) out.terms_.emplace_back(s, Rat(v * c));
  return out;
}

static int rat_compare(const Rat& a, const Rat& b) {
  int c = cmp(a, b);
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

int compare(const LinForm& a, const LinForm& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].first != tb[i].first) return ta[i].first < tb[i].first ? -1 : 1;
    if (int c = rat_compare(ta[i].second, tb[i].second)) return c;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Orders

static int jet_compare(const JetCoord& a, const JetCoord& b) {
  if (a.order() != b.order()) return a.order() < b.order() ? -1 : 1;
  if (a.nx != b.nx) return a.nx > b.nx ? -1 : 1;  // more x's first within an order
  return 0;
}

int compare(const Atom& a, const Atom& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  switch (a.index()) {
    case 0: {
      auto x = std::get<SymbolId>(a), y = std::get<SymbolId>(b);
      return x < y ? -1 : x > y ? 1 : 0;
    }
    case 1:
      return jet_compare(std::get<JetCoord>(a), std::get<JetCoord>(b));
    case 2:
      return compare(std::get<LinForm>(a), std::get<LinForm>(b));
    default:
      return compare(*std::get<FuncPtr>(a), *std::get<FuncPtr>(b));
  }
}

int compare(const FuncAtom& a, const FuncAtom& b) {
  if (a.fn != b.fn) return a.fn < b.fn ? -1 : 1;
  if (a.deriv != b.deriv) return a.deriv < b.deriv ? -1 : 1;
  if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (int c = compare(a.args[i], b.args[i])) return c;
  }
  return 0;
}

int compare(const Monomial& a, const Monomial& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a[i].atom, b[i].atom)) return c;
    if (a[i].power != b[i].power) return a[i].power < b[i].power ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

int compare(const Expression& a, const Expression& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(ta[i].factors, tb[i].factors)) return c;
    if (int c = rat_compare(ta[i].coeff, tb[i].coeff)) return c;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

int compare(const Var& a, const Var& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  if (a.index() == 0) {
    auto x = std::get<SymbolId>(a), y = std::get<SymbolId>(b);
    return x < y ? -1 : x > y ? 1 : 0;
  }
  return jet_compare(std::get<JetCoord>(a), std::get<JetCoord>(b));
}

// ---------------------------------------------------------------------------
// Canonicalization

// Sorts the factors, merges repeated atoms, folds exponentials: every term
// holds at most one exponential atom, stored with power 1 (the power is
// absorbed into the linear form), and exp(0) disappears.
static bool normalize_term(Term& t) {
  if (t.coeff == 0) return false;
  std::sort(t.factors.begin(), t.factors.end(),
            [](const PowAtom& x, const PowAtom& y) { return compare(x.atom, y.atom) < 0; });
  Monomial out;
  LinForm expo;
  bool has_exp = false;
  for (auto& pa : t.factors) {
    if (pa.power == 0) continue;
    if (std::holds_alternative<LinForm>(pa.atom)) {
      expo.add(std::get<LinForm>(pa.atom), rat(pa.power));
      has_exp = true;
      continue;
    }
    if (!out.empty() && atoms_equal(out.back().atom, pa.atom)) {
      out.back().power += pa.power;
      if (out.back().power == 0) out.pop_back();
    } else {
      out.push_back(pa);
    }
  }
  if (has_exp && !expo.is_zero()) {
    PowAtom pa{Atom{expo}, 1};
    auto it = std::lower_bound(out.begin(), out.end(), pa, [](const PowAtom& x, const PowAtom& y) {
      return compare(x.atom, y.atom) < 0;
    });
    out.insert(it, pa);
  }
  t.factors = std::move(out);
  return true;
}

Expression Expression::from_terms(std::vector<Term> terms) {
  std::vector<Term> kept;
  kept.reserve(terms.size());
  for (auto& t : terms) {
    t.coeff.canonicalize();
    if (normalize_term(t)) kept.push_back(std::move(t));
  }
  std::sort(kept.begin(), kept.end(),
            [](const Term& a, const Term& b) { return compare(a.factors, b.factors) < 0; });
  Expression e;
  for (auto& t : kept) {
    if (!e.terms_.empty() && compare(e.terms_.back().factors, t.factors) == 0) {
      e.terms_.back().coeff += t.coeff;
      if (e.terms_.back().coeff == 0) e.terms_.pop_back();
    } else {
      e.terms_.push_back(std::move(t));
    }
  }
  return e;
}

Expression Expression::rational(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c == 0) return {};
  Expression e;
  e.terms_.push_back(Term{c, {}});
  return e;
}

Expression Expression::symbol(SymbolId s) {
  Expression e;
  e.terms_.push_back(Term{rat(1), {PowAtom{Atom{s}, 1}}});
  return e;
}

Expression Expression::jet(const JetCoord& j) {
  if (j.order() < 1) throw Error(Error::Kind::Domain, "jet coordinate needs order >= 1");
  Expression e;
  e.terms_.push_back(Term{rat(1), {PowAtom{Atom{j}, 1}}});
  return e;
}

Expression Expression::exponential(const LinForm& lf) {
  if (lf.is_zero()) return integer(1);
  Expression e;
  e.terms_.push_back(Term{rat(1), {PowAtom{Atom{lf}, 1}}});
  return e;
}

Expression Expression::apply(SymbolId fn, std::vector<int> deriv, std::vector<Expression> args) {
  if (deriv.size() != args.size()) {
    throw Error(Error::Kind::Arity, "derivative multi-index size must match argument count");
  }
  for (int d : deriv) {
    if (d < 0) throw Error(Error::Kind::Domain, "negative derivative order");
  }
  auto atom = std::make_shared<FuncAtom>(FuncAtom{fn, std::move(deriv), std::move(args)});
  Expression e;
  e.terms_.push_back(Term{rat(1), {PowAtom{Atom{FuncPtr{atom}}, 1}}});
  return e;
}

bool Expression::is_rational() const { return as_rational() != nullptr || is_zero(); }

const Rat* Expression::as_rational() const {
  if (terms_.size() == 1 && terms_[0].factors.empty()) return &terms_[0].coeff;
  return nullptr;
}

Expression Expression::operator-() const {
  Expression e = *this;
  for (auto& t : e.terms_) t.coeff = -t.coeff;
  return e;
}

Expression operator+(const Expression& a, const Expression& b) {
  std::vector<Term> ts = a.terms_;
  ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
  return Expression::from_terms(std::move(ts));
}

Expression operator-(const Expression& a, const Expression& b) { return a + (-b); }

Expression operator*(const Expression& a, const Expression& b) {
  std::vector<Term> ts;
  ts.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Term t;
      t.coeff = ta.coeff * tb.coeff;
      t.factors = ta.factors;
      t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
      ts.push_back(std::move(t));
    }
  }
  return Expression::from_terms(std::move(ts));
}

Expression operator*(const Rat& c, const Expression& e) {
  return Expression::rational(c) * e;
}

static Term invert_term(const Term& t) {
  Term out;
  if (t.coeff == 0) throw Error(Error::Kind::Domain, "division by zero term");
  out.coeff = 1 / t.coeff;
  for (const auto& pa : t.factors) {
    if (std::holds_alternative<LinForm>(pa.atom)) {
      out.factors.push_back(PowAtom{Atom{std::get<LinForm>(pa.atom).scaled(rat(-1))}, 1});
    } else {
      out.factors.push_back(PowAtom{pa.atom, -pa.power});
    }
  }
  return out;
}

Expression pow(const Expression& e, int n) {
  if (n == 0) {
    if (e.is_zero()) throw Error(Error::Kind::Domain, "0^0 is undefined");
    return Expression::integer(1);
  }
  Expression base = e;
  if (n < 0) {
    if (e.terms().size() != 1) {
      throw Error(Error::Kind::Domain, "negative power of a non-monomial expression");
    }
    base = Expression::from_terms({invert_term(e.terms()[0])});
    n = -n;
  }
  Expression out = Expression::integer(1);
  for (int i = 0; i < n; ++i) out = out * base;
  return out;
}

// ---------------------------------------------------------------------------
// Differentiation

static bool atom_matches_var(const Atom& a, const Var& v) {
  if (std::holds_alternative<SymbolId>(v)) {
    return std::holds_alternative<SymbolId>(a) &&
           std::get<SymbolId>(a) == std::get<SymbolId>(v);
  }
  return std::holds_alternative<JetCoord>(a) &&
         std::get<JetCoord>(a) == std::get<JetCoord>(v);
}

// d(atom)/dv as an Expression.
static Expression atom_derivative(const Atom& a, const Var& v);

static Expression monomial_expr(const Monomial& m, const Rat& coeff) {
  return Expression::from_terms({Term{coeff, m}});
}

Expression differentiate(const Expression& e, const Var& v) {
  Expression out;
  for (const auto& t : e.terms()) {
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      const PowAtom& pa = t.factors[i];
      Expression da = atom_derivative(pa.atom, v);
      if (da.is_zero()) continue;
      // coeff * power * atom^(power-1) * da * (other factors)
      Monomial rest;
      for (std::size_t j = 0; j < t.factors.size(); ++j) {
        if (j == i) {
          if (std::holds_alternative<LinForm>(pa.atom)) {
            rest.push_back(pa);  // d exp(L) = c*exp(L)
          } else if (pa.power != 1) {
            rest.push_back(PowAtom{pa.atom, pa.power - 1});
          }
        } else {
          rest.push_back(t.factors[j]);
        }
      }
      Rat c = t.coeff;
      if (!std::holds_alternative<LinForm>(pa.atom)) c *= pa.power;
      out += monomial_expr(rest, c) * da;
    }
  }
  return out;
}

static Expression atom_derivative(const Atom& a, const Var& v) {
  if (atom_matches_var(a, v)) return Expression::integer(1);
  switch (a.index()) {
    case 0:
    case 1:
      return {};
    case 2: {
      if (!std::holds_alternative<SymbolId>(v)) return {};
      const auto& lf = std::get<LinForm>(a);
      for (const auto& [s, c] : lf.terms()) {
        if (s == std::get<SymbolId>(v)) return Expression::rational(c);
      }
      return {};
    }
    default: {
      const FuncAtom& f = *std::get<FuncPtr>(a);
      Expression out;
      for (std::size_t i = 0; i < f.args.size(); ++i) {
        Expression darg = differentiate(f.args[i], v);
        if (darg.is_zero()) continue;
        std::vector<int> d = f.deriv;
        d[i] += 1;
        out += Expression::apply(f.fn, std::move(d), f.args) * darg;
      }
      return out;
    }
  }
}

// ---------------------------------------------------------------------------
// Containment

static bool atom_contains_var(const Atom& a, const Var& v) {
  if (atom_matches_var(a, v)) return true;
  if (std::holds_alternative<LinForm>(a) && std::holds_alternative<SymbolId>(v)) {
    for (const auto& [s, c] : std::get<LinForm>(a).terms()) {
      if (s == std::get<SymbolId>(v)) return true;
    }
  }
  if (std::holds_alternative<FuncPtr>(a)) {
    for (const auto& arg : std::get<FuncPtr>(a)->args) {
      if (contains_var(arg, v)) return true;
    }
  }
  return false;
}

bool contains_var(const Expression& e, const Var& v) {
  for (const auto& t : e.terms()) {
    for (const auto& pa : t.factors) {
      if (atom_contains_var(pa.atom, v)) return true;
    }
  }
  return false;
}

static bool atom_contains_atom(const Atom& hay, const Atom& needle) {
  if (atoms_equal(hay, needle)) return true;
  if (std::holds_alternative<FuncPtr>(hay)) {
    for (const auto& arg : std::get<FuncPtr>(hay)->args) {
      if (contains_atom(arg, needle)) return true;
    }
  }
  return false;
}

bool contains_atom(const Expression& e, const Atom& a) {
  for (const auto& t : e.terms()) {
    for (const auto& pa : t.factors) {
      if (atom_contains_atom(pa.atom, a)) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

// Validates that an expression is a rational linear combination of plain
// symbols (an admissible exponential exponent after substitution).
LinForm expect_linear_form(const Expression& e) {
  LinForm lf;
  for (const auto& t : e.terms()) {
    if (t.factors.size() != 1 || t.factors[0].power != 1 ||
        !std::holds_alternative<SymbolId>(t.factors[0].atom)) {
      throw Error(Error::Kind::Domain,
                  "substitution would make an exponential exponent non-linear");
    }
    lf.add(std::get<SymbolId>(t.factors[0].atom), t.coeff);
  }
  return lf;
}

struct Substituter {
  const SymbolTable& table;
  const Bindings& b;

  Expression expr(const Expression& e) {
    Expression out;
    for (const auto& t : e.terms()) {
      Expression acc = Expression::rational(t.coeff);
      for (const auto& pa : t.factors) {
        acc = acc * pow(atom(pa.atom), pa.power);
        if (acc.is_zero()) break;
      }
      out += acc;
    }
    return out;
  }

  Expression atom(const Atom& a) {
    switch (a.index()) {
      case 0: {
        auto it = b.vars.find(Var{std::get<SymbolId>(a)});
        return it != b.vars.end() ? it->second : Expression::symbol(std::get<SymbolId>(a));
      }
      case 1: {
        auto it = b.vars.find(Var{std::get<JetCoord>(a)});
        return it != b.vars.end() ? it->second : Expression::jet(std::get<JetCoord>(a));
      }
      case 2: {
        const auto& lf = std::get<LinForm>(a);
        LinForm out;
        for (const auto& [s, c] : lf.terms()) {
          auto it = b.vars.find(Var{s});
          if (it == b.vars.end()) {
            out.add(s, c);
          } else {
            out.add(expect_linear_form(it->second), c);
          }
        }
        return Expression::exponential(out);
      }
      default:
        return func(*std::get<FuncPtr>(a));
    }
  }

  Expression func(const FuncAtom& f) {
    std::vector<Expression> args;
    args.reserve(f.args.size());
    for (const auto& arg : f.args) args.push_back(expr(arg));

    if (auto it = b.func_renames.find(f.fn); it != b.func_renames.end()) {
      const SymbolInfo& target = table.info(it->second);
      if (target.kind != SymbolKind::ArbitraryFunction ||
          target.arity != static_cast<int>(f.args.size())) {
        throw Error(Error::Kind::Arity,
                    "function substitution arity mismatch for " + table.info(f.fn).name);
      }
      return Expression::apply(it->second, f.deriv, std::move(args));
    }
    if (auto it = b.func_templates.find(f.fn); it != b.func_templates.end()) {
      const FuncTemplate& tpl = it->second;
      if (tpl.params.size() != f.args.size()) {
        throw Error(Error::Kind::Arity,
                    "template arity mismatch for " + table.info(f.fn).name);
      }
      Expression body = tpl.body;
      for (std::size_t i = 0; i < tpl.params.size(); ++i) {
        for (int k = 0; k < f.deriv[i]; ++k) body = differentiate(body, Var{tpl.params[i]});
      }
      Bindings inner;
      for (std::size_t i = 0; i < tpl.params.size(); ++i) {
        inner.vars[Var{tpl.params[i]}] = args[i];
      }
      return Substituter{table, inner}.expr(body);
    }
    return Expression::apply(f.fn, f.deriv, std::move(args));
  }
};

}  // namespace

Expression substitute(const SymbolTable& table, const Expression& e, const Bindings& b) {
  for (const auto& [v, repl] : b.vars) {
    if (contains_var(repl, v)) {
      throw Error(Error::Kind::Domain, "cyclic binding: a variable is bound to an expression containing itself");
    }
  }
  return Substituter{table, b}.expr(e);
}

Expression substitute_unchecked(const SymbolTable& table, const Expression& e, const Bindings& b) {
  return Substituter{table, b}.expr(e);
}

// ---------------------------------------------------------------------------
// Collect

Collected collect(const SymbolTable& table, const Expression& e, const std::vector<Atom>& basis) {
  auto in_basis = [&](const Atom& a) {
    for (const auto& ba : basis) {
      if (atoms_equal(a, ba)) return true;
    }
    return false;
  };
  Collected out;
  for (const auto& t : e.terms()) {
    Monomial key, rest;
    for (const auto& pa : t.factors) {
      if (in_basis(pa.atom)) {
        key.push_back(pa);
        continue;
      }
      if (std::holds_alternative<FuncPtr>(pa.atom)) {
        for (const auto& ba : basis) {
          if (atom_contains_atom(pa.atom, ba)) {
            throw Error(Error::Kind::Domain,
                        "basis atom appears inside a function-application argument in term " +
                            render_term(table, t));
          }
        }
      }
      rest.push_back(pa);
    }
    Expression coeff = Expression::from_terms({Term{t.coeff, rest}});
    auto [it, inserted] = out.try_emplace(key, coeff);
    if (!inserted) it->second += coeff;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace liesym
