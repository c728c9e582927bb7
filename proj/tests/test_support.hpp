#pragma once

#include <cstdint>
#include <vector>

#include "liesym/evaluate.hpp"
#include "liesym/parse.hpp"
#include "liesym/render.hpp"

namespace liesym::testing {

// Deterministic generator; identical streams on every platform.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  Rat rational(long max_num = 5, long max_den = 3) {
    long num = range(-max_num, max_num);
    long den = range(1, max_den);
    return rat(num, den);
  }
  Rat nonzero_rational(long max_num = 5, long max_den = 3) {
    for (;;) {
      Rat r = rational(max_num, max_den);
      if (r != 0) return r;
    }
  }
};

struct ExprGenOptions {
  bool allow_exp = true;
  bool allow_func = true;
  bool allow_jets = true;
  int max_terms = 4;
  int max_factors = 3;
  int max_power = 2;
};

// A small workspace used by the kernel tests.
struct Fixture {
  SymbolTable table;
  SymbolId x, t, u, c, F;

  Fixture() {
    x = table.coordinate("x");
    t = table.coordinate("t");
    u = table.coordinate("u");
    c = table.constant("c");
    F = table.function("F", 2);
  }
};

inline Expression random_expression(Rng& rng, const Fixture& fx, const ExprGenOptions& opt) {
  std::vector<Term> terms;
  int nterms = static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_terms))) + 1;
  for (int i = 0; i < nterms; ++i) {
    Term t;
    t.coeff = rng.nonzero_rational();
    int nf = static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_factors + 1)));
    for (int k = 0; k < nf; ++k) {
      int power = static_cast<int>(rng.range(1, opt.max_power));
      switch (rng.below(opt.allow_jets ? 6 : 4)) {
        case 0: t.factors.push_back({Atom{fx.x}, power}); break;
        case 1: t.factors.push_back({Atom{fx.t}, power}); break;
        case 2: t.factors.push_back({Atom{fx.u}, power}); break;
        case 3: {
          if (opt.allow_exp && rng.below(2) == 0) {
            LinForm lf;
            lf.add(fx.x, rng.rational(2, 2));
            lf.add(fx.t, rng.rational(2, 2));
            if (!lf.is_zero()) {
              t.factors.push_back({Atom{lf}, 1});
              break;
            }
          }
          if (opt.allow_func && rng.below(2) == 0) {
            Expression arg1 = Expression::symbol(fx.x);
            Expression arg2 =
                rng.below(2) ? Expression::symbol(fx.u)
                             : Expression::symbol(fx.u) * Expression::symbol(fx.x);
            Expression fa = Expression::apply(fx.F, {0, 0}, {arg1, arg2});
            t.factors.push_back({fa.terms()[0].factors[0].atom, 1});
            break;
          }
          t.factors.push_back({Atom{fx.c}, power});
          break;
        }
        case 4: t.factors.push_back({Atom{JetCoord{1, 0}}, power}); break;
        default: t.factors.push_back({Atom{rng.below(2) ? JetCoord{0, 1} : JetCoord{2, 0}}, power}); break;
      }
    }
    terms.push_back(std::move(t));
  }
  return Expression::from_terms(std::move(terms));
}

}  // namespace liesym::testing
