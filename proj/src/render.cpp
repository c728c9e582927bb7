#include "liesym/render.hpp"

namespace liesym {

namespace {

std::string render_linform(const SymbolTable& table, const LinForm& lf) {
  std::string out;
  bool first = true;
  for (const auto& [s, c] : lf.terms()) {
    Rat a = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1) out += rat_str(a) + "*";
    out += table.info(s).name;
  }
  return out;
}

std::string render_expression(const SymbolTable& table, const Expression& e, bool parenthesize_sum);

std::string render_atom(const SymbolTable& table, const Atom& a) {
  switch (a.index()) {
    case 0:
      return table.info(std::get<SymbolId>(a)).name;
    case 1:
      return std::get<JetCoord>(a).name();
    case 2:
      return "exp(" + render_linform(table, std::get<LinForm>(a)) + ")";
    default: {
      const FuncAtom& f = *std::get<FuncPtr>(a);
      std::string args;
      for (std::size_t i = 0; i < f.args.size(); ++i) {
        if (i) args += ",";
        args += render_expression(table, f.args[i], false);
      }
      int total = 0;
      for (int d : f.deriv) total += d;
      const std::string& name = table.info(f.fn).name;
      if (total == 0) return name + "(" + args + ")";
      // Prefer slot names when the arguments are plain distinct symbols.
      bool plain = true;
      std::vector<SymbolId> arg_syms;
      for (const auto& arg : f.args) {
        const auto& ts = arg.terms();
        if (ts.size() == 1 && ts[0].coeff == 1 && ts[0].factors.size() == 1 &&
            ts[0].factors[0].power == 1 &&
            std::holds_alternative<SymbolId>(ts[0].factors[0].atom)) {
          arg_syms.push_back(std::get<SymbolId>(ts[0].factors[0].atom));
        } else {
          plain = false;
          break;
        }
      }
      if (plain) {
        for (std::size_t i = 0; plain && i < arg_syms.size(); ++i) {
          for (std::size_t j = i + 1; j < arg_syms.size(); ++j) {
            if (arg_syms[i] == arg_syms[j]) {
              plain = false;
              break;
            }
          }
        }
      }
      std::string slots;
      for (std::size_t i = 0; i < f.deriv.size(); ++i) {
        for (int k = 0; k < f.deriv[i]; ++k) {
          slots += ",";
          slots += plain ? table.info(arg_syms[i]).name : std::to_string(i + 1);
        }
      }
      return "D[" + name + slots + "](" + args + ")";
    }
  }
}

std::string render_factors(const SymbolTable& table, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += "*";
    out += render_atom(table, m[i].atom);
    if (m[i].power != 1) out += "^" + std::to_string(m[i].power);
  }
  return out;
}

std::string render_expression(const SymbolTable& table, const Expression& e, bool parenthesize_sum) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : e.terms()) {
    Rat a = abs(t.coeff);
    std::string mag;
    if (t.factors.empty()) {
      mag = rat_str(a);
    } else {
      mag = render_factors(table, t.factors);
      if (a != 1) mag = rat_str(a) + "*" + mag;
    }
    if (first) {
      out += (t.coeff < 0 ? "-" : "") + mag;
      first = false;
    } else {
      out += (t.coeff < 0 ? " - " : " + ") + mag;
    }
  }
  if (parenthesize_sum && e.terms().size() > 1) return "(" + out + ")";
  return out;
}

}  // namespace

std::string render(const SymbolTable& table, const Expression& e) {
  return render_expression(table, e, false);
}

std::string render_term(const SymbolTable& table, const Term& t) {
  Expression e = Expression::from_terms({t});
  return render(table, e);
}

std::string render_monomial(const SymbolTable& table, const Monomial& m) {
  if (m.empty()) return "1";
  return render_factors(table, m);
}

}  // namespace liesym
