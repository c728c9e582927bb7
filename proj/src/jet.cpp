#include "liesym/jet.hpp"

#include <set>

namespace liesym {

JetSpace::JetSpace(SymbolId x, SymbolId t, SymbolId u, int order_cap)
    : x_(x), t_(t), u_(u), cap_(order_cap) {
  // two total derivatives of a second-order expression must close
  if (cap_ < 3) throw Error(Error::Kind::Domain, "jet order cap must be >= 3");
}

namespace {

void gather_jets(const Expression& e, std::set<std::pair<int, int>>* jets, bool* has_u,
                 SymbolId u) {
  for (const auto& t : e.terms()) {
    for (const auto& pa : t.factors) {
      if (std::holds_alternative<JetCoord>(pa.atom)) {
        const auto& j = std::get<JetCoord>(pa.atom);
        jets->insert({j.nx, j.nt});
      } else if (std::holds_alternative<SymbolId>(pa.atom)) {
        if (std::get<SymbolId>(pa.atom) == u) *has_u = true;
      } else if (std::holds_alternative<FuncPtr>(pa.atom)) {
        for (const auto& arg : std::get<FuncPtr>(pa.atom)->args) {
          gather_jets(arg, jets, has_u, u);
        }
      }
    }
  }
}

}  // namespace

Expression JetSpace::total_derivative(const Expression& e, SymbolId v) const {
  if (v != x_ && v != t_) {
    throw Error(Error::Kind::Domain, "total derivative direction must be x or t");
  }
  const bool wrt_x = (v == x_);
  std::set<std::pair<int, int>> jets;
  bool has_u = false;
  gather_jets(e, &jets, &has_u, u_);

  Expression out = differentiate(e, Var{v});
  if (has_u) {
    JetCoord next{wrt_x ? 1 : 0, wrt_x ? 0 : 1};
    out += Expression::jet(next) * differentiate(e, Var{u_});
  }
  for (const auto& [nx, nt] : jets) {
    JetCoord j{nx, nt};
    JetCoord next{nx + (wrt_x ? 1 : 0), nt + (wrt_x ? 0 : 1)};
    if (next.order() > cap_) {
      Expression de = differentiate(e, Var{j});
      if (!de.is_zero()) {
        throw Error(Error::Kind::OrderCap,
                    "total derivative would create " + next.name() + " above the order cap " +
                        std::to_string(cap_));
      }
      continue;
    }
    out += Expression::jet(next) * differentiate(e, Var{j});
  }
  return out;
}

namespace {

void require_jet_free(const VectorField& field) {
  for (const auto& [d, coeff] : field.components()) {
    std::set<std::pair<int, int>> jets;
    bool has_u = false;
    gather_jets(coeff, &jets, &has_u, static_cast<SymbolId>(-1));
    if (!jets.empty()) {
      throw Error(Error::Kind::Domain, "field coefficients must not contain jet coordinates");
    }
  }
}

}  // namespace

Characteristic characteristic(const JetSpace& js, const VectorField& field) {
  require_jet_free(field);
  Expression q = field.coefficient(js.u());
  q -= field.coefficient(js.x()) * Expression::jet(JetCoord{1, 0});
  q -= field.coefficient(js.t()) * Expression::jet(JetCoord{0, 1});
  return Characteristic{q};
}

ProlongedField prolong2(const JetSpace& js, const VectorField& field) {
  require_jet_free(field);
  const Expression& xi1 = field.coefficient(js.x());
  const Expression& xi2 = field.coefficient(js.t());
  const Expression& phi = field.coefficient(js.u());
  const Expression ux = Expression::jet(JetCoord{1, 0});
  const Expression ut = Expression::jet(JetCoord{0, 1});
  const Expression uxx = Expression::jet(JetCoord{2, 0});
  const Expression uxt = Expression::jet(JetCoord{1, 1});

  ProlongedField out;
  out.base = field;
  out.phi_x = js.total_derivative(phi, js.x()) - ux * js.total_derivative(xi1, js.x()) -
              ut * js.total_derivative(xi2, js.x());
  out.phi_t = js.total_derivative(phi, js.t()) - ux * js.total_derivative(xi1, js.t()) -
              ut * js.total_derivative(xi2, js.t());
  out.phi_xx = js.total_derivative(out.phi_x, js.x()) - uxx * js.total_derivative(xi1, js.x()) -
               uxt * js.total_derivative(xi2, js.x());
  out.phi_xt = js.total_derivative(out.phi_x, js.t()) - uxx * js.total_derivative(xi1, js.t()) -
               uxt * js.total_derivative(xi2, js.t());
  return out;
}

}  // namespace liesym
