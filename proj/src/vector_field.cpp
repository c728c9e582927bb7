#include "liesym/vector_field.hpp"

#include <algorithm>

#include "liesym/render.hpp"

namespace liesym {

VectorField VectorField::single(SymbolId d, Expression coeff) {
  VectorField v;
  v.set(d, std::move(coeff));
  return v;
}

void VectorField::set(SymbolId d, Expression coeff) {
  auto it = std::lower_bound(comps_.begin(), comps_.end(), d,
                             [](const auto& p, SymbolId v) { return p.first < v; });
  if (it != comps_.end() && it->first == d) {
    if (coeff.is_zero()) {
      comps_.erase(it);
    } else {
      it->second = std::move(coeff);
    }
  } else if (!coeff.is_zero()) {
    comps_.insert(it, {d, std::move(coeff)});
  }
}

const Expression& VectorField::coefficient(SymbolId d) const {
  static const Expression kZero;
  auto it = std::lower_bound(comps_.begin(), comps_.end(), d,
                             [](const auto& p, SymbolId v) { return p.first < v; });
  if (it != comps_.end() && it->first == d) return it->second;
  return kZero;
}

Expression VectorField::apply(const Expression& e) const {
  Expression out;
  for (const auto& [d, coeff] : comps_) {
    out += coeff * differentiate(e, Var{d});
  }
  return out;
}

VectorField VectorField::operator+(const VectorField& o) const {
  VectorField out = *this;
  for (const auto& [d, coeff] : o.comps_) {
    out.set(d, out.coefficient(d) + coeff);
  }
  return out;
}

VectorField VectorField::operator-() const {
  VectorField out = *this;
  for (auto& [d, coeff] : out.comps_) coeff = -coeff;
  return out;
}

VectorField operator*(const Rat& c, const VectorField& v) {
  VectorField out;
  for (const auto& [d, coeff] : v.components()) out.set(d, c * coeff);
  return out;
}

bool operator==(const VectorField& a, const VectorField& b) {
  if (a.comps_.size() != b.comps_.size()) return false;
  for (std::size_t i = 0; i < a.comps_.size(); ++i) {
    if (a.comps_[i].first != b.comps_[i].first) return false;
    if (!(a.comps_[i].second == b.comps_[i].second)) return false;
  }
  return true;
}

VectorField commutator(const VectorField& x, const VectorField& y) {
  VectorField out;
  for (const auto& [d, eta] : y.components()) out.set(d, x.apply(eta));
  for (const auto& [d, xi] : x.components()) out.set(d, out.coefficient(d) - y.apply(xi));
  return out;
}

std::string render_field(const SymbolTable& table, const VectorField& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, coeff] : v.components()) {
    std::string dir = "d_" + table.info(d).name;
    std::string piece;
    bool negated = false;
    if (const Rat* r = coeff.as_rational()) {
      Rat a = abs(*r);
      negated = *r < 0;
      piece = (a == 1 ? dir : rat_str(a) + "*" + dir);
    } else if (coeff.terms().size() == 1) {
      Term t = coeff.terms()[0];
      negated = t.coeff < 0;
      t.coeff = abs(t.coeff);
      piece = render_term(table, t) + "*" + dir;
    } else {
      piece = "(" + render(table, coeff) + ")*" + dir;
    }
    if (first) {
      out += (negated ? "-" : "") + piece;
      first = false;
    } else {
      out += (negated ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace liesym
