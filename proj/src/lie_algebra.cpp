#include "liesym/lie_algebra.hpp"

#include <map>

#include "liesym/render.hpp"

namespace liesym {

namespace {

// Flattens fields into exact coefficient vectors over the shared key set
// (direction, monomial) so span questions become linear algebra over Q.
struct Flattener {
  std::map<std::pair<SymbolId, Monomial>, std::size_t,
           bool (*)(const std::pair<SymbolId, Monomial>&, const std::pair<SymbolId, Monomial>&)>
      keys{+[](const std::pair<SymbolId, Monomial>& a, const std::pair<SymbolId, Monomial>& b) {
        if (a.first != b.first) return a.first < b.first;
        return compare(a.second, b.second) < 0;
      }};

  void index(const VectorField& v) {
    for (const auto& [d, coeff] : v.components()) {
      for (const auto& t : coeff.terms()) {
        keys.try_emplace({d, t.factors}, keys.size());
      }
    }
  }

  RatVector vectorize(const VectorField& v) const {
    RatVector out(keys.size(), rat(0));
    for (const auto& [d, coeff] : v.components()) {
      for (const auto& t : coeff.terms()) {
        auto it = keys.find({d, t.factors});
        if (it == keys.end()) {
          throw Error(Error::Kind::Domain, "field outside the indexed span");
        }
        out[it->second] = t.coeff;
      }
    }
    return out;
  }

  bool covers(const VectorField& v) const {
    for (const auto& [d, coeff] : v.components()) {
      for (const auto& t : coeff.terms()) {
        if (!keys.count({d, t.factors})) return false;
      }
    }
    return true;
  }
};

}  // namespace

LieAlgebraPresentation::LieAlgebraPresentation(const SymbolTable& table,
                                               std::vector<SymbolId> coords,
                                               std::vector<std::string> names,
                                               std::vector<VectorField> basis)
    : table_(&table), coords_(std::move(coords)), names_(std::move(names)),
      basis_(std::move(basis)) {
  if (names_.size() != basis_.size()) {
    throw Error(Error::Kind::Domain, "basis and name lists differ in length");
  }
  for (const auto& v : basis_) {
    for (const auto& [d, coeff] : v.components()) {
      bool ok = false;
      for (SymbolId c : coords_) ok = ok || c == d;
      if (!ok) {
        throw Error(Error::Kind::Domain,
                    "field component outside the declared coordinate list: d_" +
                        table.info(d).name);
      }
    }
  }

  Flattener fl;
  for (const auto& v : basis_) fl.index(v);
  const std::size_t m = basis_.size();

  // independence over Q
  RatMatrix rows;
  for (const auto& v : basis_) rows.push_back(fl.vectorize(v));
  if (rm_rank(rows) != m) {
    throw Error(Error::Kind::Domain, "basis fields are linearly dependent over the rationals");
  }

  // closure + structure constants
  c_.assign(m, std::vector<RatVector>(m, RatVector(m, rat(0))));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      VectorField br = commutator(basis_[i], basis_[j]);
      auto coeffs = in_basis(br);
      if (!coeffs) {
        throw Error(Error::Kind::NonClosure,
                    "commutator [" + names_[i] + "," + names_[j] +
                        "] lies outside the rational span of the basis");
      }
      for (std::size_t k = 0; k < m; ++k) {
        c_[i][j][k] = (*coeffs)[k];
        c_[j][i][k] = -(*coeffs)[k];
      }
    }
  }
}

std::optional<RatVector> LieAlgebraPresentation::in_basis(const VectorField& v) const {
  Flattener fl;
  for (const auto& b : basis_) fl.index(b);
  if (!fl.covers(v)) return std::nullopt;
  const std::size_t m = basis_.size();
  const std::size_t k = fl.keys.size();
  RatMatrix a = rm_zero(k, m);
  for (std::size_t j = 0; j < m; ++j) {
    RatVector col = fl.vectorize(basis_[j]);
    for (std::size_t i = 0; i < k; ++i) a[i][j] = col[i];
  }
  return rm_solve(a, fl.vectorize(v));
}

VectorField LieAlgebraPresentation::from_coefficients(const RatVector& v) const {
  VectorField out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v[i] != 0) out = out + v[i] * basis_[i];
  }
  return out;
}

RatMatrix LieAlgebraPresentation::ad_matrix(std::size_t i) const {
  const std::size_t m = basis_.size();
  RatMatrix a = rm_zero(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) a[k][j] = c_[i][j][k];
  }
  return a;
}

std::vector<std::vector<VectorField>> commutator_table(const LieAlgebraPresentation& alg) {
  const std::size_t m = alg.dim();
  std::vector<std::vector<VectorField>> out(m, std::vector<VectorField>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      RatVector coeffs(m, rat(0));
      for (std::size_t k = 0; k < m; ++k) coeffs[k] = alg.c(i, j, k);
      out[i][j] = alg.from_coefficients(coeffs);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// exact exp(sM)

namespace {

// coefficients of q(lam + y) as a series in y
std::vector<Rat> poly_shift(const std::vector<Rat>& p, const Rat& lam) {
  // Horner-style Taylor shift
  std::vector<Rat> out = p;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      out[j - 1] += lam * out[j];
      out[j - 1].canonicalize();
    }
  }
  return out;
}

// truncated inverse of a power series a (a[0] != 0) to the given order
std::vector<Rat> series_inverse(const std::vector<Rat>& a, std::size_t order) {
  std::vector<Rat> b(order, rat(0));
  b[0] = 1 / a[0];
  for (std::size_t k = 1; k < order; ++k) {
    Rat acc = rat(0);
    for (std::size_t j = 1; j <= k; ++j) {
      Rat aj = j < a.size() ? a[j] : rat(0);
      acc += aj * b[k - j];
    }
    b[k] = -acc / a[0];
    b[k].canonicalize();
  }
  return b;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(a.size() + b.size() - 1, rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
      out[i + j].canonicalize();
    }
  }
  return out;
}

RatMatrix poly_at_matrix(const std::vector<Rat>& p, const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix out = rm_zero(n, n);
  for (std::size_t i = p.size(); i-- > 0;) {
    out = rm_mul(out, m);
    for (std::size_t d = 0; d < n; ++d) {
      out[d][d] += p[i];
      out[d][d].canonicalize();
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Expression>> exact_exp(const RatMatrix& m, SymbolId s) {
  const std::size_t n = m.size();
  std::vector<Rat> charpoly = rm_charpoly(m);
  auto roots = rational_roots(charpoly);
  if (!roots) {
    throw Error(Error::Kind::Unsupported,
                "adjoint matrix has irrational or complex eigenvalues; unsupported algebra");
  }

  std::vector<std::vector<Expression>> out(n, std::vector<Expression>(n));
  for (const auto& [lam, mult] : roots->roots) {
    // eigenprojection E = (t * q)(M), t = (1/q) truncated at lam to order mult
    std::vector<Rat> q = {rat(1)};
    for (const auto& [lam2, mult2] : roots->roots) {
      if (lam2 == lam) continue;
      for (int k = 0; k < mult2; ++k) q = poly_mul(q, {-lam2, rat(1)});
    }
    RatMatrix proj;
    if (q.size() == 1) {  // single eigenvalue: E = I
      proj = rm_identity(n);
    } else {
      std::vector<Rat> series = series_inverse(poly_shift(q, lam), static_cast<std::size_t>(mult));
      // t(x) = sum_k series[k] (x - lam)^k
      std::vector<Rat> tpoly = {rat(0)};
      std::vector<Rat> shift_pow = {rat(1)};
      for (std::size_t k = 0; k < series.size(); ++k) {
        std::vector<Rat> piece = shift_pow;
        for (auto& c : piece) c *= series[k];
        if (piece.size() > tpoly.size()) tpoly.resize(piece.size(), rat(0));
        for (std::size_t i = 0; i < piece.size(); ++i) {
          tpoly[i] += piece[i];
          tpoly[i].canonicalize();
        }
        shift_pow = poly_mul(shift_pow, {-lam, rat(1)});
      }
      proj = poly_at_matrix(poly_mul(tpoly, q), m);
    }

    // exp(sM) E = e^{lam s} sum_{k<mult} s^k/k! (M - lam I)^k E
    RatMatrix nil = m;
    for (std::size_t d = 0; d < n; ++d) {
      nil[d][d] -= lam;
      nil[d][d].canonicalize();
    }
    RatMatrix power = proj;
    Rat factorial = rat(1);
    for (int k = 0; k < mult; ++k) {
      if (k > 0) {
        power = rm_mul(nil, power);
        factorial *= k;
      }
      if (rm_is_zero(power)) break;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t cidx = 0; cidx < n; ++cidx) {
          if (power[r][cidx] == 0) continue;
          Term term;
          term.coeff = power[r][cidx] / factorial;
          term.coeff.canonicalize();
          if (k > 0) term.factors.push_back(PowAtom{Atom{s}, k});
          if (lam != 0) {
            term.factors.push_back(PowAtom{Atom{LinForm::single(s, lam)}, 1});
          }
          out[r][cidx] += Expression::from_terms({term});
        }
      }
    }
  }
  return out;
}

AdjointMatrix adjoint_matrix(const LieAlgebraPresentation& alg, std::size_t i, SymbolId s) {
  RatMatrix m = rm_scale(rat(-1), alg.ad_matrix(i));
  return AdjointMatrix{exact_exp(m, s), s};
}

AdjointMatrix::Kind AdjointMatrix::kind() const {
  bool has_poly = false, has_exp = false, identity = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries.size(); ++j) {
      const Expression& e = entries[i][j];
      Expression expect = i == j ? Expression::integer(1) : Expression();
      if (!(e == expect)) identity = false;
      for (const auto& t : e.terms()) {
        for (const auto& pa : t.factors) {
          if (std::holds_alternative<SymbolId>(pa.atom) && std::get<SymbolId>(pa.atom) == param) {
            has_poly = true;
          }
          if (std::holds_alternative<LinForm>(pa.atom)) has_exp = true;
        }
      }
    }
  }
  if (identity) return Kind::Identity;
  if (has_poly && has_exp) return Kind::Mixed;
  return has_exp ? Kind::Scaling : Kind::Translation;
}

RatMatrix AdjointMatrix::at_translation(const Rat& s_value) const {
  if (kind() == Kind::Scaling || kind() == Kind::Mixed) {
    throw Error(Error::Kind::Domain, "matrix has exponential cells; use a scaling parameter");
  }
  const std::size_t n = entries.size();
  RatMatrix out = rm_zero(n, n);
  Bindings b;
  b.vars[Var{param}] = Expression::rational(s_value);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Expression v = substitute_unchecked(SymbolTable{}, entries[i][j], b);
      const Rat* r = v.as_rational();
      if (!r && !v.is_zero()) {
        throw Error(Error::Kind::Domain, "entry did not specialize to a rational");
      }
      out[i][j] = v.is_zero() ? rat(0) : *r;
    }
  }
  return out;
}

RatMatrix AdjointMatrix::at_scaling(const Rat& sigma) const {
  if (sigma <= 0) {
    throw Error(Error::Kind::Domain, "scaling parameter sigma = e^s must be positive");
  }
  if (kind() == Kind::Mixed) {
    throw Error(Error::Kind::Unsupported, "mixed polynomial-exponential adjoint cell");
  }
  const std::size_t n = entries.size();
  RatMatrix out = rm_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rat acc = rat(0);
      for (const auto& t : entries[i][j].terms()) {
        Rat v = t.coeff;
        for (const auto& pa : t.factors) {
          if (std::holds_alternative<LinForm>(pa.atom)) {
            const auto& lf = std::get<LinForm>(pa.atom);
            if (lf.terms().size() != 1 || lf.terms()[0].first != param ||
                !is_integer(lf.terms()[0].second)) {
              throw Error(Error::Kind::Unsupported, "non-integer exponential rate in adjoint cell");
            }
            v *= rat_pow(sigma, lf.terms()[0].second.get_num().get_si());
          } else if (std::holds_alternative<SymbolId>(pa.atom) &&
                     std::get<SymbolId>(pa.atom) == param) {
            throw Error(Error::Kind::Domain,
                        "matrix has polynomial cells; use a translation parameter");
          } else {
            throw Error(Error::Kind::Domain, "unexpected atom in adjoint cell");
          }
        }
        acc += v;
      }
      acc.canonicalize();
      out[i][j] = acc;
    }
  }
  return out;
}

std::vector<std::vector<std::vector<Expression>>> adjoint_table(
    const LieAlgebraPresentation& alg, SymbolId s) {
  const std::size_t m = alg.dim();
  std::vector<std::vector<std::vector<Expression>>> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    AdjointMatrix am = adjoint_matrix(alg, i, s);
    out[i].resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Expression> cell(m);
      for (std::size_t k = 0; k < m; ++k) cell[k] = am.entries[k][j];
      out[i][j] = std::move(cell);
    }
  }
  return out;
}

std::string render_basis_combo(const SymbolTable& table,
                               const std::vector<std::string>& names,
                               const std::vector<Expression>& coeffs) {
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    Expression c = coeffs[k];
    bool neg = false;
    if (c.terms().size() == 1 && c.terms()[0].coeff < 0) {
      neg = true;
      c = -c;
    }
    std::string piece;
    if (c == Expression::integer(1)) {
      piece = names[k];
    } else if (c.terms().size() == 1) {
      piece = render(table, c) + "*" + names[k];
    } else {
      piece = "(" + render(table, c) + ")*" + names[k];
    }
    if (first) {
      out += (neg ? "-" : "") + piece;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  return out.empty() ? "0" : out;
}

std::string render_basis_combo(const std::vector<std::string>& names, const RatVector& coeffs) {
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    Rat a = abs(coeffs[k]);
    std::string piece = (a == 1 ? names[k] : rat_str(a) + "*" + names[k]);
    if (first) {
      out += (coeffs[k] < 0 ? "-" : "") + piece;
      first = false;
    } else {
      out += (coeffs[k] < 0 ? " - " : " + ") + piece;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace liesym
