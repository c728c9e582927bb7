#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "liesym/cli.hpp"
#include "liesym/evaluate.hpp"
#include "liesym/parse.hpp"
#include "liesym/render.hpp"
#include "liesym/workspace.hpp"

namespace py = pybind11;
using namespace liesym;

namespace {

// One bundled workspace per module; all operations are pure.
struct Module {
  Workspace ws = Workspace::bundled();
  Workspace::Built built = ws.build();
  const EquationContext& ctx() const { return *built.ctx; }

  Var var_by_name(const std::string& name) const {
    if (auto id = ctx().sym.find(name)) return Var{*id};
    if (name.size() > 2 && name.rfind("u_", 0) == 0) {
      JetCoord j;
      for (std::size_t i = 2; i < name.size(); ++i) {
        if (name[i] == 'x') {
          ++j.nx;
        } else if (name[i] == 't') {
          ++j.nt;
        } else {
          throw Error(Error::Kind::UnknownSymbol, "unknown variable: " + name);
        }
      }
      return Var{j};
    }
    throw Error(Error::Kind::UnknownSymbol, "unknown variable: " + name);
  }

  VectorField field_from(const std::string& xi1, const std::string& xi2,
                         const std::string& phi) const {
    VectorField v;
    v.set(ctx().sx, parse(ctx().sym, xi1));
    v.set(ctx().st, parse(ctx().sym, xi2));
    v.set(ctx().su, parse(ctx().sym, phi));
    return v;
  }

  Expression coeff(const std::string& text, bool is_f) const {
    if (text == "symbolic") return is_f ? ctx().f_symbolic() : ctx().g_symbolic();
    return parse(ctx().sym, text);
  }
};

Module& mod() {
  static Module m;
  return m;
}

}  // namespace

PYBIND11_MODULE(_liesym, m) {
  m.doc() = "exact symmetry-classification toolkit for u_t = f(x,u) u_x^2 + g(x,u) u_xx";

  m.def("canonicalize", [](const std::string& text) {
    return render(mod().ctx().sym, parse(mod().ctx().sym, text));
  });

  m.def("differentiate", [](const std::string& text, const std::string& var) {
    const auto& ctx = mod().ctx();
    return render(ctx.sym, differentiate(parse(ctx.sym, text), mod().var_by_name(var)));
  });

  m.def("total_derivative", [](const std::string& text, const std::string& var) {
    const auto& ctx = mod().ctx();
    JetSpace js = ctx.sym_jet();
    SymbolId v = var == "x" ? ctx.sx : var == "t" ? ctx.st : throw Error(Error::Kind::Usage, "var must be x or t");
    return render(ctx.sym, js.total_derivative(parse(ctx.sym, text), v));
  });

  m.def("evaluate",
        [](const std::string& text, const std::map<std::string, std::string>& assignment) {
          const auto& ctx = mod().ctx();
          EvalContext ec;
          for (const auto& [name, value] : assignment) {
            Rat r(value);
            r.canonicalize();
            ec.values[mod().var_by_name(name)] = r;
          }
          return rat_str(evaluate(ctx.sym, parse(ctx.sym, text), ec));
        });

  m.def("symmetry_residual",
        [](const std::string& xi1, const std::string& xi2, const std::string& phi,
           const std::string& f, const std::string& g) {
          const auto& ctx = mod().ctx();
          return render(ctx.sym, symmetry_residual(ctx, mod().field_from(xi1, xi2, phi),
                                                   mod().coeff(f, true), mod().coeff(g, false)));
        },
        py::arg("xi1"), py::arg("xi2"), py::arg("phi"), py::arg("f") = "symbolic",
        py::arg("g") = "symbolic");

  m.def("determining_system",
        [](const std::string& xi1, const std::string& xi2, const std::string& phi,
           const std::string& f, const std::string& g) {
          const auto& ctx = mod().ctx();
          DeterminingSystem sys =
              determining_system(ctx, mod().field_from(xi1, xi2, phi), mod().coeff(f, true),
                                 mod().coeff(g, false));
          std::map<std::string, std::string> out;
          for (const auto& [mono, coeff] : sys.items) {
            out[render_monomial(ctx.sym, mono)] = render(ctx.sym, coeff);
          }
          return out;
        },
        py::arg("xi1"), py::arg("xi2"), py::arg("phi"), py::arg("f") = "symbolic",
        py::arg("g") = "symbolic");

  m.def("commutator_table", []() {
    const auto& alg = *mod().built.algebra;
    std::vector<std::vector<std::string>> cells(alg.dim(), std::vector<std::string>(alg.dim()));
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        RatVector coeffs(alg.dim(), rat(0));
        for (std::size_t k = 0; k < alg.dim(); ++k) coeffs[k] = alg.c(i, j, k);
        cells[i][j] = render_basis_combo(alg.names(), coeffs);
      }
    }
    return cells;
  });

  m.def("adjoint_table", []() {
    const auto& built = mod().built;
    const auto& alg = *built.algebra;
    auto table = adjoint_table(alg, built.s);
    std::vector<std::vector<std::string>> cells(alg.dim(), std::vector<std::string>(alg.dim()));
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        cells[i][j] = render_basis_combo(built.table(), alg.names(), table[i][j]);
      }
    }
    return cells;
  });

  m.def("normalize", [](const std::vector<std::string>& vector_text) {
    const auto& osys = *mod().built.optimal;
    RatVector v;
    for (const auto& c : vector_text) {
      Rat r(c);
      r.canonicalize();
      v.push_back(r);
    }
    NormalizationReport r = osys.normalize_printed(v);
    py::dict out;
    out["representative"] = r.representative;
    out["case"] = r.case_label;
    std::vector<std::string> achieved;
    for (const auto& c : r.achieved) achieved.push_back(rat_str(c));
    out["achieved"] = achieved;
    std::vector<std::string> discrepancies;
    for (const auto& d : r.discrepancies) discrepancies.push_back(d.case_label + ": " + d.note);
    out["discrepancies"] = discrepancies;
    std::vector<py::dict> steps;
    for (const auto& s : r.word.steps) {
      py::dict step;
      step["generator"] = osys.normalization_algebra().names()[s.generator];
      step["type"] = s.scaling ? "scaling" : "translation";
      step["parameter"] = rat_str(s.parameter);
      steps.push_back(step);
    }
    out["steps"] = steps;
    return out;
  });

  m.def("classify", []() {
    const auto& built = mod().built;
    const auto& ctx = mod().ctx();
    ClassificationReport report =
        build_table(ctx, *built.optimal, built.printed_z, mod().ws.classification_fixture());
    std::vector<py::dict> rows;
    for (const auto& row : report.rows) {
      py::dict r;
      r["n"] = row.index;
      r["z"] = render_field(ctx.eq, row.z.field);
      r["invariant"] = render(ctx.eq, row.inv.lambda);
      r["equation"] = render_row_equation(ctx, row);
      std::vector<std::string> verified, failed;
      for (const auto& cand : row.candidates) {
        (cand.verified ? verified : failed).push_back(render_field(ctx.sym, cand.op));
      }
      r["operators"] = verified;
      r["unverified"] = failed;
      rows.push_back(r);
    }
    py::dict out;
    out["rows"] = rows;
    out["deltas"] = report.deltas;
    out["verifications_performed"] = report.verifications_performed;
    out["verifications_passed"] = report.verifications_passed;
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int rc = cli::run(args, out, err);
    return py::make_tuple(rc, out.str(), err.str());
  });

  py::register_exception<Error>(m, "LiesymError");
}
