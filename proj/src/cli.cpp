#include "liesym/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "liesym/parse.hpp"
#include "liesym/render.hpp"
#include "liesym/workspace.hpp"

namespace liesym::cli {

using nlohmann::json;

namespace {

struct CommonOpts {
  std::string workspace_file;
  std::string format = "text";
};

Workspace load_workspace(const CommonOpts& opts) {
  if (opts.workspace_file.empty()) return Workspace::bundled();
  std::ifstream in(opts.workspace_file);
  if (!in) {
    throw Error(Error::Kind::Usage, "cannot open workspace file: " + opts.workspace_file);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return Workspace::load(ss.str());
}

// ---- table rendering -------------------------------------------------------

void print_text_table(std::ostream& out, const std::vector<std::string>& names,
                      const std::vector<std::vector<std::string>>& cells) {
  std::size_t width = 2;
  for (const auto& n : names) width = std::max(width, n.size());
  for (const auto& row : cells) {
    for (const auto& c : row) width = std::max(width, c.size());
  }
  auto pad = [&](const std::string& s) {
    return s + std::string(width + 2 - s.size(), ' ');
  };
  out << pad("");
  for (const auto& n : names) out << pad(n);
  out << "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out << pad(names[i]);
    for (const auto& c : cells[i]) out << pad(c);
    out << "\n";
  }
}

void print_latex_table(std::ostream& out, const std::string& corner,
                       const std::vector<std::string>& names,
                       const std::vector<std::vector<std::string>>& cells) {
  out << "\\begin{tabular}{l";
  for (std::size_t i = 0; i < names.size(); ++i) out << "l";
  out << "}\n\\hline\n" << corner;
  for (const auto& n : names) out << " & $" << n << "$";
  out << " \\\\\n\\hline\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out << "$" << names[i] << "$";
    for (const auto& c : cells[i]) out << " & $" << c << "$";
    out << " \\\\\n";
  }
  out << "\\hline\n\\end{tabular}\n";
}

int compare_with_fixture(std::ostream& out, const std::vector<std::vector<std::string>>& cells,
                         const std::vector<std::vector<std::string>>& fixture,
                         const std::string& label) {
  if (fixture.empty()) {
    out << "no fixture declared for " << label << "\n";
    return kOk;
  }
  int total = 0, matched = 0;
  std::vector<std::string> mismatches;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      ++total;
      if (i < fixture.size() && j < fixture[i].size() && cells[i][j] == fixture[i][j]) {
        ++matched;
      } else {
        mismatches.push_back("cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             "): machine '" + cells[i][j] + "' vs fixture '" +
                             (i < fixture.size() && j < fixture[i].size() ? fixture[i][j] : "?") +
                             "'");
      }
    }
  }
  if (matched == total) {
    out << "PASS: " << matched << "/" << total << " cells match fixture '" << label << "'\n";
    return kOk;
  }
  out << "DELTA: " << (total - matched) << "/" << total << " cells differ from fixture '"
      << label << "'\n";
  for (const auto& m : mismatches) out << "  " << m << "\n";
  return kDelta;
}

// ---- commutators -----------------------------------------------------------

int cmd_commutators(const CommonOpts& opts, std::ostream& out) {
  Workspace ws = load_workspace(opts);
  Workspace::Built built = ws.build();
  const auto& alg = *built.algebra;

  std::vector<std::vector<std::string>> cells(alg.dim(), std::vector<std::string>(alg.dim()));
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      RatVector coeffs(alg.dim(), rat(0));
      for (std::size_t k = 0; k < alg.dim(); ++k) coeffs[k] = alg.c(i, j, k);
      cells[i][j] = render_basis_combo(alg.names(), coeffs);
    }
  }
  if (opts.format == "latex") {
    print_latex_table(out, "$[\\cdot,\\cdot]$", alg.names(), cells);
  } else if (opts.format == "json") {
    json doc;
    doc["names"] = alg.names();
    doc["cells"] = cells;
    out << doc.dump(2) << "\n";
  } else {
    print_text_table(out, alg.names(), cells);
  }
  return compare_with_fixture(out, cells, ws.table_fixture("commutator_table"),
                              "commutator-table");
}

// ---- adjoint ---------------------------------------------------------------

int cmd_adjoint(const CommonOpts& opts, bool at_zero, std::ostream& out) {
  Workspace ws = load_workspace(opts);
  Workspace::Built built = ws.build();
  const auto& alg = *built.algebra;
  auto table = adjoint_table(alg, built.s);

  std::vector<std::vector<std::string>> cells(alg.dim(), std::vector<std::string>(alg.dim()));
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      std::vector<Expression> coeffs = table[i][j];
      if (at_zero) {
        Bindings b;
        b.vars[Var{built.s}] = Expression();
        for (auto& c : coeffs) c = substitute_unchecked(built.table(), c, b);
      }
      cells[i][j] = render_basis_combo(built.table(), alg.names(), coeffs);
    }
  }
  if (opts.format == "latex") {
    print_latex_table(out, "$\\mathrm{Ad}$", alg.names(), cells);
  } else if (opts.format == "json") {
    json doc;
    doc["names"] = alg.names();
    doc["cells"] = cells;
    out << doc.dump(2) << "\n";
  } else {
    print_text_table(out, alg.names(), cells);
  }
  if (at_zero) return kOk;  // identity render, not compared against the fixture
  return compare_with_fixture(out, cells, ws.table_fixture("adjoint_table"), "adjoint-table");
}

// ---- determine -------------------------------------------------------------

int cmd_determine(const CommonOpts& opts, const std::string& field_name, std::string f_text,
                  std::string g_text, std::ostream& out) {
  Workspace ws = load_workspace(opts);
  Workspace::Built built = ws.build();
  if (!built.ctx) {
    throw Error(Error::Kind::Domain, "workspace does not define the equation class");
  }
  const EquationContext& ctx = *built.ctx;

  VectorField x;
  bool found = false;
  for (std::size_t i = 0; i < built.names.size(); ++i) {
    if (built.names[i] == field_name) {
      x = to_symmetry_side(ctx, built.basis[i]);
      found = true;
      break;
    }
  }
  if (!found) {
    throw Error(Error::Kind::Usage, "unknown basis field: " + field_name);
  }
  Expression f = f_text == "symbolic" ? ctx.f_symbolic() : liesym::parse(ctx.sym, f_text);
  Expression g = g_text == "symbolic" ? ctx.g_symbolic() : liesym::parse(ctx.sym, g_text);

  DeterminingSystem sys = determining_system(ctx, x, f, g);
  if (opts.format == "json") {
    json doc;
    doc["field"] = render_field(ctx.sym, x);
    doc["residual"] = render(ctx.sym, sys.residual);
    json items = json::array();
    for (const auto& [mono, coeff] : sys.items) {
      items.push_back({{"monomial", render_monomial(ctx.sym, mono)},
                       {"coefficient", render(ctx.sym, coeff)}});
    }
    doc["determining_equations"] = items;
    out << doc.dump(2) << "\n";
  } else {
    out << "field: " << render_field(ctx.sym, x) << "\n";
    out << "residual: " << render(ctx.sym, sys.residual) << "\n";
    if (!sys.items.empty()) {
      out << "determining equations (coefficient = 0 per jet monomial):\n";
      for (const auto& [mono, coeff] : sys.items) {
        out << "  " << render_monomial(ctx.sym, mono) << ": " << render(ctx.sym, coeff) << "\n";
      }
    }
  }
  return kOk;
}

// ---- equivalence-check -----------------------------------------------------

void print_system(std::ostream& out, const EquationContext& ctx, const DeterminingSystem& sys,
                  const std::string& label) {
  out << label << ":";
  if (sys.empty()) {
    out << " empty (exact)\n";
    return;
  }
  out << "\n";
  for (const auto& [mono, coeff] : sys.items) {
    out << "  " << render_monomial(ctx.eq, mono) << ": " << render(ctx.eq, coeff) << "\n";
  }
}

int cmd_equivalence(const CommonOpts& opts, const std::string& a_text, const std::string& b_text,
                    const std::string& c1_text, const std::string& c2_text, std::ostream& out) {
  Workspace ws = load_workspace(opts);
  Workspace::Built built = ws.build();
  if (!built.ctx) {
    throw Error(Error::Kind::Domain, "workspace does not define the equation class");
  }
  const EquationContext& ctx = *built.ctx;

  int rc = kOk;
  out << "generator check (field with d_f coefficient mu, d_g coefficient nu):\n";
  for (std::size_t i = 0; i < built.basis.size(); ++i) {
    EquivalenceField y;
    for (SymbolId d : {ctx.ex, ctx.et, ctx.eu}) {
      y.base.set(d, built.basis[i].coefficient(d));
    }
    y.mu = built.basis[i].coefficient(ctx.ef);
    y.nu = built.basis[i].coefficient(ctx.eg);
    EquivalenceResiduals res = equivalence_residuals(ctx, y);
    if (res.all_zero()) {
      out << "  " << built.names[i] << ": PASS (all residuals vanish)\n";
    } else {
      rc = kDelta;
      out << "  " << built.names[i] << ": FAIL";
      if (!res.main.is_zero()) out << "  main = " << render(ctx.eq, res.main);
      if (!res.ft.is_zero()) out << "  mu^t = " << render(ctx.eq, res.ft);
      if (!res.gt.is_zero()) out << "  nu^t = " << render(ctx.eq, res.gt);
      out << "\n";
    }
  }

  auto parse_or_generic = [&](const std::string& text) -> std::optional<Expression> {
    if (text == "generic") return std::nullopt;
    return liesym::parse(ctx.eq, text);
  };
  std::optional<Expression> a = parse_or_generic(a_text);
  std::optional<Expression> b = parse_or_generic(b_text);
  Expression c1 =
      c1_text == "generic" ? Expression::symbol(ctx.ec1) : liesym::parse(ctx.eq, c1_text);
  Expression c2 =
      c2_text == "generic" ? Expression::symbol(ctx.ec2) : liesym::parse(ctx.eq, c2_text);

  out << "candidate family: xi1 = a(x), xi2 = c1*t + c2, phi = c1*u + b(x)\n";
  DeterminingSystem printed =
      check_equivalence_family(ctx, a, b, c1, c2, FamilyForm::AsPrinted);
  print_system(out, ctx, printed,
               "residuals with mu = -2*f*(c1 - a(x)), nu = -g*(c1 - D[a,1](x))");
  DeterminingSystem corrected =
      check_equivalence_family(ctx, a, b, c1, c2, FamilyForm::MachineCorrected);
  print_system(out, ctx, corrected,
               "residuals with mu = -2*f*(c1 - D[a,1](x)), nu = -g*(c1 - 2*D[a,1](x))");
  if (!printed.empty()) {
    out << "note: the family as printed leaves the nonzero cells above; in particular the\n"
           "      constant cell is -g*b''(x), so the printed constraint b''(x) = c1 - D[a,1](x)\n"
           "      does not clear it, and the u_x^2/u_xx cells fix mu, nu to the corrected forms\n";
    rc = kDelta;
  }
  if (!corrected.empty()) {
    out << "note: every surviving coefficient must vanish identically\n"
           "      (for generic a, b that means D[a,1,1](x) = 0, D[b,1](x) = 0, D[b,1,1](x) = 0)\n";
  }
  return rc;
}

// ---- optimal ---------------------------------------------------------------

json word_to_json(const OptimalSystem& osys, const GroupWord& word) {
  json steps = json::array();
  for (const auto& s : word.steps) {
    steps.push_back({{"generator", osys.normalization_algebra().names()[s.generator]},
                     {"type", s.scaling ? "scaling" : "translation"},
                     {s.scaling ? "sigma" : "s", rat_str(s.parameter)}});
  }
  json doc;
  if (word.prescale) doc["prescale"] = rat_str(*word.prescale);
  doc["steps"] = steps;
  return doc;
}

json report_to_json(const OptimalSystem& osys, const NormalizationReport& r) {
  auto vec = [](const RatVector& v) {
    json arr = json::array();
    for (const auto& c : v) arr.push_back(rat_str(c));
    return arr;
  };
  json doc;
  doc["input"] = vec(r.input);
  doc["achieved"] = vec(r.achieved);
  doc["case"] = r.case_label;
  doc["representative"] = r.representative;
  if (r.representative > 0) {
    doc["representative_label"] = osys.representatives()[static_cast<std::size_t>(r.representative - 1)].label;
  }
  doc["word"] = word_to_json(osys, r.word);
  json disc = json::array();
  for (const auto& d : r.discrepancies) {
    disc.push_back({{"case", d.case_label}, {"note", d.note}});
  }
  doc["discrepancies"] = disc;
  return doc;
}

void print_report_text(std::ostream& out, const OptimalSystem& osys,
                       const NormalizationReport& r) {
  auto vec = [](const RatVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += rat_str(v[i]);
    }
    return s + ")";
  };
  out << "input:      " << vec(r.input) << "\n";
  out << "case:       " << r.case_label << "\n";
  if (r.word.prescale) out << "prescale:   " << rat_str(*r.word.prescale) << "\n";
  for (const auto& s : r.word.steps) {
    out << "step:       Ad(exp(" << (s.scaling ? "s" : rat_str(s.parameter)) << "*"
        << osys.normalization_algebra().names()[s.generator] << "))";
    if (s.scaling) out << " with sigma = e^s = " << rat_str(s.parameter);
    out << "\n";
  }
  out << "achieved:   " << vec(r.achieved) << "\n";
  if (r.representative > 0) {
    out << "matched:    representative " << r.representative << " ("
        << osys.representatives()[static_cast<std::size_t>(r.representative - 1)].label << ")\n";
  } else {
    out << "matched:    none\n";
  }
  for (const auto& d : r.discrepancies) {
    out << "discrepancy [case " << d.case_label << "]: " << d.note << "\n";
  }
}

int cmd_optimal(const CommonOpts& opts, const std::string& vector_text, int survey_n,
                std::uint64_t seed, std::ostream& out) {
  Workspace ws = load_workspace(opts);
  Workspace::Built built = ws.build();
  if (!built.optimal) {
    throw Error(Error::Kind::Domain, "workspace declares no representatives");
  }
  const OptimalSystem& osys = *built.optimal;

  out << "normalization labeling: ";
  for (std::size_t k = 0; k < osys.permutation().size(); ++k) {
    if (k) out << ", ";
    out << "Y" << (k + 1) << " -> " << osys.algebra().names()[osys.permutation()[k]];
  }
  out << "\n";
  for (std::size_t i = 0; i < osys.representatives().size(); ++i) {
    if (!osys.representative_display_consistent(i)) {
      out << "note: printed operator form of " << osys.representatives()[i].label
          << " does not equal its stated combination; using the combination\n";
    }
  }

  if (!vector_text.empty()) {
    RatVector v;
    std::stringstream ss(vector_text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      Rat r(piece);
      r.canonicalize();
      v.push_back(r);
    }
    if (v.size() != osys.normalization_algebra().dim()) {
      throw Error(Error::Kind::Usage, "--vector needs " +
                                          std::to_string(osys.normalization_algebra().dim()) +
                                          " comma-separated rationals");
    }
    NormalizationReport r = osys.normalize_printed(v);
    if (opts.format == "json") {
      out << report_to_json(osys, r).dump(2) << "\n";
    } else {
      print_report_text(out, osys, r);
    }
    return (r.representative > 0 && r.discrepancies.empty()) ? kOk : kDelta;
  }

  SurveySummary s = osys.survey(survey_n, seed);
  if (opts.format == "json") {
    json doc;
    json hist = json::object();
    for (const auto& [rep, count] : s.histogram) {
      std::string key = rep == 0 ? "unmatched" : "representative " + std::to_string(rep);
      hist[key] = count;
    }
    doc["samples"] = survey_n;
    doc["seed"] = seed;
    doc["histogram"] = hist;
    json reports = json::array();
    for (const auto& r : s.reports) reports.push_back(report_to_json(osys, r));
    doc["reports"] = reports;
    doc["notes"] = s.notes;
    out << doc.dump(2) << "\n";
  } else {
    out << "survey: " << survey_n << " samples, seed " << seed << "\n";
    out << "histogram:\n";
    for (const auto& [rep, count] : s.histogram) {
      if (rep == 0) {
        out << "  unmatched: " << count << "\n";
      } else {
        out << "  representative " << rep << " ("
            << osys.representatives()[static_cast<std::size_t>(rep - 1)].label
            << "): " << count << "\n";
      }
    }
    int printed = 0;
    for (std::size_t i = 0; i < s.reports.size(); ++i) {
      for (const auto& d : s.reports[i].discrepancies) {
        out << "sample " << i << " discrepancy [case " << d.case_label << "]: " << d.note
            << "\n";
        ++printed;
      }
    }
    out << "discrepant steps: " << printed << "\n";
    for (const auto& n : s.notes) out << "note: " << n << "\n";
  }
  return kOk;
}

// ---- classify ---------------------------------------------------------------

int cmd_classify(const CommonOpts& opts, std::ostream& out) {
  Workspace ws = load_workspace(opts);
  Workspace::Built built = ws.build();
  if (!built.ctx || !built.optimal || built.printed_z.empty()) {
    throw Error(Error::Kind::Domain, "workspace does not declare the classification stage");
  }
  const EquationContext& ctx = *built.ctx;
  ClassificationReport report =
      build_table(ctx, *built.optimal, built.printed_z, ws.classification_fixture());

  auto ops_of = [&](const ClassificationRow& row) {
    std::string ops;
    auto verified = row.additional_operators();
    for (std::size_t i = 0; i < verified.size(); ++i) {
      if (i) ops += "; ";
      ops += render_field(ctx.sym, verified[i]->op);
    }
    return ops.empty() ? std::string("(none verified)") : ops;
  };

  if (opts.format == "json") {
    json rows = json::array();
    for (const auto& row : report.rows) {
      Expression lam = lambda_on_symmetry_side(ctx, row.z);
      json cands = json::array();
      for (const auto& c : row.candidates) {
        cands.push_back({{"operator", render_field(ctx.sym, c.op)},
                         {"source", c.source},
                         {"residual", render(ctx.sym, c.residual)},
                         {"verified", c.verified}});
      }
      rows.push_back({{"n", row.index},
                      {"z", render_field(ctx.eq, row.z.field)},
                      {"invariant", render(ctx.eq, row.inv.lambda)},
                      {"f", render_form_with_lambda(ctx, row.f_form, lam)},
                      {"g", render_form_with_lambda(ctx, row.g_form, lam)},
                      {"equation", render_row_equation(ctx, row)},
                      {"candidates", cands}});
    }
    json doc;
    doc["rows"] = rows;
    doc["deltas"] = report.deltas;
    doc["verifications"] = {{"performed", report.verifications_performed},
                            {"passed", report.verifications_passed}};
    out << doc.dump(2) << "\n";
  } else if (opts.format == "latex") {
    out << "\\begin{tabular}{lllll}\n\\hline\n"
        << "N & $Z$ & Invariant & Equation & Additional operator \\\\\n\\hline\n";
    for (const auto& row : report.rows) {
      out << row.index << " & $" << render_field(ctx.eq, row.z.field) << "$ & $"
          << render(ctx.eq, row.inv.lambda) << "$ & $" << render_row_equation(ctx, row)
          << "$ & $" << ops_of(row) << "$ \\\\\n";
    }
    out << "\\hline\n\\end{tabular}\n";
    for (const auto& d : report.deltas) out << "% delta: " << d << "\n";
  } else {
    for (const auto& row : report.rows) {
      out << "row " << row.index << "\n";
      out << "  Z:          " << render_field(ctx.eq, row.z.field) << "\n";
      out << "  invariant:  " << render(ctx.eq, row.inv.lambda) << "\n";
      out << "  equation:   " << render_row_equation(ctx, row) << "\n";
      out << "  operators:  " << ops_of(row) << "\n";
      for (const auto& c : row.candidates) {
        if (!c.verified) {
          out << "  unverified candidate " << render_field(ctx.sym, c.op) << " (from "
              << c.source << "): residual = " << render(ctx.sym, c.residual) << "\n";
        }
      }
    }
    out << "verification: " << report.verifications_passed << "/"
        << report.verifications_performed << " operator checks pass exactly\n";
    if (report.deltas.empty()) {
      out << "PASS: table matches the fixture\n";
    } else {
      out << "DELTA: " << report.deltas.size() << " differences vs the fixture\n";
      for (const auto& d : report.deltas) out << "  " << d << "\n";
    }
  }
  return report.deltas.empty() ? kOk : kDelta;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact symmetry-classification toolkit for u_t = f(x,u) u_x^2 + g(x,u) u_xx"};
  app.require_subcommand(1);
  app.fallthrough(false);

  CommonOpts opts;
  std::string field_name, f_text = "symbolic", g_text = "symbolic";
  std::string a_text = "generic", b_text = "generic", c1_text = "generic", c2_text = "generic";
  std::string vector_text;
  int survey_n = 0;
  std::uint64_t seed = 0;
  bool at_zero = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--workspace", opts.workspace_file, "workspace JSON file (default: bundled)");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "latex", "json"}));
  };

  CLI::App* commutators = app.add_subcommand("commutators", "commutator table + fixture check");
  add_common(commutators);
  CLI::App* adjoint = app.add_subcommand("adjoint", "adjoint table + fixture check");
  add_common(adjoint);
  adjoint->add_flag("--s0", at_zero, "render the table at s = 0");
  CLI::App* determine = app.add_subcommand("determine", "symmetry residual and determining system");
  add_common(determine);
  determine->add_option("--field", field_name, "basis field name")->required();
  determine->add_option("--f", f_text, "f(x,u) expression or 'symbolic'");
  determine->add_option("--g", g_text, "g(x,u) expression or 'symbolic'");
  CLI::App* equivalence = app.add_subcommand("equivalence-check",
                                             "equivalence residuals and family constraints");
  add_common(equivalence);
  equivalence->add_option("--a", a_text, "a(x) expression or 'generic'");
  equivalence->add_option("--b", b_text, "b(x) expression or 'generic'");
  equivalence->add_option("--c1", c1_text, "c1 rational or 'generic'");
  equivalence->add_option("--c2", c2_text, "c2 rational or 'generic'");
  CLI::App* optimal = app.add_subcommand("optimal", "normalization to the representative list");
  add_common(optimal);
  optimal->add_option("--vector", vector_text, "comma-separated coefficients (normalization labeling)");
  optimal->add_option("--survey", survey_n, "number of random samples");
  optimal->add_option("--seed", seed, "survey seed");
  CLI::App* classify = app.add_subcommand("classify", "classification rows + fixture deltas");
  add_common(classify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (commutators->parsed()) return cmd_commutators(opts, out);
    if (adjoint->parsed()) return cmd_adjoint(opts, at_zero, out);
    if (determine->parsed()) return cmd_determine(opts, field_name, f_text, g_text, out);
    if (equivalence->parsed()) {
      return cmd_equivalence(opts, a_text, b_text, c1_text, c2_text, out);
    }
    if (optimal->parsed()) {
      if (vector_text.empty() && survey_n <= 0) {
        err << "usage error: optimal needs --vector or --survey\n";
        return kUsage;
      }
      return cmd_optimal(opts, vector_text, survey_n, seed, out);
    }
    if (classify->parsed()) return cmd_classify(opts, out);
    err << "usage error: no command\n";
    return kUsage;
  } catch (const Error& e) {
    switch (e.kind()) {
      case Error::Kind::Usage:
        err << "usage error: " << e.what() << "\n";
        return kUsage;
      case Error::Kind::Unsupported:
        err << "unsupported algebra: " << e.what() << "\n";
        return kUnsupported;
      default:
        err << "error: " << e.what() << "\n";
        return kAlgebraError;
    }
  }
}

}  // namespace liesym::cli
