#include "liesym/workspace.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "liesym/parse.hpp"

namespace liesym {

using nlohmann::json;

namespace {

SymbolKind kind_from_string(const std::string& s) {
  if (s == "coordinate") return SymbolKind::Coordinate;
  if (s == "group-parameter") return SymbolKind::GroupParameter;
  if (s == "constant-parameter") return SymbolKind::ConstantParameter;
  if (s == "arbitrary-function") return SymbolKind::ArbitraryFunction;
  throw Error(Error::Kind::Domain, "unknown symbol kind: " + s);
}

}  // namespace

Workspace Workspace::load(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(Error::Kind::Syntax, std::string("workspace JSON: ") + e.what());
  }
  Workspace ws;
  ws.name_ = doc.value("name", "workspace");
  for (const auto& c : doc.at("coordinates")) ws.coordinates_.push_back(c.get<std::string>());
  for (const auto& s : doc.value("symbols", json::array())) {
    ws.symbols_.push_back({s.at("name").get<std::string>(),
                           {s.at("kind").get<std::string>(), s.value("arity", 0)}});
  }
  for (const auto& b : doc.at("basis")) {
    BasisSpec spec;
    spec.name = b.at("name").get<std::string>();
    for (const auto& [dir, expr] : b.at("coefficients").items()) {
      spec.coefficients.push_back({dir, expr.get<std::string>()});
    }
    ws.basis_.push_back(std::move(spec));
  }
  for (const auto& p : doc.value("labeling_permutation", json::array())) {
    std::size_t pos = p.get<std::size_t>();
    if (pos < 1 || pos > ws.basis_.size()) {
      throw Error(Error::Kind::Domain, "labeling permutation index out of range");
    }
    ws.labeling_to_basis_.push_back(pos - 1);
  }
  if (doc.contains("fixtures")) ws.fixtures_raw_ = doc.at("fixtures").dump();
  return ws;
}

bool Workspace::is_equation_class() const {
  return coordinates_ == std::vector<std::string>{"x", "t", "u", "f", "g"};
}

bool Workspace::has_fixture(const std::string& key) const {
  if (fixtures_raw_.empty()) return false;
  return json::parse(fixtures_raw_).contains(key);
}

std::vector<std::vector<std::string>> Workspace::table_fixture(const std::string& key) const {
  std::vector<std::vector<std::string>> out;
  if (!has_fixture(key)) return out;
  const json doc = json::parse(fixtures_raw_);
  for (const auto& row : doc.at(key)) {
    out.push_back(row.get<std::vector<std::string>>());
  }
  return out;
}

std::vector<RowFixture> Workspace::classification_fixture() const {
  std::vector<RowFixture> out;
  if (!has_fixture("classification")) return out;
  const json doc = json::parse(fixtures_raw_);
  for (const auto& row : doc.at("classification").at("rows")) {
    RowFixture fx;
    fx.z = row.at("z").get<std::string>();
    fx.invariant = row.at("invariant").get<std::string>();
    fx.f = row.at("f").get<std::string>();
    fx.g = row.at("g").get<std::string>();
    fx.equation = row.at("equation").get<std::string>();
    fx.operators = row.at("operators").get<std::vector<std::string>>();
    fx.members = row.at("members").get<std::vector<std::string>>();
    out.push_back(std::move(fx));
  }
  return out;
}

Workspace::Built Workspace::build() const {
  Built built;
  SymbolTable* table;
  if (is_equation_class()) {
    built.ctx = std::make_unique<EquationContext>();
    table = &built.ctx->eq;
  } else {
    built.generic = std::make_unique<SymbolTable>();
    table = built.generic.get();
    for (const auto& c : coordinates_) table->coordinate(c);
    table->group_parameter("s");
    table->group_parameter("s1");
    table->group_parameter("s2");
  }
  for (const auto& [name, kind_arity] : symbols_) {
    table->declare(name, kind_from_string(kind_arity.first), kind_arity.second);
    if (built.ctx && kind_from_string(kind_arity.first) == SymbolKind::ConstantParameter) {
      built.ctx->sym.declare(name, SymbolKind::ConstantParameter, 0);
    }
  }
  for (const auto& c : coordinates_) built.coords.push_back(table->require(c));
  built.s = table->require("s");

  for (const auto& spec : basis_) {
    VectorField v;
    for (const auto& [dir, expr] : spec.coefficients) {
      v.set(table->require(dir), parse(*table, expr));
    }
    built.names.push_back(spec.name);
    built.basis.push_back(std::move(v));
  }
  built.algebra = std::make_unique<LieAlgebraPresentation>(*table, built.coords, built.names,
                                                           built.basis);

  if (!fixtures_raw_.empty()) {
    json fixtures = json::parse(fixtures_raw_);
    if (fixtures.contains("representatives") && !labeling_to_basis_.empty()) {
      std::vector<RepresentativeSpec> reps;
      for (const auto& r : fixtures.at("representatives")) {
        RepresentativeSpec spec;
        spec.label = r.at("label").get<std::string>();
        for (const auto& c : r.at("combo")) {
          Rat v(c.get<std::string>());
          v.canonicalize();
          spec.combo.push_back(v);
        }
        for (const auto& [dir, expr] : r.at("printed").items()) {
          spec.printed.set(table->require(dir), parse(*table, expr.get<std::string>()));
        }
        reps.push_back(std::move(spec));
      }
      built.optimal =
          std::make_unique<OptimalSystem>(*built.algebra, labeling_to_basis_, std::move(reps));
    }
    if (fixtures.contains("classification")) {
      for (const auto& z : fixtures.at("classification").at("z_operators")) {
        VectorField v;
        for (const auto& [dir, expr] : z.at("coefficients").items()) {
          v.set(table->require(dir), parse(*table, expr.get<std::string>()));
        }
        built.printed_z.push_back(std::move(v));
      }
    }
  }
  return built;
}

Workspace Workspace::bundled() { return load(bundled_json()); }

const std::string& Workspace::bundled_json() {
  static const std::string text = R"liesym_ws({
  "name": "burgers",
  "coordinates": ["x", "t", "u", "f", "g"],
  "symbols": [],
  "basis": [
    {"name": "Y1", "coefficients": {"x": "1"}},
    {"name": "Y2", "coefficients": {"t": "1"}},
    {"name": "Y3", "coefficients": {"u": "1"}},
    {"name": "Y4", "coefficients": {"t": "t", "u": "u", "f": "-2*f", "g": "-g"}},
    {"name": "Y5", "coefficients": {"x": "1", "f": "2*f", "g": "g"}}
  ],
  "labeling_permutation": [2, 1, 3, 4, 5],
  "fixtures": {
    "commutator_table": [
      ["0", "0", "0", "0", "0"],
      ["0", "0", "0", "Y2", "0"],
      ["0", "0", "0", "Y3", "0"],
      ["0", "-Y2", "-Y3", "0", "0"],
      ["0", "0", "0", "0", "0"]
    ],
    "adjoint_table": [
      ["Y1", "Y2", "Y3", "Y4", "Y5"],
      ["Y1", "Y2", "Y3", "-s*Y2 + Y4", "Y5"],
      ["Y1", "Y2", "Y3", "-s*Y3 + Y4", "Y5"],
      ["Y1", "exp(s)*Y2", "exp(s)*Y3", "Y4", "Y5"],
      ["Y1", "Y2", "Y3", "Y4", "Y5"]
    ],
    "representatives": [
      {"label": "Y^1", "combo": ["1", "0", "0", "0", "0"], "printed": {"t": "1"}},
      {"label": "Y^2", "combo": ["0", "1", "0", "0", "0"], "printed": {"x": "1"}},
      {"label": "Y^3", "combo": ["0", "0", "1", "0", "0"], "printed": {"u": "1"}},
      {"label": "Y^4", "combo": ["0", "0", "0", "1", "0"],
       "printed": {"t": "t", "u": "u", "f": "-2*f", "g": "-g"}},
      {"label": "Y^5", "combo": ["0", "0", "0", "0", "1"],
       "printed": {"x": "1", "f": "2*f", "g": "g"}},
      {"label": "Y^6", "combo": ["1", "1", "0", "0", "0"], "printed": {"t": "1", "x": "1"}},
      {"label": "Y^7", "combo": ["-1", "1", "0", "0", "0"], "printed": {"t": "-1", "x": "1"}},
      {"label": "Y^8", "combo": ["1", "0", "0", "1", "0"],
       "printed": {"t": "t + 1", "u": "u", "f": "-2*f", "g": "-g"}},
      {"label": "Y^9", "combo": ["-1", "0", "0", "1", "0"],
       "printed": {"t": "t - 1", "u": "u", "f": "-2*f", "g": "-g"}},
      {"label": "Y^10", "combo": ["1", "0", "0", "0", "1"],
       "printed": {"t": "1", "x": "1", "f": "2*f", "g": "g"}},
      {"label": "Y^11", "combo": ["-1", "0", "0", "0", "1"],
       "printed": {"t": "-1", "x": "1", "f": "2*f", "g": "g"}},
      {"label": "Y^12", "combo": ["0", "0", "0", "1", "1"],
       "printed": {"t": "t", "x": "1", "u": "u"}},
      {"label": "Y^13", "combo": ["0", "0", "0", "-1", "1"],
       "printed": {"t": "-t", "x": "1", "u": "-u", "f": "4*f", "g": "2*g"}},
      {"label": "Y^14", "combo": ["1", "0", "0", "1", "1"],
       "printed": {"t": "t + 1", "x": "1", "u": "u"}},
      {"label": "Y^15", "combo": ["-1", "0", "0", "1", "1"],
       "printed": {"t": "t - 1", "x": "1", "u": "u"}},
      {"label": "Y^16", "combo": ["1", "0", "0", "-1", "1"],
       "printed": {"t": "1 - t", "u": "-u", "f": "2*f", "g": "g"}},
      {"label": "Y^17", "combo": ["-1", "0", "0", "-1", "1"],
       "printed": {"t": "-1 - t", "x": "1", "u": "-u", "f": "4*f", "g": "2*g"}}
    ],
    "classification": {
      "z_operators": [
        {"name": "Z^1", "coefficients": {"x": "1"}},
        {"name": "Z^2", "coefficients": {"u": "1"}},
        {"name": "Z^3", "coefficients": {"u": "u", "f": "-2*f", "g": "-g"}},
        {"name": "Z^4", "coefficients": {"x": "1", "f": "2*f", "g": "g"}},
        {"name": "Z^5", "coefficients": {"x": "1", "u": "u"}},
        {"name": "Z^6", "coefficients": {"x": "1", "u": "-u", "f": "4*f", "g": "2*g"}}
      ],
      "rows": [
        {
          "z": "d_x", "invariant": "u",
          "f": "Phi(u)", "g": "Psi(u)",
          "equation": "u_t = Phi(u)*u_x^2 + Psi(u)*u_xx",
          "operators": ["d_x", "d_x + d_t", "d_x - d_t"],
          "members": ["Y^2", "Y^6", "Y^7"]
        },
        {
          "z": "d_u", "invariant": "x",
          "f": "Phi(x)", "g": "Psi(x)",
          "equation": "u_t = Phi(x)*u_x^2 + Psi(x)*u_xx",
          "operators": ["d_u"],
          "members": ["Y^3"]
        },
        {
          "z": "u*d_u - 2*f*d_f - g*d_g", "invariant": "x",
          "f": "u^2*Phi(x)", "g": "u*Psi(x)",
          "equation": "u_t = u^2*Phi(x)*u_x^2 + u*Psi(x)*u_xx",
          "operators": ["t*d_t + u*d_u", "(1 + t)*d_t + u*d_u", "(-1 + t)*d_t + u*d_u"],
          "members": ["Y^4", "Y^8", "Y^9", "-Y^16"]
        },
        {
          "z": "d_x + 2*f*d_f + g*d_g", "invariant": "u",
          "f": "exp(x^2)*Phi(u)", "g": "exp(x)*Psi(u)",
          "equation": "u_t = exp(x^2)*Phi(u)*u_x^2 + exp(x)*Psi(u)*u_xx",
          "operators": ["d_x", "d_x + d_t", "d_x - d_t"],
          "members": ["Y^5", "Y^10", "Y^11"]
        },
        {
          "z": "d_x + u*d_u", "invariant": "u*exp(-x)",
          "f": "Phi(lambda)", "g": "u*Psi(lambda)",
          "equation": "u_t = Phi(lambda)*u_x^2 + u*Psi(lambda)*u_xx",
          "operators": ["d_x + t*d_t + u*d_u", "d_x + (1 + t)*d_t + u*d_u"],
          "members": ["Y^12", "Y^14", "Y^15"]
        },
        {
          "z": "d_x - u*d_u + 4*f*d_f + 2*g*d_g", "invariant": "-u^-1",
          "f": "exp(x^4)*Phi(lambda)", "g": "exp(x^2)*Psi(lambda)",
          "equation": "u_t = exp(x^4)*Phi(lambda)*u_x^2 + exp(x^2)*Psi(lambda)*u_xx",
          "operators": ["d_x - t*d_t - u*d_u", "d_x + (-1 - t)*d_t - u*d_u"],
          "members": ["Y^13", "Y^17"]
        }
      ]
    }
  }
}
)liesym_ws";
  return text;
}

}  // namespace liesym
