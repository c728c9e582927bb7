#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "liesym/cli.hpp"
#include "liesym/workspace.hpp"
#include "test_support.hpp"

using namespace liesym;

namespace {

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int rc = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream f(path);
  f << content;
  return path;
}

const char* kAbelian = R"({
  "name": "abelian-demo",
  "coordinates": ["x", "t"],
  "basis": [
    {"name": "A", "coefficients": {"x": "1"}},
    {"name": "B", "coefficients": {"t": "1"}}
  ]
})";

const char* kNonClosing = R"({
  "name": "open",
  "coordinates": ["x"],
  "basis": [
    {"name": "A", "coefficients": {"x": "1"}},
    {"name": "B", "coefficients": {"x": "x^2"}}
  ]
})";

const char* kIrrational = R"({
  "name": "irrational",
  "coordinates": ["x", "t"],
  "basis": [
    {"name": "X1", "coefficients": {"x": "1"}},
    {"name": "X2", "coefficients": {"t": "1"}},
    {"name": "X3", "coefficients": {"x": "2*t", "t": "x"}}
  ]
})";

}  // namespace

TEST_CASE("workspace: bundled definition matches the shipped data file") {
  std::ifstream in(std::string(LIESYM_SOURCE_DIR) + "/data/burgers.json");
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == Workspace::bundled_json());
}

TEST_CASE("workspace: bundled build is complete") {
  Workspace ws = Workspace::bundled();
  CHECK(ws.name() == "burgers");
  CHECK(ws.is_equation_class());
  Workspace::Built built = ws.build();
  CHECK(built.ctx != nullptr);
  CHECK(built.algebra->dim() == 5);
  CHECK(built.optimal != nullptr);
  CHECK(built.printed_z.size() == 6);
  CHECK(ws.classification_fixture().size() == 6);
}

TEST_CASE("cli: bundled fixture comparisons pass with exit 0") {
  std::string out;
  CHECK(run_cli({"commutators"}, &out) == cli::kOk);
  CHECK(out.find("PASS: 25/25 cells match fixture 'commutator-table'") != std::string::npos);

  CHECK(run_cli({"adjoint"}, &out) == cli::kOk);
  CHECK(out.find("PASS: 25/25 cells match fixture 'adjoint-table'") != std::string::npos);
  CHECK(out.find("exp(s)*Y2") != std::string::npos);
  CHECK(out.find("-s*Y2 + Y4") != std::string::npos);
}

TEST_CASE("cli: workspace file loading equals the bundled default") {
  std::string from_file, from_default;
  std::string path = std::string(LIESYM_SOURCE_DIR) + "/data/burgers.json";
  CHECK(run_cli({"commutators", "--workspace", path}, &from_file) == cli::kOk);
  CHECK(run_cli({"commutators"}, &from_default) == cli::kOk);
  CHECK(from_file == from_default);
}

TEST_CASE("cli: abelian demo gives an all-zero table and no fixture") {
  std::string path = write_temp("ws_abelian.json", kAbelian);
  std::string out;
  CHECK(run_cli({"commutators", "--workspace", path}, &out) == cli::kOk);
  CHECK(out.find("no fixture declared") != std::string::npos);
  // every cell is zero
  std::string err;
  CHECK(run_cli({"adjoint", "--workspace", path}, &out, &err) == cli::kOk);
}

TEST_CASE("cli: non-closing workspace exits 2 and names the pair") {
  std::string path = write_temp("ws_open.json", kNonClosing);
  std::string out, err;
  CHECK(run_cli({"commutators", "--workspace", path}, &out, &err) == cli::kAlgebraError);
  CHECK(err.find("[A,B]") != std::string::npos);
}

TEST_CASE("cli: irrational adjoint eigenvalues exit 3") {
  std::string path = write_temp("ws_irrational.json", kIrrational);
  std::string out, err;
  // the algebra closes, so the commutator table is fine
  CHECK(run_cli({"commutators", "--workspace", path}, &out, &err) == cli::kOk);
  // the adjoint table needs exp of a matrix with irrational eigenvalues
  CHECK(run_cli({"adjoint", "--workspace", path}, &out, &err) == cli::kUnsupported);
  CHECK(err.find("unsupported") != std::string::npos);
}

TEST_CASE("cli: equation-class commands reject plain algebra workspaces") {
  std::string path = write_temp("ws_abelian2.json", kAbelian);
  std::string out, err;
  CHECK(run_cli({"classify", "--workspace", path}, &out, &err) == cli::kAlgebraError);
  CHECK(run_cli({"determine", "--workspace", path, "--field", "A"}, &out, &err) ==
        cli::kAlgebraError);
  CHECK(run_cli({"optimal", "--workspace", path, "--vector", "1,0"}, &out, &err) ==
        cli::kAlgebraError);
}

TEST_CASE("cli: equivalence family flags follow the worked cases") {
  std::string out;
  CHECK(run_cli({"equivalence-check", "--a", "1", "--b", "0", "--c1", "0", "--c2", "0"}, &out) ==
        cli::kDelta);
  CHECK(out.find("u_x^2: -2*f") != std::string::npos);

  CHECK(run_cli({"equivalence-check", "--a", "0", "--b", "0", "--c1", "1", "--c2", "0"}, &out) ==
        cli::kDelta);  // the Y5 generator check still flags the bundle
  CHECK(out.find("empty (exact)") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 64") {
  std::string out, err;
  CHECK(run_cli({"determine"}, &out, &err) == cli::kUsage);
  CHECK(run_cli({"optimal"}, &out, &err) == cli::kUsage);
  CHECK(run_cli({}, &out, &err) == cli::kUsage);
  CHECK(run_cli({"optimal", "--vector", "1,2"}, &out, &err) == cli::kUsage);
}

TEST_CASE("cli: determine examples") {
  std::string out;
  CHECK(run_cli({"determine", "--field", "Y2"}, &out) == cli::kOk);
  CHECK(out.find("residual: 0") != std::string::npos);

  CHECK(run_cli({"determine", "--field", "Y1"}, &out) == cli::kOk);
  CHECK(out.find("u_x^2: -D[f,x](x,u)") != std::string::npos);
  CHECK(out.find("u_xx: -D[g,x](x,u)") != std::string::npos);

  // concrete coefficients: the corrected row-3 pair has a zero residual
  CHECK(run_cli({"determine", "--field", "Y4", "--f", "u^-2*Phi(x)", "--g", "u^-1*Psi(x)"},
                &out) == cli::kOk);
  CHECK(out.find("residual: 0") != std::string::npos);
}

TEST_CASE("cli: repeated invocations are byte-identical") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"classify"},
        {"optimal", "--survey", "25", "--seed", "11"},
        {"equivalence-check"},
        {"adjoint", "--format", "json"}}) {
    std::string a, b;
    run_cli(args, &a);
    run_cli(args, &b);
    CHECK(a == b);
    CHECK(!a.empty());
  }
}

TEST_CASE("cli: classify formats") {
  std::string out;
  CHECK(run_cli({"classify", "--format", "latex"}, &out) == cli::kDelta);
  CHECK(out.find("\\begin{tabular}") != std::string::npos);
  CHECK(out.find("N & $Z$ & Invariant & Equation & Additional operator") != std::string::npos);

  CHECK(run_cli({"classify", "--format", "json"}, &out) == cli::kDelta);
  CHECK(out.find("\"verifications\"") != std::string::npos);

  // text format and exit-code contract
  CHECK(run_cli({"classify"}, &out) == cli::kDelta);
  CHECK(out.find("verification: 7/16 operator checks pass exactly") != std::string::npos);
}

TEST_CASE("cli: optimal vector and json report") {
  std::string out;
  CHECK(run_cli({"optimal", "--vector", "0,0,0,0,1"}, &out) == cli::kOk);
  CHECK(out.find("matched:    representative 5") != std::string::npos);

  CHECK(run_cli({"optimal", "--vector", "4,0,0,1,0", "--format", "json"}, &out) == cli::kOk);
  CHECK(out.find("\"sigma\": \"1/4\"") != std::string::npos);
  CHECK(out.find("\"representative\": 8") != std::string::npos);

  // unmatched vectors report the obstruction and exit 1
  std::string err;
  CHECK(run_cli({"optimal", "--vector", "0,3,0,0,1"}, &out, &err) == cli::kDelta);
  CHECK(out.find("matched:    none") != std::string::npos);
  CHECK(out.find("impossible") != std::string::npos);
}
