#pragma once

#include <memory>

#include "liesym/classify.hpp"

namespace liesym {

struct BasisSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> coefficients;  // direction -> expr
};

// One self-contained problem definition: coordinates, basis fields, the
// normalization labeling, and the reference fixtures the tool adjudicates
// against. Loaded from a JSON document; a bundled definition ships in the
// binary. Commands never mutate the file.
class Workspace {
 public:
  static Workspace load(const std::string& json_text);
  static const std::string& bundled_json();
  static Workspace bundled();

  const std::string& name() const { return name_; }
  bool is_equation_class() const;  // coordinates are exactly (x,t,u,f,g)
  bool has_fixture(const std::string& key) const;

  // fixture accessors (empty when absent)
  std::vector<std::vector<std::string>> table_fixture(const std::string& key) const;
  std::vector<RowFixture> classification_fixture() const;

  // Instantiated workspace: symbol tables, algebra, optimal system.
  struct Built {
    std::unique_ptr<EquationContext> ctx;      // set when equation class
    std::unique_ptr<SymbolTable> generic;      // otherwise
    std::vector<SymbolId> coords;
    std::vector<std::string> names;
    std::vector<VectorField> basis;
    SymbolId s = 0;
    std::unique_ptr<LieAlgebraPresentation> algebra;
    std::unique_ptr<OptimalSystem> optimal;    // when representatives present
    std::vector<VectorField> printed_z;        // classification operators

    const SymbolTable& table() const { return ctx ? ctx->eq : *generic; }
  };
  Built build() const;

 private:
  std::string name_;
  std::vector<std::string> coordinates_;
  std::vector<std::pair<std::string, std::pair<std::string, int>>> symbols_;  // name -> kind, arity
  std::vector<BasisSpec> basis_;
  std::vector<std::size_t> labeling_to_basis_;  // 0-based
  std::string fixtures_raw_;                   // fixtures subtree, reparsed on demand
};

}  // namespace liesym
