#pragma once

#include <string>

#include "liesym/expr.hpp"

namespace liesym {

// Deterministic canonical rendering in the same grammar parse() accepts;
// parse(render(e)) == e for every expression over declared symbols.
std::string render(const SymbolTable& table, const Expression& e);
std::string render_term(const SymbolTable& table, const Term& t);
std::string render_monomial(const SymbolTable& table, const Monomial& m);

}  // namespace liesym
