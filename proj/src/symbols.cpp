#include "liesym/symbols.hpp"

namespace liesym {

SymbolId SymbolTable::declare(const std::string& name, SymbolKind kind, int arity) {
  if (by_name_.count(name)) {
    throw Error(Error::Kind::Domain, "symbol already declared: " + name);
  }
  if (kind == SymbolKind::ArbitraryFunction) {
    if (arity < 1) {
      throw Error(Error::Kind::Arity, "function symbol needs arity >= 1: " + name);
    }
  } else if (arity != 0) {
    throw Error(Error::Kind::Arity, "non-function symbol cannot have arity: " + name);
  }
  SymbolId id = static_cast<SymbolId>(symbols_.size());
  symbols_.push_back({name, kind, arity});
  by_name_.emplace(name, id);
  return id;
}

std::optional<SymbolId> SymbolTable::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

SymbolId SymbolTable::require(const std::string& name) const {
  auto id = find(name);
  if (!id) throw Error(Error::Kind::UnknownSymbol, "unknown symbol: " + name);
  return *id;
}

const SymbolInfo& SymbolTable::info(SymbolId id) const {
  return symbols_.at(id);
}

}  // namespace liesym
