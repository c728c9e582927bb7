#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liesym {

using SymbolId = std::uint32_t;

enum class SymbolKind {
  Coordinate,
  GroupParameter,
  ConstantParameter,
  ArbitraryFunction,
};

struct SymbolInfo {
  std::string name;
  SymbolKind kind = SymbolKind::Coordinate;
  int arity = 0;  // > 0 only for ArbitraryFunction
};

class Error : public std::runtime_error {
 public:
  enum class Kind {
    Syntax,
    UnknownSymbol,
    Arity,
    Domain,        // bad value / shape for an operation
    OrderCap,
    NonClosure,
    Unsupported,   // e.g. irrational ad eigenvalues
    Usage,
  };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Symbol declarations for one workspace. Names are unique; kinds are
// immutable after declaration. Ids are dense indices in declaration order,
// which fixes the canonical atom order for everything downstream.
class SymbolTable {
 public:
  SymbolId declare(const std::string& name, SymbolKind kind, int arity = 0);
  SymbolId coordinate(const std::string& name) { return declare(name, SymbolKind::Coordinate); }
  SymbolId group_parameter(const std::string& name) { return declare(name, SymbolKind::GroupParameter); }
  SymbolId constant(const std::string& name) { return declare(name, SymbolKind::ConstantParameter); }
  SymbolId function(const std::string& name, int arity) {
    return declare(name, SymbolKind::ArbitraryFunction, arity);
  }

  std::optional<SymbolId> find(const std::string& name) const;
  SymbolId require(const std::string& name) const;
  const SymbolInfo& info(SymbolId id) const;
  std::size_t size() const { return symbols_.size(); }

 private:
  std::vector<SymbolInfo> symbols_;
  std::map<std::string, SymbolId> by_name_;
};

}  // namespace liesym
