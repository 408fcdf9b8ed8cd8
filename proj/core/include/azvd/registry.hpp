#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "azvd/azee.hpp"
#include "azvd/report.hpp"

namespace azvd {

enum class ParamKind { kExpr, kList };

struct Param {
  std::string name;
  ParamKind kind = ParamKind::kExpr;

  bool operator==(const Param&) const = default;
};

struct ProductionRule {
  std::string name;
  std::vector<Param> params;
  std::string doc;

  std::size_t arity() const { return params.size(); }
  const Param* param(std::string_view name) const;
};

/// The production set: rules in declaration order plus declared constants.
class RuleRegistry {
 public:
  /// Throws Error{kDuplicateRule} when the name is taken.
  void add_rule(ProductionRule rule);
  void add_constant(std::string name);

  const ProductionRule* find(std::string_view name) const;
  bool has_constant(std::string_view name) const;

  const std::vector<ProductionRule>& rules() const { return rules_; }
  const std::vector<std::string>& constants() const { return constants_; }

  /// First zero-arity rule; used as the universal filler when probing
  /// templates and coverage.
  std::optional<std::string> atomic_filler() const;

 private:
  std::vector<ProductionRule> rules_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::string> constants_;
};

/// `{ "constants": [..], "rules": [{ "name", "params": [{"name","kind"}], "doc" }] }`
RuleRegistry load_registry(const nlohmann::json& doc);
RuleRegistry load_registry_file(const std::filesystem::path& path);

/// Reports unknown rules/constants, missing, extra, duplicated and
/// misordered arguments, list/expression kind mismatches, empty lists and
/// unresolved slot placeholders. Empty iff `expr` is an expression over `reg`.
ValidationReport validate_expr(const Expr& expr, const RuleRegistry& reg);

}  // namespace azvd
