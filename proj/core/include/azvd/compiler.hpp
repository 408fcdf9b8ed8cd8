#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "azvd/azee.hpp"
#include "azvd/catalog.hpp"
#include "azvd/diagram.hpp"
#include "azvd/registry.hpp"

namespace azvd {

/// Compiles a complete diagram: each layout's template with its slots
/// replaced by the compiled fills. Throws Error{kIncompleteDiagram} naming
/// the first empty slot (depth-first), plus whatever check_diagram throws.
Expr compile(const Diagram& d, const Catalog& cat);

/// Which layout to use when a template has several variants. Templates
/// absent from `choices` use their default layout.
struct VariantPolicy {
  std::map<std::string, std::string> choices;  // template id -> layout id
};

/// Builds a diagram antecedent of `e`: at each node the most specific
/// matching template (most rule applications, then catalog order) is
/// chosen, its slots bound to whole sub-expressions and synthesized in
/// turn. compile(synthesize(e)) == e.
///
/// Throws Error{kUnknownRule}/{kInvalidExpression} when `e` does not
/// validate, {kUnknownLayout} for a policy choice outside the template's
/// variants, and {kNoAntecedent} when no template matches.
Diagram synthesize(const Expr& e, const Catalog& cat, const RuleRegistry& reg,
                   const VariantPolicy& policy = {});

/// Slot bindings produced by matching a template against an expression.
struct Bindings {
  std::map<std::string, Expr> single;
  std::map<std::string, std::vector<Expr>> spliced;
};

std::optional<Bindings> match_template(const Expr& templ, const Expr& e);
Expr instantiate(const Expr& templ, const Bindings& bindings);

struct CoverageEntry {
  std::string subject;  // rule, ^constant, or template id
  bool ok = false;
  std::string detail;
};

struct CoverageReport {
  std::vector<CoverageEntry> rules;     // one per rule and constant
  std::vector<CoverageEntry> variants;  // one per template id

  bool ok() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Probes every rule with a minimal application (EXPR params get the
/// registry's atomic filler, LIST params a two-item list of it), checks
/// that synthesize then compile is the identity, and checks that all
/// variants of each template compile identically on a canonical fill
/// (one distinct atomic rule per slot name).
CoverageReport coverage_check(const RuleRegistry& reg, const Catalog& cat);

}  // namespace azvd
