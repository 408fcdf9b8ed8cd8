#include "azvd/registry.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "azvd/error.hpp"

namespace azvd {

using nlohmann::json;

const Param* ProductionRule::param(std::string_view name) const {
  for (const auto& p : params)
    if (p.name == name) return &p;
  return nullptr;
}

void RuleRegistry::add_rule(ProductionRule rule) {
  if (index_.contains(rule.name))
    throw Error(ErrorCode::kDuplicateRule, "duplicate rule name '" + rule.name + "'", rule.name);
  index_.emplace(rule.name, rules_.size());
  rules_.push_back(std::move(rule));
}

void RuleRegistry::add_constant(std::string name) { constants_.push_back(std::move(name)); }

const ProductionRule* RuleRegistry::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &rules_[it->second];
}

bool RuleRegistry::has_constant(std::string_view name) const {
  for (const auto& c : constants_)
    if (c == name) return true;
  return false;
}

std::optional<std::string> RuleRegistry::atomic_filler() const {
  for (const auto& r : rules_)
    if (r.arity() == 0) return r.name;
  return std::nullopt;
}

namespace {

[[noreturn]] void schema_error(const std::string& message, const std::string& where) {
  throw Error(ErrorCode::kSchema, "registry: " + message, where);
}

std::string name_field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string())
    schema_error(std::string("missing string field '") + key + "'", where);
  auto value = it->get<std::string>();
  if (!is_valid_name(value)) schema_error("invalid name '" + value + "'", where);
  return value;
}

ParamKind parse_kind(const json& obj, const std::string& where) {
  auto it = obj.find("kind");
  if (it == obj.end()) return ParamKind::kExpr;
  if (!it->is_string()) schema_error("param kind must be a string", where);
  const auto& s = it->get_ref<const std::string&>();
  if (s == "EXPR") return ParamKind::kExpr;
  if (s == "LIST") return ParamKind::kList;
  schema_error("unknown param kind '" + s + "'", where);
}

}  // namespace

RuleRegistry load_registry(const json& doc) {
  if (!doc.is_object()) schema_error("document must be an object", "/");
  RuleRegistry reg;

  if (auto it = doc.find("constants"); it != doc.end()) {
    if (!it->is_array()) schema_error("'constants' must be an array", "/constants");
    std::set<std::string> seen;
    for (const auto& c : *it) {
      if (!c.is_string() || !is_valid_name(c.get<std::string>()))
        schema_error("constants must be valid names", "/constants");
      if (!seen.insert(c.get<std::string>()).second)
        schema_error("duplicate constant '" + c.get<std::string>() + "'", "/constants");
      reg.add_constant(c.get<std::string>());
    }
  }

  auto rules = doc.find("rules");
  if (rules == doc.end() || !rules->is_array()) schema_error("'rules' must be an array", "/rules");
  for (std::size_t i = 0; i < rules->size(); ++i) {
    const json& r = (*rules)[i];
    const std::string where = "/rules/" + std::to_string(i);
    if (!r.is_object()) schema_error("rule must be an object", where);
    ProductionRule rule;
    rule.name = name_field(r, "name", where);
    if (auto doc_it = r.find("doc"); doc_it != r.end()) {
      if (!doc_it->is_string()) schema_error("'doc' must be a string", where);
      rule.doc = doc_it->get<std::string>();
    }
    if (auto params = r.find("params"); params != r.end()) {
      if (!params->is_array()) schema_error("'params' must be an array", where);
      for (std::size_t k = 0; k < params->size(); ++k) {
        const json& p = (*params)[k];
        const std::string pwhere = where + "/params/" + std::to_string(k);
        if (!p.is_object()) schema_error("param must be an object", pwhere);
        Param param{name_field(p, "name", pwhere), parse_kind(p, pwhere)};
        if (rule.param(param.name)) schema_error("duplicate param '" + param.name + "'", pwhere);
        rule.params.push_back(std::move(param));
      }
    }
    reg.add_rule(std::move(rule));
  }
  return reg;
}

RuleRegistry load_registry_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string(), path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchema, std::string("registry: ") + e.what(), path.string());
  }
  return load_registry(doc);
}

namespace {

class ExprValidator {
 public:
  explicit ExprValidator(const RuleRegistry& reg) : reg_(reg) {}

  ValidationReport run(const Expr& expr) {
    visit(expr, "");
    return std::move(report_);
  }

 private:
  void visit(const Expr& expr, const std::string& path) {
    const std::string here = path.empty() ? "/" : path;
    if (const auto* app = expr.as_application()) {
      visit_application(*app, path);
    } else if (const auto* list = expr.as_list()) {
      // Lists are only legal as the value of a LIST param, which is
      // handled in visit_application; anything reaching here is misplaced.
      report_.add("unexpected-list", "list where an expression is expected", here);
      visit_items(*list, path);
    } else if (const auto* c = expr.as_constant()) {
      if (!is_valid_name(c->name))
        report_.add("invalid-name", "invalid constant name '" + c->name + "'", here);
      if (!reg_.has_constant(c->name))
        report_.add("unknown-constant", "unknown constant '" + c->name + "'", here);
    } else if (const auto* s = expr.as_slot()) {
      report_.add("unresolved-slot", "unresolved slot [" + s->slot + "]", here);
    } else if (const auto* s = expr.as_slot_list()) {
      report_.add("unresolved-slot", "unresolved slot [" + s->slot + "...]", here);
    }
  }

  void visit_items(const ListExpr& list, const std::string& path) {
    if (list.items.empty()) report_.add("empty-list", "empty list", path.empty() ? "/" : path);
    for (std::size_t i = 0; i < list.items.size(); ++i) {
      const Expr& item = list.items[i];
      const std::string item_path = path + "[" + std::to_string(i) + "]";
      if (item.as_slot_list()) {
        report_.add("unresolved-slot", "unresolved slot [" + item.as_slot_list()->slot + "...]",
                    item_path);
        continue;
      }
      visit(item, item_path);
    }
  }

  void visit_application(const Application& app, const std::string& path) {
    const std::string here = path + "/" + app.rule;
    if (!is_valid_name(app.rule))
      report_.add("invalid-name", "invalid rule name '" + app.rule + "'", here);
    const ProductionRule* rule = reg_.find(app.rule);
    if (!rule) report_.add("unknown-rule", "unknown rule '" + app.rule + "'", here);

    std::set<std::string> seen;
    int last_index = -1;
    bool order_reported = false;
    for (const auto& arg : app.args) {
      const std::string arg_path = here + "/'" + arg.name;
      if (!is_valid_name(arg.name))
        report_.add("invalid-name", "invalid argument name '" + arg.name + "'", arg_path);
      if (!seen.insert(arg.name).second) {
        report_.add("duplicate-argument", "duplicate argument " + arg.name, arg_path);
        continue;
      }
      const Param* param = rule ? rule->param(arg.name) : nullptr;
      if (rule && !param) {
        report_.add("extra-argument", "extra argument " + arg.name, arg_path);
        visit(arg.value, arg_path);
        continue;
      }
      if (param) {
        const int index = static_cast<int>(param - rule->params.data());
        if (index < last_index && !order_reported) {
          report_.add("argument-order",
                      "argument " + arg.name + " out of declaration order", arg_path);
          order_reported = true;
        }
        last_index = std::max(last_index, index);
        if (param->kind == ParamKind::kList) {
          if (const auto* list = arg.value.as_list()) {
            visit_items(*list, arg_path);
          } else {
            report_.add("expected-list", "argument " + arg.name + " expects a list", arg_path);
            visit(arg.value, arg_path);
          }
          continue;
        }
      }
      visit(arg.value, arg_path);
    }
    if (rule) {
      for (const auto& p : rule->params)
        if (!seen.contains(p.name))
          report_.add("missing-argument", "missing argument " + p.name, here);
    }
  }

  const RuleRegistry& reg_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate_expr(const Expr& expr, const RuleRegistry& reg) {
  return ExprValidator(reg).run(expr);
}

}  // namespace azvd
