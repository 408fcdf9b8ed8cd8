#include "azvd/compiler.hpp"

#include <algorithm>

#include "azvd/error.hpp"

namespace azvd {

// ---------------------------------------------------------------------------
// Template instantiation and matching

Expr instantiate(const Expr& templ, const Bindings& bindings) {
  if (const auto* s = templ.as_slot()) {
    auto it = bindings.single.find(s->slot);
    if (it == bindings.single.end())
      throw Error(ErrorCode::kIncompleteDiagram, "slot '" + s->slot + "' is not bound", s->slot);
    return it->second;
  }
  if (const auto* app = templ.as_application()) {
    Application out{app->rule, {}};
    out.args.reserve(app->args.size());
    for (const auto& arg : app->args)
      out.args.push_back(Argument{arg.name, instantiate(arg.value, bindings)});
    return Expr{std::move(out)};
  }
  if (const auto* list = templ.as_list()) {
    ListExpr out;
    for (const auto& item : list->items) {
      if (const auto* splice = item.as_slot_list()) {
        auto it = bindings.spliced.find(splice->slot);
        if (it == bindings.spliced.end() || it->second.empty())
          throw Error(ErrorCode::kIncompleteDiagram, "slot '" + splice->slot + "' is not bound",
                      splice->slot);
        out.items.insert(out.items.end(), it->second.begin(), it->second.end());
      } else {
        out.items.push_back(instantiate(item, bindings));
      }
    }
    return Expr{std::move(out)};
  }
  return templ;
}

namespace {

bool match_into(const Expr& t, const Expr& e, Bindings& b);

bool match_list(const ListExpr& t, const ListExpr& e, Bindings& b) {
  std::optional<std::size_t> splice;
  for (std::size_t i = 0; i < t.items.size(); ++i)
    if (t.items[i].as_slot_list()) splice = i;

  if (!splice) {
    if (t.items.size() != e.items.size()) return false;
    for (std::size_t i = 0; i < t.items.size(); ++i)
      if (!match_into(t.items[i], e.items[i], b)) return false;
    return true;
  }
  // The splice takes whatever the fixed items before and after leave, at least one.
  const std::size_t fixed = t.items.size() - 1;
  if (e.items.size() < fixed + 1) return false;
  const std::size_t taken = e.items.size() - fixed;
  for (std::size_t i = 0; i < *splice; ++i)
    if (!match_into(t.items[i], e.items[i], b)) return false;
  for (std::size_t i = *splice + 1; i < t.items.size(); ++i)
    if (!match_into(t.items[i], e.items[i - 1 + taken], b)) return false;
  std::vector<Expr> run(e.items.begin() + static_cast<std::ptrdiff_t>(*splice),
                        e.items.begin() + static_cast<std::ptrdiff_t>(*splice + taken));
  for (const auto& item : run)
    if (item.as_list()) return false;
  b.spliced[t.items[*splice].as_slot_list()->slot] = std::move(run);
  return true;
}

bool match_into(const Expr& t, const Expr& e, Bindings& b) {
  if (const auto* s = t.as_slot()) {
    // A slot holds one diagram, and diagrams never compile to a bare list.
    if (e.as_list()) return false;
    b.single[s->slot] = e;
    return true;
  }
  if (const auto* c = t.as_constant()) {
    const auto* ec = e.as_constant();
    return ec && ec->name == c->name;
  }
  if (const auto* app = t.as_application()) {
    const auto* ea = e.as_application();
    if (!ea || ea->rule != app->rule || ea->args.size() != app->args.size()) return false;
    for (std::size_t i = 0; i < app->args.size(); ++i) {
      if (ea->args[i].name != app->args[i].name) return false;
      if (!match_into(app->args[i].value, ea->args[i].value, b)) return false;
    }
    return true;
  }
  if (const auto* list = t.as_list()) {
    const auto* el = e.as_list();
    return el && match_list(*list, *el, b);
  }
  return false;  // a splice outside a list never matches
}

}  // namespace

std::optional<Bindings> match_template(const Expr& templ, const Expr& e) {
  Bindings b;
  if (!match_into(templ, e, b)) return std::nullopt;
  return b;
}

// ---------------------------------------------------------------------------
// compile

namespace {

Expr compile_node(const Diagram& d, const Catalog& cat, const std::string& path) {
  const LayoutSpec& layout = cat.layout(d.layout);
  Bindings bindings;
  for (const auto& e : layout.elements) {
    const auto slot = e.slot_id();
    if (!slot) continue;
    const std::string here = path.empty() ? *slot : path + "/" + *slot;
    auto it = d.fills.find(*slot);
    if (it == d.fills.end() || it->second.kind == Fill::Kind::kEmpty ||
        it->second.diagrams.empty())
      throw Error(ErrorCode::kIncompleteDiagram, "slot '" + here + "' is empty", here);
    const Fill& fill = it->second;
    if (fill.kind == Fill::Kind::kChild) {
      bindings.single.emplace(*slot, compile_node(fill.diagrams.front(), cat, here));
    } else {
      std::vector<Expr> items;
      for (std::size_t i = 0; i < fill.diagrams.size(); ++i)
        items.push_back(compile_node(fill.diagrams[i], cat, here + "[" + std::to_string(i) + "]"));
      bindings.spliced.emplace(*slot, std::move(items));
    }
  }
  return instantiate(layout.templ, bindings);
}

}  // namespace

Expr compile(const Diagram& d, const Catalog& cat) {
  check_diagram(d, cat);
  return compile_node(d, cat, "");
}

// ---------------------------------------------------------------------------
// synthesize

namespace {

std::string describe_head(const Expr& e) {
  if (const auto* app = e.as_application()) return "rule " + app->rule;
  if (const auto* c = e.as_constant()) return "constant ^" + c->name;
  return "list";
}

class Synthesizer {
 public:
  Synthesizer(const Catalog& cat, const VariantPolicy& policy) {
    for (const auto& [template_id, layout_id] : policy.choices) {
      const TemplateEntry* entry = cat.find_template(template_id);
      if (!entry)
        throw Error(ErrorCode::kUnknownTemplate, "unknown template '" + template_id + "'",
                    template_id);
      if (std::find(entry->variants.begin(), entry->variants.end(), layout_id) ==
          entry->variants.end())
        throw Error(ErrorCode::kUnknownLayout,
                    "layout '" + layout_id + "' is not a variant of template '" + template_id + "'",
                    template_id);
    }
    for (const auto& entry : cat.templates()) {
      auto choice = policy.choices.find(entry.id);
      const std::string& id =
          choice == policy.choices.end() ? entry.default_layout : choice->second;
      candidates_.push_back(&cat.layout(id));
    }
    // Most specific first; stable sort keeps catalog order on ties.
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [](const LayoutSpec* a, const LayoutSpec* b) {
                       return count_applications(a->templ) > count_applications(b->templ);
                     });
  }

  Diagram run(const Expr& e) const {
    for (const LayoutSpec* layout : candidates_) {
      auto bindings = match_template(layout->templ, e);
      if (!bindings) continue;
      Diagram d{layout->id, {}};
      for (const auto& el : layout->elements) {
        const auto slot = el.slot_id();
        if (!slot) continue;
        if (el.is_slot_list()) {
          std::vector<Diagram> children;
          for (const auto& item : bindings->spliced.at(*slot)) children.push_back(run(item));
          d.fill_list(*slot, std::move(children));
        } else {
          d.fill(*slot, run(bindings->single.at(*slot)));
        }
      }
      return d;
    }
    throw Error(ErrorCode::kNoAntecedent, "no layout antecedent for " + describe_head(e),
                describe_head(e));
  }

 private:
  std::vector<const LayoutSpec*> candidates_;
};

}  // namespace

Diagram synthesize(const Expr& e, const Catalog& cat, const RuleRegistry& reg,
                   const VariantPolicy& policy) {
  const ValidationReport report = validate_expr(e, reg);
  if (!report.ok()) {
    for (const auto& v : report.violations)
      if (v.code == "unknown-rule") throw Error(ErrorCode::kUnknownRule, v.message, v.location);
    const Violation& first = report.violations.front();
    throw Error(ErrorCode::kInvalidExpression, first.message, first.location);
  }
  return Synthesizer(cat, policy).run(e);
}

// ---------------------------------------------------------------------------
// coverage

bool CoverageReport::ok() const {
  auto passed = [](const CoverageEntry& c) { return c.ok; };
  return std::all_of(rules.begin(), rules.end(), passed) &&
         std::all_of(variants.begin(), variants.end(), passed);
}

nlohmann::json CoverageReport::to_json() const {
  auto entries = [](const std::vector<CoverageEntry>& list) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : list)
      out.push_back({{"subject", c.subject}, {"ok", c.ok}, {"detail", c.detail}});
    return out;
  };
  return {{"ok", ok()}, {"rules", entries(rules)}, {"variants", entries(variants)}};
}

std::string CoverageReport::to_text() const {
  std::string out;
  auto section = [&](const char* title, const std::vector<CoverageEntry>& list) {
    out += title;
    out += '\n';
    for (const auto& c : list) {
      out += c.ok ? "  ok    " : "  FAIL  ";
      out += c.subject;
      if (!c.detail.empty()) out += " (" + c.detail + ")";
      out += '\n';
    }
  };
  section("rules:", rules);
  section("variants:", variants);
  out += ok() ? "coverage: complete\n" : "coverage: FAILED\n";
  return out;
}

namespace {

CoverageEntry probe(const std::string& subject, const Expr& e, const Catalog& cat,
                    const RuleRegistry& reg) {
  CoverageEntry entry{subject, false, {}};
  try {
    const Diagram d = synthesize(e, cat, reg);
    const Expr back = compile(d, cat);
    entry.ok = back == e;
    entry.detail = entry.ok ? "via " + d.layout : "round trip differs";
  } catch (const Error& err) {
    entry.detail = std::string(to_string(err.code())) + ": " + err.what();
  }
  return entry;
}

}  // namespace

CoverageReport coverage_check(const RuleRegistry& reg, const Catalog& cat) {
  CoverageReport report;
  const auto filler = reg.atomic_filler();
  if (!filler) {
    for (const auto& rule : reg.rules())
      report.rules.push_back({rule.name, false, "registry has no atomic filler rule"});
    return report;
  }

  for (const auto& rule : reg.rules()) {
    Application app{rule.name, {}};
    for (const auto& p : rule.params) {
      if (p.kind == ParamKind::kList)
        app.args.push_back({p.name, Expr::list({Expr::app(*filler), Expr::app(*filler)})});
      else
        app.args.push_back({p.name, Expr::app(*filler)});
    }
    report.rules.push_back(probe(rule.name, Expr{std::move(app)}, cat, reg));
  }
  for (const auto& c : reg.constants())
    report.rules.push_back(probe("^" + c, Expr::constant(c), cat, reg));

  // Canonical fill: each slot name gets its own atomic rule (cycling), so a
  // variant that routes slots differently compiles differently.
  std::vector<Diagram> fillers;
  for (const auto& rule : reg.rules()) {
    if (rule.arity() != 0) continue;
    try {
      fillers.push_back(synthesize(Expr::app(rule.name), cat, reg));
    } catch (const Error&) {
    }
  }

  for (const auto& entry : cat.templates()) {
    CoverageEntry result{entry.id, true, {}};
    if (fillers.empty()) {
      report.variants.push_back({entry.id, false, "no atomic rule has a layout"});
      continue;
    }
    std::map<std::string, std::size_t> slot_index;
    for (const auto& slot : cat.layout(entry.default_layout).slot_ids())
      slot_index.emplace(slot, slot_index.size());
    auto filler_for = [&](const std::string& slot, std::size_t k) {
      auto [it, inserted] = slot_index.emplace(slot, slot_index.size());
      (void)inserted;
      return fillers[(it->second + k) % fillers.size()];
    };

    std::optional<Expr> reference;
    std::string reference_layout;
    for (const auto& layout_id : entry.variants) {
      const LayoutSpec& layout = cat.layout(layout_id);
      Diagram d{layout.id, {}};
      for (const auto& el : layout.elements) {
        if (auto slot = el.slot_id()) {
          if (el.is_slot_list())
            d.fill_list(*slot, {filler_for(*slot, 0), filler_for(*slot, 1)});
          else
            d.fill(*slot, filler_for(*slot, 0));
        }
      }
      try {
        Expr out = compile(d, cat);
        if (!reference) {
          reference = std::move(out);
          reference_layout = layout.id;
        } else if (!(out == *reference)) {
          result.ok = false;
          result.detail = "variant " + layout.id + " compiles differently from " + reference_layout;
        }
      } catch (const Error& err) {
        result.ok = false;
        result.detail = "variant " + layout.id + ": " + err.what();
      }
    }
    if (result.ok) result.detail = std::to_string(entry.variants.size()) + " variant(s)";
    report.variants.push_back(std::move(result));
  }
  return report;
}

}  // namespace azvd
