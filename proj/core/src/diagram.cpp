#include "azvd/diagram.hpp"

#include "azvd/catalog.hpp"
#include "azvd/error.hpp"

namespace azvd {

using nlohmann::json;

Fill Fill::empty() { return Fill{}; }
Fill Fill::child(Diagram d) { return Fill{Kind::kChild, {std::move(d)}}; }
Fill Fill::children(std::vector<Diagram> ds) { return Fill{Kind::kChildren, std::move(ds)}; }

Diagram& Diagram::fill(const std::string& slot, Diagram child) {
  fills.insert_or_assign(slot, Fill::child(std::move(child)));
  return *this;
}

Diagram& Diagram::fill_list(const std::string& slot, std::vector<Diagram> children) {
  fills.insert_or_assign(slot, Fill::children(std::move(children)));
  return *this;
}

namespace {

std::string join(const std::string& path, const std::string& slot) {
  return path.empty() ? slot : path + "/" + slot;
}

void check_node(const Diagram& d, const Catalog& cat, const std::string& path) {
  const LayoutSpec* layout = cat.find_layout(d.layout);
  if (!layout)
    throw Error(ErrorCode::kUnknownLayout, "unknown layout '" + d.layout + "'",
                path.empty() ? "/" : path);
  for (const auto& [slot, fill] : d.fills) {
    const std::string here = join(path, slot);
    const ElementSpec* e = layout->find_slot(slot);
    if (!e)
      throw Error(ErrorCode::kUnknownSlot,
                  "layout '" + d.layout + "' has no slot '" + slot + "'", here);
    if (fill.kind == Fill::Kind::kChild && e->is_slot_list())
      throw Error(ErrorCode::kFillMismatch, "slot '" + slot + "' expects a list", here);
    if (fill.kind == Fill::Kind::kChildren && !e->is_slot_list())
      throw Error(ErrorCode::kFillMismatch, "slot '" + slot + "' expects a single diagram", here);
    if (fill.kind == Fill::Kind::kChild) {
      check_node(fill.diagrams.front(), cat, here);
    } else {
      for (std::size_t i = 0; i < fill.diagrams.size(); ++i)
        check_node(fill.diagrams[i], cat, here + "[" + std::to_string(i) + "]");
    }
  }
}

std::optional<std::string> find_empty(const Diagram& d, const Catalog& cat,
                                      const std::string& path) {
  const LayoutSpec& layout = cat.layout(d.layout);
  for (const auto& slot : layout.slot_ids()) {
    const std::string here = join(path, slot);
    auto it = d.fills.find(slot);
    if (it == d.fills.end() || it->second.kind == Fill::Kind::kEmpty ||
        it->second.diagrams.empty())
      return here;
    const Fill& fill = it->second;
    for (std::size_t i = 0; i < fill.diagrams.size(); ++i) {
      const std::string child_path =
          fill.kind == Fill::Kind::kChildren ? here + "[" + std::to_string(i) + "]" : here;
      if (auto found = find_empty(fill.diagrams[i], cat, child_path)) return found;
    }
  }
  return std::nullopt;
}

[[noreturn]] void schema(const std::string& message, const std::string& where) {
  throw Error(ErrorCode::kSchema, "diagram: " + message, where.empty() ? "/" : where);
}

Diagram read_node(const json& doc, const std::string& path) {
  if (!doc.is_object()) schema("diagram node must be an object", path);
  auto layout = doc.find("layout");
  if (layout == doc.end() || !layout->is_string()) schema("missing string field 'layout'", path);
  Diagram d;
  d.layout = layout->get<std::string>();
  auto fills = doc.find("fills");
  if (fills == doc.end()) return d;
  if (!fills->is_object()) schema("'fills' must be an object", path);
  for (const auto& [slot, value] : fills->items()) {
    const std::string here = join(path, slot);
    if (value.is_null()) {
      d.fills.emplace(slot, Fill::empty());
    } else if (value.is_array()) {
      std::vector<Diagram> children;
      for (std::size_t i = 0; i < value.size(); ++i)
        children.push_back(read_node(value[i], here + "[" + std::to_string(i) + "]"));
      d.fills.emplace(slot, Fill::children(std::move(children)));
    } else {
      d.fills.emplace(slot, Fill::child(read_node(value, here)));
    }
  }
  return d;
}

}  // namespace

void check_diagram(const Diagram& d, const Catalog& cat) { check_node(d, cat, ""); }

std::optional<std::string> first_empty_slot(const Diagram& d, const Catalog& cat) {
  return find_empty(d, cat, "");
}

Diagram load_diagram(const json& doc, const Catalog& cat) {
  Diagram d = read_node(doc, "");
  check_diagram(d, cat);
  return d;
}

json save_diagram(const Diagram& d) {
  json fills = json::object();
  for (const auto& [slot, fill] : d.fills) {
    switch (fill.kind) {
      case Fill::Kind::kEmpty:
        fills[slot] = nullptr;
        break;
      case Fill::Kind::kChild:
        fills[slot] = save_diagram(fill.diagrams.front());
        break;
      case Fill::Kind::kChildren: {
        json items = json::array();
        for (const auto& c : fill.diagrams) items.push_back(save_diagram(c));
        fills[slot] = std::move(items);
        break;
      }
    }
  }
  return json{{"layout", d.layout}, {"fills", std::move(fills)}};
}

Diagram parse_diagram_text(std::string_view text, const Catalog& cat) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchema, std::string("diagram: ") + e.what(), "/");
  }
  return load_diagram(doc, cat);
}

std::string dump_diagram(const Diagram& d) { return save_diagram(d).dump(2) + "\n"; }

}  // namespace azvd
