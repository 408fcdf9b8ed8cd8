#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace azvd {

class Catalog;
struct Diagram;

/// Content of one slot: nothing yet, one nested diagram (Slot) or a
/// sequence of them (SlotList).
struct Fill {
  enum class Kind { kEmpty, kChild, kChildren };

  Kind kind = Kind::kEmpty;
  std::vector<Diagram> diagrams;

  static Fill empty();
  static Fill child(Diagram d);
  static Fill children(std::vector<Diagram> ds);

  bool operator==(const Fill&) const = default;
};

/// A user-authored AZVD drawing: a layout instance whose slots hold
/// further drawings. Slots absent from `fills` count as empty.
struct Diagram {
  std::string layout;
  std::map<std::string, Fill> fills;

  Diagram& fill(const std::string& slot, Diagram child);
  Diagram& fill_list(const std::string& slot, std::vector<Diagram> children);

  bool operator==(const Diagram&) const = default;
};

/// Checks layout ids, slot names and fill kinds against the catalog.
/// Throws Error{kUnknownLayout}, {kUnknownSlot} or {kFillMismatch}.
void check_diagram(const Diagram& d, const Catalog& cat);

/// Slot path (e.g. `info/sig`, `items[1]`) of the first empty slot in
/// depth-first slot order, or nullopt if the diagram is complete.
std::optional<std::string> first_empty_slot(const Diagram& d, const Catalog& cat);

/// `{ "layout": id, "fills": { slot: diagram | [diagram...] | null } }`.
/// Throws Error{kSchema} plus everything check_diagram throws.
Diagram load_diagram(const nlohmann::json& doc, const Catalog& cat);
nlohmann::json save_diagram(const Diagram& d);

Diagram parse_diagram_text(std::string_view text, const Catalog& cat);
/// Canonical file form: 2-space indented JSON with a trailing newline.
std::string dump_diagram(const Diagram& d);

}  // namespace azvd
