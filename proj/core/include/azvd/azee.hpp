#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace azvd {

struct Argument;
struct Expr;

/// `:rule` with its named arguments, in rule declaration order.
struct Application {
  std::string rule;
  std::vector<Argument> args;

  bool operator==(const Application&) const = default;
};

/// `list` block; items are printed one indent deeper.
struct ListExpr {
  std::vector<Expr> items;

  bool operator==(const ListExpr&) const = default;
};

/// `^name`, e.g. the signing-space points Lssp / Rssp.
struct Constant {
  std::string name;

  bool operator==(const Constant&) const = default;
};

/// Template placeholder `[slot]`: replaced by one whole expression.
struct SlotRef {
  std::string slot;

  bool operator==(const SlotRef&) const = default;
};

/// Template placeholder `[slot...]`: spliced as a run of list items.
struct SlotListRef {
  std::string slot;

  bool operator==(const SlotListRef&) const = default;
};

/// An AZee expression tree. Placeholder nodes only occur in layout
/// templates; parse_azee rejects them and validate_expr flags them.
struct Expr {
  using Node = std::variant<Application, ListExpr, Constant, SlotRef, SlotListRef>;
  Node node;

  static Expr app(std::string rule, std::vector<Argument> args = {});
  static Expr list(std::vector<Expr> items);
  static Expr constant(std::string name);
  static Expr slot(std::string id);
  static Expr slot_list(std::string id);

  const Application* as_application() const { return std::get_if<Application>(&node); }
  const ListExpr* as_list() const { return std::get_if<ListExpr>(&node); }
  const Constant* as_constant() const { return std::get_if<Constant>(&node); }
  const SlotRef* as_slot() const { return std::get_if<SlotRef>(&node); }
  const SlotListRef* as_slot_list() const { return std::get_if<SlotListRef>(&node); }

  bool operator==(const Expr&) const = default;
};

struct Argument {
  std::string name;
  Expr value;

  bool operator==(const Argument&) const = default;
};

/// Rule, argument and constant names: a letter (any non-ASCII code point
/// counts as a letter) followed by letters, digits or '-'. UTF-8 only.
bool is_valid_name(std::string_view name);

/// Parses the indented AZee text notation. Throws Error{kSyntax} with a
/// `line:column` location on malformed input.
Expr parse_azee(std::string_view text);

/// Same grammar plus `[slot]` and `[slot...]` placeholder lines.
Expr parse_template(std::string_view text);

/// Canonical text: 2-space indentation, LF after every line.
std::string print_azee(const Expr& expr);

std::size_t count_applications(const Expr& expr);
bool has_placeholders(const Expr& expr);

}  // namespace azvd
