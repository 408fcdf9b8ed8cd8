#include "azvd/azee.hpp"

#include <cstdint>
#include <optional>
#include <set>

#include "azvd/error.hpp"

namespace azvd {

Expr Expr::app(std::string rule, std::vector<Argument> args) {
  return Expr{Application{std::move(rule), std::move(args)}};
}
Expr Expr::list(std::vector<Expr> items) { return Expr{ListExpr{std::move(items)}}; }
Expr Expr::constant(std::string name) { return Expr{Constant{std::move(name)}}; }
Expr Expr::slot(std::string id) { return Expr{SlotRef{std::move(id)}}; }
Expr Expr::slot_list(std::string id) { return Expr{SlotListRef{std::move(id)}}; }

namespace {

constexpr int kIndentStep = 2;
constexpr std::string_view kListKeyword = "list";
constexpr std::string_view kSpliceSuffix = "...";

// Decodes one UTF-8 code point starting at `pos`; nullopt on malformed input.
std::optional<char32_t> decode_utf8(std::string_view s, std::size_t& pos) {
  const auto lead = static_cast<unsigned char>(s[pos]);
  int extra = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    ++pos;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    return std::nullopt;
  }
  if (pos + extra >= s.size()) return std::nullopt;
  for (int i = 1; i <= extra; ++i) {
    const auto c = static_cast<unsigned char>(s[pos + i]);
    if ((c & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (c & 0x3F);
  }
  // Reject overlong encodings, surrogates and out-of-range values.
  static constexpr char32_t kMinForLength[] = {0, 0x80, 0x800, 0x10000};
  if (cp < kMinForLength[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
    return std::nullopt;
  pos += extra + 1;
  return cp;
}

bool is_ascii_letter(char32_t c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

// Non-ASCII code points count as letters except controls, Latin-1
// punctuation/symbols, general punctuation and the odd space characters.
bool is_letter(char32_t c) {
  if (c < 0x80) return is_ascii_letter(c);
  if (c <= 0xBF || c == 0xD7 || c == 0xF7) return false;
  if (c >= 0x2000 && c <= 0x206F) return false;
  if (c == 0x3000 || c == 0xFEFF) return false;
  return true;
}

struct Line {
  int number;      // 1-based
  int indent;      // leading spaces
  std::string_view content;
};

[[noreturn]] void fail(int line, int column, const std::string& message) {
  throw Error(ErrorCode::kSyntax, message,
              std::to_string(line) + ":" + std::to_string(column));
}

class Parser {
 public:
  Parser(std::string_view text, bool allow_placeholders)
      : allow_placeholders_(allow_placeholders) {
    split(text);
  }

  Expr parse() {
    if (lines_.empty()) fail(1, 1, "empty input");
    if (lines_.front().indent != 0)
      fail(lines_.front().number, 1, "top-level expression must not be indented");
    Expr root = parse_node(0);
    if (pos_ < lines_.size()) {
      const Line& extra = lines_[pos_];
      fail(extra.number, extra.indent + 1, "unexpected content after the top-level expression");
    }
    return root;
  }

 private:
  void split(std::string_view text) {
    int number = 0;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(start, end - start);
      start = end + 1;
      ++number;

      for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == '\t') fail(number, static_cast<int>(i) + 1, "tab character");
        if (raw[i] == '\r') fail(number, static_cast<int>(i) + 1, "carriage return");
      }
      const std::size_t first = raw.find_first_not_of(' ');
      if (first == std::string_view::npos) continue;  // blank line
      const int indent = static_cast<int>(first);
      if (indent % kIndentStep != 0)
        fail(number, indent + 1, "indentation is not a multiple of 2 spaces");
      lines_.push_back(Line{number, indent, raw.substr(first)});
    }
  }

  std::string take_name(const Line& line, std::string_view name, int offset) {
    if (!is_valid_name(name))
      fail(line.number, line.indent + offset + 1,
           "invalid name '" + std::string(name) + "'");
    return std::string(name);
  }

  Expr parse_node(int indent) {
    const Line& line = lines_[pos_];
    const std::string_view c = line.content;
    ++pos_;
    switch (c.front()) {
      case ':':
        return parse_application(take_name(line, c.substr(1), 1), indent);
      case '^':
        return finish_leaf(Expr::constant(take_name(line, c.substr(1), 1)), indent);
      case '\'':
        fail(line.number, line.indent + 1, "argument label outside an application");
      case '[':
        return finish_leaf(parse_placeholder(line), indent);
      default:
        if (c == kListKeyword) return parse_list(line, indent);
        fail(line.number, line.indent + 1, "expected ':', '^' or 'list'");
    }
  }

  Expr parse_placeholder(const Line& line) {
    const std::string_view c = line.content;
    if (!allow_placeholders_)
      fail(line.number, line.indent + 1, "slot placeholder outside a layout template");
    if (c.size() < 3 || c.back() != ']')
      fail(line.number, line.indent + 1, "unterminated slot placeholder");
    std::string_view id = c.substr(1, c.size() - 2);
    bool splice = false;
    if (id.size() > kSpliceSuffix.size() && id.ends_with(kSpliceSuffix)) {
      id.remove_suffix(kSpliceSuffix.size());
      splice = true;
    }
    std::string name = take_name(line, id, 1);
    return splice ? Expr::slot_list(std::move(name)) : Expr::slot(std::move(name));
  }

  Expr finish_leaf(Expr leaf, int indent) {
    if (pos_ < lines_.size() && lines_[pos_].indent > indent) {
      const Line& next = lines_[pos_];
      fail(next.number, next.indent + 1, "unexpected indented line under a leaf");
    }
    return leaf;
  }

  Expr parse_application(std::string rule, int indent) {
    Application app{std::move(rule), {}};
    std::set<std::string> seen;
    const int child = indent + kIndentStep;
    while (pos_ < lines_.size() && lines_[pos_].indent > indent) {
      const Line& label = lines_[pos_];
      if (label.indent != child)
        fail(label.number, label.indent + 1, "inconsistent indentation");
      if (label.content.front() != '\'')
        fail(label.number, label.indent + 1, "expected an argument label ('name)");
      std::string name = take_name(label, label.content.substr(1), 1);
      ++pos_;
      if (pos_ >= lines_.size() || lines_[pos_].indent < child ||
          lines_[pos_].content.front() == '\'')
        fail(label.number, label.indent + 1, "argument label '" + name + "' without value");
      if (lines_[pos_].indent != child)
        fail(lines_[pos_].number, lines_[pos_].indent + 1,
             "argument value must be at the label's indentation");
      if (!seen.insert(name).second)
        fail(label.number, label.indent + 1, "duplicate argument '" + name + "'");
      Expr value = parse_node(child);
      app.args.push_back(Argument{std::move(name), std::move(value)});
    }
    return Expr{std::move(app)};
  }

  Expr parse_list(const Line& head, int indent) {
    ListExpr list;
    const int child = indent + kIndentStep;
    while (pos_ < lines_.size() && lines_[pos_].indent > indent) {
      const Line& item = lines_[pos_];
      if (item.indent != child)
        fail(item.number, item.indent + 1, "inconsistent indentation");
      list.items.push_back(parse_node(child));
    }
    if (list.items.empty()) fail(head.number, head.indent + 1, "empty list block");
    return Expr{std::move(list)};
  }

  bool allow_placeholders_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

void print_node(const Expr& expr, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (const auto* app = expr.as_application()) {
    out += pad + ':' + app->rule + '\n';
    const std::string arg_pad(static_cast<std::size_t>(indent + kIndentStep), ' ');
    for (const auto& arg : app->args) {
      out += arg_pad + '\'' + arg.name + '\n';
      print_node(arg.value, indent + kIndentStep, out);
    }
  } else if (const auto* list = expr.as_list()) {
    out += pad + std::string(kListKeyword) + '\n';
    for (const auto& item : list->items) print_node(item, indent + kIndentStep, out);
  } else if (const auto* constant = expr.as_constant()) {
    out += pad + '^' + constant->name + '\n';
  } else if (const auto* slot = expr.as_slot()) {
    out += pad + '[' + slot->slot + "]\n";
  } else if (const auto* splice = expr.as_slot_list()) {
    out += pad + '[' + splice->slot + std::string(kSpliceSuffix) + "]\n";
  }
}

}  // namespace

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  std::size_t pos = 0;
  bool first = true;
  while (pos < name.size()) {
    const auto cp = decode_utf8(name, pos);
    if (!cp) return false;
    const bool ok = is_letter(*cp) ||
                    (!first && ((*cp >= '0' && *cp <= '9') || *cp == '-'));
    if (!ok) return false;
    first = false;
  }
  return true;
}

Expr parse_azee(std::string_view text) { return Parser(text, false).parse(); }

Expr parse_template(std::string_view text) { return Parser(text, true).parse(); }

std::string print_azee(const Expr& expr) {
  std::string out;
  print_node(expr, 0, out);
  return out;
}

std::size_t count_applications(const Expr& expr) {
  if (const auto* app = expr.as_application()) {
    std::size_t n = 1;
    for (const auto& arg : app->args) n += count_applications(arg.value);
    return n;
  }
  if (const auto* list = expr.as_list()) {
    std::size_t n = 0;
    for (const auto& item : list->items) n += count_applications(item);
    return n;
  }
  return 0;
}

bool has_placeholders(const Expr& expr) {
  if (expr.as_slot() || expr.as_slot_list()) return true;
  if (const auto* app = expr.as_application()) {
    for (const auto& arg : app->args)
      if (has_placeholders(arg.value)) return true;
  } else if (const auto* list = expr.as_list()) {
    for (const auto& item : list->items)
      if (has_placeholders(item)) return true;
  }
  return false;
}

}  // namespace azvd
