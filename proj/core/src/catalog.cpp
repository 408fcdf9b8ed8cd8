#include "azvd/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "azvd/error.hpp"

namespace azvd {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Assets

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string(), path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<double> parse_length(const std::string& s) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    std::string rest = s.substr(used);
    if (!rest.empty() && rest != "px") return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

Asset parse_asset(std::string id, std::string_view svg_text) {
  const std::string text(svg_text);
  auto fail = [&](const std::string& why) -> Asset {
    throw Error(ErrorCode::kSchema, "asset '" + id + "': " + why, id);
  };

  std::size_t open = std::string::npos;
  for (std::size_t pos = text.find("<svg"); pos != std::string::npos;
       pos = text.find("<svg", pos + 1)) {
    const char next = pos + 4 < text.size() ? text[pos + 4] : '\0';
    if (next == ' ' || next == '>' || next == '\n' || next == '\t' || next == '\r') {
      open = pos;
      break;
    }
  }
  if (open == std::string::npos) return fail("no <svg> root element");
  const std::size_t tag_end = text.find('>', open);
  const std::size_t close = text.rfind("</svg>");
  if (tag_end == std::string::npos || close == std::string::npos || close < tag_end)
    return fail("unterminated <svg> element");

  const std::string tag = text.substr(open, tag_end - open);
  std::map<std::string, std::string> attrs;
  static const std::regex kAttr(R"re(([A-Za-z_:][-A-Za-z0-9_:.]*)\s*=\s*"([^"]*)")re");
  for (auto it = std::sregex_iterator(tag.begin(), tag.end(), kAttr); it != std::sregex_iterator();
       ++it)
    attrs[(*it)[1]] = (*it)[2];

  Asset asset;
  asset.id = id;
  std::optional<Box> view_box;
  if (auto vb = attrs.find("viewBox"); vb != attrs.end()) {
    std::string nums = vb->second;
    std::replace(nums.begin(), nums.end(), ',', ' ');
    std::istringstream ss(nums);
    Box b;
    if (!(ss >> b.x >> b.y >> b.width >> b.height)) return fail("malformed viewBox");
    view_box = b;
  }
  std::optional<double> width, height;
  if (auto w = attrs.find("width"); w != attrs.end()) width = parse_length(w->second);
  if (auto h = attrs.find("height"); h != attrs.end()) height = parse_length(h->second);
  if (!view_box) {
    if (!width || !height) return fail("needs a viewBox or width and height");
    view_box = Box{0, 0, *width, *height};
  }
  asset.view_box = *view_box;
  asset.width = width.value_or(view_box->width);
  asset.height = height.value_or(view_box->height);
  if (asset.width < 0 || asset.height < 0) return fail("negative size");

  // Keep the children, one trimmed line at a time, without CR.
  std::string inner = text.substr(tag_end + 1, close - tag_end - 1);
  std::istringstream lines(inner);
  std::string line;
  while (std::getline(lines, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (!asset.content.empty()) asset.content += '\n';
    asset.content += line.substr(first);
  }
  return asset;
}

// ---------------------------------------------------------------------------
// Elements and layouts

std::optional<std::string> ElementSpec::slot_id() const {
  if (const auto* s = std::get_if<SlotElement>(&kind)) return s->slot;
  if (const auto* s = std::get_if<SlotListElement>(&kind)) return s->slot;
  return std::nullopt;
}

double estimate_text_width(std::string_view utf8, double size) {
  std::size_t code_points = 0;
  for (unsigned char c : utf8)
    if ((c & 0xC0) != 0x80) ++code_points;
  return kTextAdvanceRatio * size * static_cast<double>(code_points);
}

Box natural_box(const ElementSpec& element) {
  return std::visit(
      [](const auto& k) -> Box {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, IconElement>) {
          return {0, 0, k.width, k.height};
        } else if constexpr (std::is_same_v<K, TextElement>) {
          return {0, 0, estimate_text_width(k.content, k.size), k.size};
        } else if constexpr (std::is_same_v<K, SlotElement> ||
                             std::is_same_v<K, SlotListElement>) {
          return {0, 0, k.nominal_width, k.nominal_height};
        } else {
          std::optional<Box> acc;
          for (const auto& path : k.paths)
            for (const auto& p : path) acc = unite(acc, Box{p.x, p.y, 0, 0});
          return acc.value_or(Box{});
        }
      },
      element.kind);
}

const ElementSpec* LayoutSpec::find_element(std::string_view element_id) const {
  for (const auto& e : elements)
    if (e.id == element_id) return &e;
  return nullptr;
}

const ElementSpec* LayoutSpec::find_slot(std::string_view slot_id) const {
  for (const auto& e : elements)
    if (auto s = e.slot_id(); s && *s == slot_id) return &e;
  return nullptr;
}

std::vector<std::string> LayoutSpec::slot_ids() const {
  std::vector<std::string> ids;
  for (const auto& e : elements)
    if (auto s = e.slot_id()) ids.push_back(*s);
  return ids;
}

const AlignConstraint* LayoutSpec::align_for(std::string_view element_id) const {
  for (const auto& a : aligns)
    if (a.subject == element_id) return &a;
  return nullptr;
}

const ScaleConstraint* LayoutSpec::scale_for(std::string_view element_id) const {
  for (const auto& s : scales)
    if (s.subject == element_id) return &s;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Catalog container

void Catalog::add_layout(LayoutSpec layout) {
  if (layout_index_.contains(layout.id))
    throw Error(ErrorCode::kSchema, "duplicate layout id '" + layout.id + "'", layout.id);
  if (auto it = template_index_.find(layout.template_id); it != template_index_.end()) {
    templates_[it->second].variants.push_back(layout.id);
  } else {
    template_index_.emplace(layout.template_id, templates_.size());
    templates_.push_back(TemplateEntry{layout.template_id, layout.templ, layout.id, {layout.id}});
  }
  layout_index_.emplace(layout.id, layouts_.size());
  layouts_.push_back(std::move(layout));
}

void Catalog::add_asset(Asset asset) {
  std::string id = asset.id;
  assets_.insert_or_assign(std::move(id), std::move(asset));
}

const LayoutSpec* Catalog::find_layout(std::string_view id) const {
  auto it = layout_index_.find(id);
  return it == layout_index_.end() ? nullptr : &layouts_[it->second];
}

const LayoutSpec& Catalog::layout(std::string_view id) const {
  if (const auto* l = find_layout(id)) return *l;
  throw Error(ErrorCode::kUnknownLayout, "unknown layout '" + std::string(id) + "'",
              std::string(id));
}

const TemplateEntry* Catalog::find_template(std::string_view id) const {
  auto it = template_index_.find(id);
  return it == template_index_.end() ? nullptr : &templates_[it->second];
}

const Asset* Catalog::find_asset(std::string_view id) const {
  auto it = assets_.find(std::string(id));
  return it == assets_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Loading

namespace {

class LayoutReader {
 public:
  LayoutReader(const json& doc, std::string where, const std::map<std::string, Asset>& assets)
      : doc_(doc), where_(std::move(where)), assets_(assets) {}

  LayoutSpec read() {
    if (!doc_.is_object()) schema("layout must be an object");
    LayoutSpec spec;
    spec.id = string_field(doc_, "id");
    where_ = "layouts/" + spec.id;
    spec.template_id = string_field(doc_, "template_id");
    spec.variant = doc_.contains("variant") ? string_field(doc_, "variant") : std::string{};

    for (const auto& e : array_field(doc_, "elements")) spec.elements.push_back(element(e));
    if (doc_.contains("aligns"))
      for (const auto& a : array_field(doc_, "aligns")) spec.aligns.push_back(align(a));
    if (doc_.contains("scales"))
      for (const auto& s : array_field(doc_, "scales")) spec.scales.push_back(scale(s));
    spec.templ = template_expr();

    check_references(spec);
    return spec;
  }

 private:
  [[noreturn]] void schema(const std::string& message) const {
    throw Error(ErrorCode::kSchema, "catalog: " + message, where_);
  }

  std::string string_field(const json& obj, const char* key) const {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string() || it->get_ref<const std::string&>().empty())
      schema(std::string("missing string field '") + key + "'");
    return it->get<std::string>();
  }

  const json& array_field(const json& obj, const char* key) const {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_array()) schema(std::string("'") + key + "' must be an array");
    return *it;
  }

  double number_field(const json& obj, const char* key, double fallback) const {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_number()) schema(std::string("'") + key + "' must be a number");
    return it->get<double>();
  }

  Point pair(const json& v, const char* what) const {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      schema(std::string(what) + " must be a [x, y] pair");
    return {v[0].get<double>(), v[1].get<double>()};
  }

  RemarkablePoint point_field(const json& obj, const char* key) const {
    const std::string name = string_field(obj, key);
    auto p = parse_remarkable_point(name);
    if (!p) schema("unknown remarkable point '" + name + "'");
    return *p;
  }

  ElementSpec element(const json& e) const {
    if (!e.is_object()) schema("element must be an object");
    ElementSpec spec;
    spec.id = string_field(e, "id");
    const std::string kind = string_field(e, "kind");
    if (kind == "icon") {
      IconElement icon{string_field(e, "asset")};
      auto it = assets_.find(icon.asset);
      if (it == assets_.end())
        throw Error(ErrorCode::kMissingAsset, "missing asset '" + icon.asset + "'", where_);
      icon.width = it->second.width;
      icon.height = it->second.height;
      spec.kind = icon;
    } else if (kind == "text") {
      spec.kind = TextElement{string_field(e, "content"), number_field(e, "size", 40)};
    } else if (kind == "slot" || kind == "slot-list") {
      const std::string slot = e.contains("slot") ? string_field(e, "slot") : spec.id;
      Point box{100, 100};
      if (auto b = e.find("box"); b != e.end()) box = pair(*b, "'box'");
      if (kind == "slot") {
        spec.kind = SlotElement{slot, box.x, box.y};
      } else {
        SlotListElement list{slot, number_field(e, "spacing", 10), Direction::kHorizontal, box.x,
                             box.y};
        if (e.contains("direction")) {
          const std::string dir = string_field(e, "direction");
          if (dir == "vertical")
            list.direction = Direction::kVertical;
          else if (dir != "horizontal")
            schema("unknown direction '" + dir + "'");
        }
        spec.kind = list;
      }
    } else if (kind == "stroke") {
      StrokeElement stroke;
      for (const auto& path : array_field(e, "paths")) {
        if (!path.is_array()) schema("stroke path must be an array of points");
        std::vector<Point> points;
        for (const auto& p : path) points.push_back(pair(p, "stroke point"));
        stroke.paths.push_back(std::move(points));
      }
      if (auto d = e.find("dashed"); d != e.end()) {
        if (!d->is_boolean()) schema("'dashed' must be a boolean");
        stroke.dashed = d->get<bool>();
      }
      spec.kind = std::move(stroke);
    } else {
      schema("unknown element kind '" + kind + "'");
    }
    return spec;
  }

  AlignConstraint align(const json& a) const {
    if (!a.is_object()) schema("align must be an object");
    AlignConstraint c;
    c.subject = string_field(a, "subject");
    c.subject_point = point_field(a, "subject_point");
    c.target = string_field(a, "target");
    c.target_point = point_field(a, "target_point");
    if (auto o = a.find("offset"); o != a.end()) c.offset = pair(*o, "'offset'");
    return c;
  }

  ScaleConstraint scale(const json& s) const {
    if (!s.is_object()) schema("scale must be an object");
    ScaleConstraint c;
    c.subject = string_field(s, "subject");
    if (s.contains("nominal")) {
      c.mode = FixedNominal{number_field(s, "nominal", 100)};
    } else if (s.contains("relative_to")) {
      RelativeTo rel;
      rel.target = string_field(s, "relative_to");
      const std::string dim = s.contains("dimension") ? string_field(s, "dimension") : "width";
      if (dim == "height")
        rel.dimension = Dimension::kHeight;
      else if (dim != "width")
        schema("unknown dimension '" + dim + "'");
      rel.factor = number_field(s, "factor", 1);
      c.mode = rel;
    } else {
      schema("scale needs 'nominal' or 'relative_to'");
    }
    return c;
  }

  Expr template_expr() const {
    auto it = doc_.find("template");
    if (it == doc_.end()) schema("missing 'template'");
    std::string text;
    if (it->is_string()) {
      text = it->get<std::string>();
    } else if (it->is_array()) {
      for (const auto& line : *it) {
        if (!line.is_string()) schema("template lines must be strings");
        text += line.get<std::string>() + '\n';
      }
    } else {
      schema("'template' must be a string or an array of lines");
    }
    try {
      return parse_template(text);
    } catch (const Error& e) {
      throw Error(ErrorCode::kSyntax, where_ + ": template: " + e.what(), e.location());
    }
  }

  void check_references(const LayoutSpec& spec) const {
    auto dangling = [&](const std::string& what) {
      throw Error(ErrorCode::kDanglingReference, where_ + ": " + what, where_);
    };
    for (const auto& a : spec.aligns) {
      if (!spec.find_element(a.subject)) dangling("alignment subject '" + a.subject + "'");
      if (!spec.find_element(a.target)) dangling("alignment target '" + a.target + "'");
    }
    for (const auto& s : spec.scales) {
      if (!spec.find_element(s.subject)) dangling("scale subject '" + s.subject + "'");
      if (const auto* rel = std::get_if<RelativeTo>(&s.mode); rel && !spec.find_element(rel->target))
        dangling("scale target '" + rel->target + "'");
    }
    std::vector<const Expr*> stack{&spec.templ};
    while (!stack.empty()) {
      const Expr* e = stack.back();
      stack.pop_back();
      if (const auto* s = e->as_slot(); s && !spec.find_slot(s->slot))
        dangling("template slot [" + s->slot + "] has no slot element");
      if (const auto* s = e->as_slot_list(); s && !spec.find_slot(s->slot))
        dangling("template slot [" + s->slot + "...] has no slot element");
      if (const auto* app = e->as_application())
        for (const auto& arg : app->args) stack.push_back(&arg.value);
      if (const auto* list = e->as_list())
        for (const auto& item : list->items) stack.push_back(&item);
    }
  }

  const json& doc_;
  std::string where_;
  const std::map<std::string, Asset>& assets_;
};

}  // namespace

Catalog load_catalog(const json& doc, const std::map<std::string, Asset>& assets) {
  if (!doc.is_object() || !doc.contains("layouts") || !doc["layouts"].is_array())
    throw Error(ErrorCode::kSchema, "catalog: expected { \"layouts\": [...] }", "/");
  Catalog cat;
  for (const auto& [id, asset] : assets) cat.add_asset(asset);
  const json& layouts = doc["layouts"];
  for (std::size_t i = 0; i < layouts.size(); ++i)
    cat.add_layout(LayoutReader(layouts[i], "layouts/" + std::to_string(i), assets).read());
  return cat;
}

Catalog load_catalog_dir(const std::filesystem::path& dir) {
  std::map<std::string, Asset> assets;
  const auto asset_dir = dir / "assets";
  if (std::filesystem::is_directory(asset_dir)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(asset_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".svg")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      std::string id = f.stem().string();
      assets.emplace(id, parse_asset(id, read_file(f)));
    }
  }
  const auto catalog_path = dir / "catalog.json";
  json doc;
  try {
    doc = json::parse(read_file(catalog_path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchema, std::string("catalog: ") + e.what(), catalog_path.string());
  }
  return load_catalog(doc, assets);
}

Workspace load_workspace(const std::filesystem::path& dir) {
  return Workspace{load_registry_file(dir / "registry.json"), load_catalog_dir(dir)};
}

// ---------------------------------------------------------------------------
// Validation

bool is_generic_template(const Expr& templ, const ProductionRule& rule) {
  const auto* app = templ.as_application();
  if (!app || app->rule != rule.name || app->args.size() != rule.params.size()) return false;
  for (std::size_t i = 0; i < rule.params.size(); ++i) {
    const Param& p = rule.params[i];
    const Argument& a = app->args[i];
    if (a.name != p.name) return false;
    if (p.kind == ParamKind::kExpr) {
      if (!a.value.as_slot()) return false;
    } else {
      const auto* list = a.value.as_list();
      if (!list || list->items.size() != 1 || !list->items[0].as_slot_list()) return false;
    }
  }
  return true;
}

namespace {

struct Placeholder {
  std::string slot;
  bool splice;
};

void collect_placeholders(const Expr& e, bool in_list, std::vector<Placeholder>& out,
                          ValidationReport& report, const std::string& where) {
  if (const auto* s = e.as_slot()) {
    out.push_back({s->slot, false});
  } else if (const auto* s = e.as_slot_list()) {
    if (!in_list)
      report.add("misplaced-splice", "[" + s->slot + "...] outside a list", where);
    out.push_back({s->slot, true});
  } else if (const auto* app = e.as_application()) {
    for (const auto& arg : app->args) collect_placeholders(arg.value, false, out, report, where);
  } else if (const auto* list = e.as_list()) {
    int splices = 0;
    for (const auto& item : list->items) {
      if (item.as_slot_list()) ++splices;
      collect_placeholders(item, true, out, report, where);
    }
    if (splices > 1) report.add("misplaced-splice", "more than one [x...] in one list", where);
  }
}

Expr substitute_filler(const Expr& e, const std::string& filler) {
  if (e.as_slot()) return Expr::app(filler);
  if (const auto* app = e.as_application()) {
    Application out{app->rule, {}};
    for (const auto& arg : app->args)
      out.args.push_back(Argument{arg.name, substitute_filler(arg.value, filler)});
    return Expr{std::move(out)};
  }
  if (const auto* list = e.as_list()) {
    ListExpr out;
    for (const auto& item : list->items) {
      if (item.as_slot_list()) {
        out.items.push_back(Expr::app(filler));
        out.items.push_back(Expr::app(filler));
      } else {
        out.items.push_back(substitute_filler(item, filler));
      }
    }
    return Expr{std::move(out)};
  }
  return e;
}

void validate_layout(const LayoutSpec& layout, const Catalog& cat, const RuleRegistry& reg,
                     ValidationReport& report) {
  const std::string where = "layouts/" + layout.id;
  if (layout.elements.empty()) {
    report.add("empty-layout", "layout has no elements", where);
    return;
  }

  std::map<std::string, std::size_t> order;
  std::set<std::string> slots;
  for (std::size_t i = 0; i < layout.elements.size(); ++i) {
    const ElementSpec& e = layout.elements[i];
    if (!order.emplace(e.id, i).second)
      report.add("duplicate-element", "duplicate element id '" + e.id + "'", where);
    if (auto s = e.slot_id(); s && !slots.insert(*s).second)
      report.add("duplicate-slot", "duplicate slot id '" + *s + "'", where);
    if (const auto* icon = std::get_if<IconElement>(&e.kind); icon && !cat.find_asset(icon->asset))
      report.add("missing-asset", "missing asset '" + icon->asset + "'", where);
    if (const auto* stroke = std::get_if<StrokeElement>(&e.kind)) {
      bool has_points = false;
      for (const auto& p : stroke->paths) has_points = has_points || p.size() >= 2;
      if (!has_points) report.add("empty-stroke", "stroke '" + e.id + "' draws nothing", where);
    }
  }
  auto index_of = [&](const std::string& id) -> std::optional<std::size_t> {
    auto it = order.find(id);
    if (it == order.end()) return std::nullopt;
    return it->second;
  };

  std::map<std::string, int> align_count;
  for (const auto& a : layout.aligns) {
    const auto s = index_of(a.subject);
    const auto t = index_of(a.target);
    if (!s || !t) {
      report.add("dangling-reference",
                 "alignment references unknown element '" + (s ? a.target : a.subject) + "'",
                 where);
      continue;
    }
    if (a.subject == a.target) {
      report.add("self-alignment", "element '" + a.subject + "' aligned to itself", where);
      continue;
    }
    ++align_count[a.subject];
    if (*s == 0) report.add("anchor-aligned", "anchor '" + a.subject + "' must not be aligned", where);
    if (*t >= *s)
      report.add("placement-order",
                 "element '" + a.subject + "' aligns to '" + a.target + "' which is placed later",
                 where);
  }
  for (std::size_t i = 1; i < layout.elements.size(); ++i) {
    const std::string& id = layout.elements[i].id;
    const int n = align_count[id];
    if (n == 0) report.add("missing-alignment", "element '" + id + "' has no alignment", where);
    if (n > 1) report.add("multiple-alignments", "element '" + id + "' has several alignments", where);
  }

  std::map<std::string, int> scale_count;
  for (const auto& sc : layout.scales) {
    const auto s = index_of(sc.subject);
    if (!s) {
      report.add("dangling-reference", "scale references unknown element '" + sc.subject + "'",
                 where);
      continue;
    }
    if (++scale_count[sc.subject] > 1)
      report.add("multiple-scales", "element '" + sc.subject + "' has several scales", where);
    if (const auto* fixed = std::get_if<FixedNominal>(&sc.mode)) {
      if (!(fixed->size > 0)) report.add("invalid-scale", "nominal size must be > 0", where);
    } else {
      const auto& rel = std::get<RelativeTo>(sc.mode);
      if (!(rel.factor > 0)) report.add("invalid-scale", "scale factor must be > 0", where);
      const auto t = index_of(rel.target);
      if (!t) {
        report.add("dangling-reference", "scale references unknown element '" + rel.target + "'",
                   where);
      } else if (*t >= *s) {
        report.add("placement-order",
                   "element '" + sc.subject + "' scales relative to '" + rel.target +
                       "' which is placed later",
                   where);
      }
    }
  }

  std::vector<Placeholder> placeholders;
  collect_placeholders(layout.templ, false, placeholders, report, where);
  std::map<std::string, int> seen;
  for (const auto& ph : placeholders) {
    if (++seen[ph.slot] == 2)
      report.add("duplicate-placeholder", "slot [" + ph.slot + "] used twice in template", where);
    const ElementSpec* e = layout.find_slot(ph.slot);
    if (!e) {
      report.add("slot-mismatch", "template slot [" + ph.slot + "] has no slot element", where);
    } else if (e->is_slot_list() != ph.splice) {
      report.add("slot-kind-mismatch",
                 "slot '" + ph.slot + "' kind differs between element and template", where);
    }
  }
  for (const auto& s : slots)
    if (!seen.contains(s))
      report.add("slot-mismatch", "slot element '" + s + "' missing from template", where);

  if (const auto filler = reg.atomic_filler()) {
    const ValidationReport tr = validate_expr(substitute_filler(layout.templ, *filler), reg);
    for (const auto& v : tr.violations)
      report.add("invalid-template", v.code + ": " + v.message, where + v.location);
  } else {
    report.add("no-filler", "registry has no atomic rule to probe templates with", where);
  }
}

}  // namespace

ValidationReport validate_catalog(const Catalog& cat, const RuleRegistry& reg) {
  ValidationReport report;
  for (const auto& layout : cat.layouts()) validate_layout(layout, cat, reg, report);

  for (const auto& entry : cat.templates()) {
    for (const auto& id : entry.variants) {
      const LayoutSpec* l = cat.find_layout(id);
      if (l && !(l->templ == entry.templ))
        report.add("variant-mismatch",
                   "layout '" + id + "' template differs from template '" + entry.id + "'",
                   "templates/" + entry.id);
    }
  }

  for (const auto& rule : reg.rules()) {
    bool covered = false;
    for (const auto& layout : cat.layouts()) covered = covered || is_generic_template(layout.templ, rule);
    if (!covered)
      report.add("uncovered-rule", "rule " + rule.name + " uncovered", "rules/" + rule.name);
  }
  for (const auto& c : reg.constants()) {
    bool covered = false;
    for (const auto& layout : cat.layouts())
      covered = covered || layout.templ == Expr::constant(c);
    if (!covered)
      report.add("uncovered-constant", "constant " + c + " uncovered", "constants/" + c);
  }
  return report;
}

std::vector<std::reference_wrapper<const LayoutSpec>> variants_for(const Catalog& cat,
                                                                   std::string_view template_id) {
  const TemplateEntry* entry = cat.find_template(template_id);
  if (!entry)
    throw Error(ErrorCode::kUnknownTemplate, "unknown template '" + std::string(template_id) + "'",
                std::string(template_id));
  std::vector<std::reference_wrapper<const LayoutSpec>> out;
  for (const auto& id : entry->variants) out.emplace_back(cat.layout(id));
  return out;
}

Catalog scale_lengths(const Catalog& cat, double k) {
  Catalog out;
  for (auto asset : cat.assets()) {
    asset.second.width *= k;
    asset.second.height *= k;
    out.add_asset(std::move(asset.second));
  }
  for (LayoutSpec layout : cat.layouts()) {
    for (auto& e : layout.elements) {
      std::visit(
          [k](auto& el) {
            using K = std::decay_t<decltype(el)>;
            if constexpr (std::is_same_v<K, IconElement>) {
              el.width *= k;
              el.height *= k;
            } else if constexpr (std::is_same_v<K, TextElement>) {
              el.size *= k;
            } else if constexpr (std::is_same_v<K, SlotElement>) {
              el.nominal_width *= k;
              el.nominal_height *= k;
            } else if constexpr (std::is_same_v<K, SlotListElement>) {
              el.nominal_width *= k;
              el.nominal_height *= k;
              el.spacing *= k;
            } else {
              for (auto& path : el.paths)
                for (auto& p : path) p = {p.x * k, p.y * k};
            }
          },
          e.kind);
    }
    for (auto& a : layout.aligns) a.offset = {a.offset.x * k, a.offset.y * k};
    for (auto& s : layout.scales)
      if (auto* fixed = std::get_if<FixedNominal>(&s.mode)) fixed->size *= k;
    out.add_layout(std::move(layout));
  }
  return out;
}

}  // namespace azvd
