#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "azvd/azee.hpp"
#include "azvd/geometry.hpp"
#include "azvd/registry.hpp"
#include "azvd/report.hpp"

namespace azvd {

/// A vector image from the catalog asset directory. `width`/`height` are
/// its natural size in layout units; `content` is the markup inside the
/// root <svg> element, inlined verbatim when rendering.
struct Asset {
  std::string id;
  Box view_box;
  double width = 0;
  double height = 0;
  std::string content;
};

/// Reads the root element's viewBox/width/height and keeps its children.
/// Throws Error{kSchema} when no size can be determined.
Asset parse_asset(std::string id, std::string_view svg_text);

enum class Direction { kHorizontal, kVertical };
enum class Dimension { kWidth, kHeight };

struct IconElement {
  std::string asset;
  double width = 0;   // natural size, resolved from the asset at load time
  double height = 0;
};

struct TextElement {
  std::string content;
  double size = 40;  // line height; advance is estimated per code point
};

struct SlotElement {
  std::string slot;
  double nominal_width = 100;
  double nominal_height = 100;
};

struct SlotListElement {
  std::string slot;
  double spacing = 10;
  Direction direction = Direction::kHorizontal;
  double nominal_width = 100;
  double nominal_height = 100;
};

struct StrokeElement {
  std::vector<std::vector<Point>> paths;  // polylines in local units
  bool dashed = false;
};

struct ElementSpec {
  using Kind = std::variant<IconElement, TextElement, SlotElement, SlotListElement, StrokeElement>;
  std::string id;
  Kind kind;

  /// Slot id for Slot/SlotList elements, nullopt otherwise.
  std::optional<std::string> slot_id() const;
  bool is_slot_list() const { return std::holds_alternative<SlotListElement>(kind); }
};

/// Size of an element before any scaling. Slots report their nominal box.
Box natural_box(const ElementSpec& element);

/// Width-per-height ratio used to estimate single-line text advance.
inline constexpr double kTextAdvanceRatio = 0.6;
double estimate_text_width(std::string_view utf8, double size);

/// Places `subject` so that its `subject_point` lands on the target's
/// `target_point` shifted by `offset`.
struct AlignConstraint {
  std::string subject;
  RemarkablePoint subject_point = RemarkablePoint::kC;
  std::string target;
  RemarkablePoint target_point = RemarkablePoint::kC;
  Point offset;
};

struct FixedNominal {
  double size = 100;  // larger side after scaling
};

struct RelativeTo {
  std::string target;
  Dimension dimension = Dimension::kWidth;
  double factor = 1;
};

struct ScaleConstraint {
  std::string subject;
  std::variant<FixedNominal, RelativeTo> mode;
};

struct LayoutSpec {
  std::string id;
  std::string template_id;
  std::string variant;
  std::vector<ElementSpec> elements;  // document order is placement order
  std::vector<AlignConstraint> aligns;
  std::vector<ScaleConstraint> scales;
  Expr templ;

  const ElementSpec* find_element(std::string_view element_id) const;
  const ElementSpec* find_slot(std::string_view slot_id) const;
  /// Slot ids in document order.
  std::vector<std::string> slot_ids() const;
  const AlignConstraint* align_for(std::string_view element_id) const;
  const ScaleConstraint* scale_for(std::string_view element_id) const;
};

struct TemplateEntry {
  std::string id;
  Expr templ;                         // the default variant's template
  std::string default_layout;
  std::vector<std::string> variants;  // catalog order, default first
};

class Catalog {
 public:
  /// Adds a layout; the first layout of a template id becomes its default.
  void add_layout(LayoutSpec layout);
  void add_asset(Asset asset);

  const LayoutSpec* find_layout(std::string_view id) const;
  /// Throws Error{kUnknownLayout}.
  const LayoutSpec& layout(std::string_view id) const;
  const TemplateEntry* find_template(std::string_view id) const;
  const Asset* find_asset(std::string_view id) const;

  const std::vector<LayoutSpec>& layouts() const { return layouts_; }
  const std::vector<TemplateEntry>& templates() const { return templates_; }
  const std::map<std::string, Asset>& assets() const { return assets_; }

 private:
  std::vector<LayoutSpec> layouts_;
  std::map<std::string, std::size_t, std::less<>> layout_index_;
  std::vector<TemplateEntry> templates_;
  std::map<std::string, std::size_t, std::less<>> template_index_;
  std::map<std::string, Asset> assets_;
};

/// Builds a catalog from the bundle document `{ "layouts": [...] }`.
/// Throws Error{kSchema}, {kSyntax} (template text), {kMissingAsset} or
/// {kDanglingReference}.
Catalog load_catalog(const nlohmann::json& doc, const std::map<std::string, Asset>& assets);

/// Reads `catalog.json` and every `assets/*.svg` under `dir`.
Catalog load_catalog_dir(const std::filesystem::path& dir);

/// Registry and catalog shipped side by side in one directory.
struct Workspace {
  RuleRegistry registry;
  Catalog catalog;
};
Workspace load_workspace(const std::filesystem::path& dir);

/// Placement order, slot/template bijection, template validity under
/// placeholder substitution, variant consistency and rule coverage.
ValidationReport validate_catalog(const Catalog& cat, const RuleRegistry& reg);

/// Layouts realizing `template_id`, default first. Throws Error{kUnknownTemplate}.
std::vector<std::reference_wrapper<const LayoutSpec>> variants_for(const Catalog& cat,
                                                                   std::string_view template_id);

/// True when `templ` is `:rule` applied to bare slots (and `list [x...]`
/// for LIST params), i.e. it matches every application of the rule.
bool is_generic_template(const Expr& templ, const ProductionRule& rule);

/// Copy of `cat` with every length multiplied by `k`.
Catalog scale_lengths(const Catalog& cat, double k);

}  // namespace azvd
