#include <gtest/gtest.h>

#include "azvd/catalog.hpp"
#include "azvd/error.hpp"
#include "testing.hpp"

namespace azvd {
namespace {

using nlohmann::json;

const Workspace& ws() { return testing::shipped(); }

json shipped_doc() { return testing::load_json(testing::data_dir() / "catalog.json"); }

json& layout_doc(json& doc, const std::string& id) {
  for (auto& l : doc["layouts"])
    if (l["id"] == id) return l;
  throw std::runtime_error("no layout " + id);
}

Catalog reload(const json& doc) { return load_catalog(doc, ws().catalog.assets()); }

ErrorCode load_error(const json& doc) {
  try {
    reload(doc);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted";
  return ErrorCode::kIo;
}

TEST(LoadCatalog, ContextBarTemplate) {
  const LayoutSpec& l = ws().catalog.layout("context-bar");
  EXPECT_EQ(l.template_id, "context");
  EXPECT_EQ(print_azee(l.templ), testing::testdata("golden/context.template"));
  EXPECT_EQ(l.slot_ids(), (std::vector<std::string>{"ctxt", "proc"}));
  ASSERT_TRUE(std::holds_alternative<StrokeElement>(l.find_element("bar")->kind));
}

TEST(LoadCatalog, EqualsRealizesInfoAbout) {
  const LayoutSpec& l = ws().catalog.layout("equals");
  EXPECT_EQ(l.template_id, "info-about");
  EXPECT_EQ(l.templ, parse_template(":info-about\n  'topic\n  [topic]\n  'info\n  [info]\n"));
  const auto* eq = std::get_if<TextElement>(&l.find_element("eq")->kind);
  ASSERT_NE(eq, nullptr);
  EXPECT_EQ(eq->content, "=");
  EXPECT_EQ(l.elements.front().id, "topic");
  EXPECT_EQ(l.elements.back().id, "info");
}

TEST(LoadCatalog, LightningCarriesFullTemplate) {
  EXPECT_EQ(print_azee(ws().catalog.layout("lightning").templ),
            testing::testdata("golden/each-of-opposition.template"));
}

TEST(LoadCatalog, IconSizeFromAsset) {
  const auto& icon = std::get<IconElement>(ws().catalog.layout("lex-chat").elements[0].kind);
  EXPECT_EQ(icon.width, 100);
  EXPECT_EQ(icon.height, 100);
}

TEST(LoadCatalog, DanglingTemplateSlot) {
  json doc = shipped_doc();
  layout_doc(doc, "intensity")["template"] = ":intensity\n  'sig\n  [X]\n";
  EXPECT_EQ(load_error(doc), ErrorCode::kDanglingReference);
}

TEST(LoadCatalog, DanglingConstraintTarget) {
  json doc = shipped_doc();
  layout_doc(doc, "equals")["aligns"][0]["target"] = "nowhere";
  EXPECT_EQ(load_error(doc), ErrorCode::kDanglingReference);
}

TEST(LoadCatalog, MissingAsset) {
  json doc = shipped_doc();
  layout_doc(doc, "lex-chat")["elements"][0]["asset"] = "dog";
  EXPECT_EQ(load_error(doc), ErrorCode::kMissingAsset);
}

TEST(LoadCatalog, SchemaErrors) {
  EXPECT_EQ(load_error(json::object()), ErrorCode::kSchema);
  json doc = shipped_doc();
  layout_doc(doc, "equals")["elements"][1]["kind"] = "sprite";
  EXPECT_EQ(load_error(doc), ErrorCode::kSchema);
  doc = shipped_doc();
  layout_doc(doc, "equals")["aligns"][0]["subject_point"] = "top";
  EXPECT_EQ(load_error(doc), ErrorCode::kSchema);
  doc = shipped_doc();
  doc["layouts"].push_back(layout_doc(doc, "equals"));
  EXPECT_EQ(load_error(doc), ErrorCode::kSchema);
}

TEST(LoadCatalog, TemplateSyntaxError) {
  json doc = shipped_doc();
  layout_doc(doc, "intensity")["template"] = ":intensity\n  'sig\n";
  EXPECT_EQ(load_error(doc), ErrorCode::kSyntax);
}

TEST(ParseAsset, ReadsViewBoxAndContent) {
  const Asset a = parse_asset(
      "x", "<?xml version=\"1.0\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 50 20\">\n"
           "  <path d=\"M0 0 L50 20\"/>\n</svg>\n");
  EXPECT_EQ(a.view_box, (Box{0, 0, 50, 20}));
  EXPECT_EQ(a.width, 50);
  EXPECT_EQ(a.height, 20);
  EXPECT_EQ(a.content, "<path d=\"M0 0 L50 20\"/>");
  EXPECT_THROW(parse_asset("y", "<svg></svg>"), Error);
}

TEST(ValidateCatalog, ShippedCatalogIsClean) {
  const auto report = validate_catalog(ws().catalog, ws().registry);
  EXPECT_TRUE(report.ok()) << to_text(report);
}

TEST(ValidateCatalog, RemovingCategoryUncoversIt) {
  json doc = shipped_doc();
  auto& layouts = doc["layouts"];
  for (auto it = layouts.begin(); it != layouts.end(); ++it)
    if ((*it)["id"] == "category") {
      layouts.erase(it);
      break;
    }
  const auto report = validate_catalog(reload(doc), ws().registry);
  ASSERT_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations)
    if (v.code == "uncovered-rule" && v.message == "rule category uncovered") found = true;
  EXPECT_TRUE(found) << to_text(report);
}

TEST(ValidateCatalog, RemovingEachRuleLayoutUncoversIt) {
  for (const auto& rule : ws().registry.rules()) {
    json doc = shipped_doc();
    auto& layouts = doc["layouts"];
    for (auto it = layouts.begin(); it != layouts.end();)
      it = (*it)["template_id"] == rule.name ? layouts.erase(it) : it + 1;
    EXPECT_TRUE(validate_catalog(reload(doc), ws().registry).contains("uncovered-rule"))
        << rule.name;
  }
}

TEST(ValidateCatalog, PlacementOrder) {
  json doc = shipped_doc();
  // Element 2 (eq) aligns to element 3 (info).
  auto& aligns = layout_doc(doc, "equals")["aligns"];
  aligns[0] = {{"subject", "eq"}, {"subject_point", "W"}, {"target", "info"},
               {"target_point", "E"}, {"offset", {10, 0}}};
  const auto report = validate_catalog(reload(doc), ws().registry);
  EXPECT_TRUE(report.contains("placement-order")) << to_text(report);
}

TEST(ValidateCatalog, ScaleTargetPlacedLater) {
  json doc = shipped_doc();
  layout_doc(doc, "context-bar")["scales"][0]["relative_to"] = "proc";
  EXPECT_TRUE(validate_catalog(reload(doc), ws().registry).contains("placement-order"));
}

TEST(ValidateCatalog, AlignmentCounts) {
  json doc = shipped_doc();
  auto& l = layout_doc(doc, "equals");
  l["aligns"].erase(1);
  l["aligns"].push_back(l["aligns"][0]);
  const auto report = validate_catalog(reload(doc), ws().registry);
  EXPECT_TRUE(report.contains("missing-alignment"));
  EXPECT_TRUE(report.contains("multiple-alignments"));
}

TEST(ValidateCatalog, SlotWithoutPlaceholder) {
  json doc = shipped_doc();
  layout_doc(doc, "intensity")["template"] = ":intensity\n  'sig\n  :gentil\n";
  EXPECT_TRUE(validate_catalog(reload(doc), ws().registry).contains("slot-mismatch"));
}

TEST(ValidateCatalog, InvalidTemplateUnderSubstitution) {
  json doc = shipped_doc();
  layout_doc(doc, "intensity")["template"] = ":intensity\n  'sig\n  [sig]\n  'extra\n  :gentil\n";
  EXPECT_TRUE(validate_catalog(reload(doc), ws().registry).contains("invalid-template"));
}

TEST(ValidateCatalog, VariantTemplatesMustAgree) {
  json doc = shipped_doc();
  layout_doc(doc, "equals-vertical")["template"] =
      ":info-about\n  'topic\n  [info]\n  'info\n  [topic]\n";
  EXPECT_TRUE(validate_catalog(reload(doc), ws().registry).contains("variant-mismatch"));
}

TEST(ValidateCatalog, SpliceKindMismatch) {
  json doc = shipped_doc();
  layout_doc(doc, "each-of")["elements"][0]["kind"] = "slot";
  EXPECT_TRUE(validate_catalog(reload(doc), ws().registry).contains("slot-kind-mismatch"));
}

TEST(VariantsFor, InfoAboutHorizontalFirst) {
  const auto v = variants_for(ws().catalog, "info-about");
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].get().id, "equals");
  EXPECT_EQ(v[0].get().variant, "horizontal");
  EXPECT_EQ(v[1].get().id, "equals-vertical");
}

TEST(VariantsFor, Singleton) {
  const auto v = variants_for(ws().catalog, "category");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].get().id, "category");
}

TEST(VariantsFor, UnknownTemplate) {
  try {
    variants_for(ws().catalog, "nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownTemplate);
  }
}

TEST(Catalog, UnknownLayoutThrows) {
  EXPECT_EQ(ws().catalog.find_layout("nope"), nullptr);
  try {
    ws().catalog.layout("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownLayout);
  }
}

TEST(TextWidth, CountsCodePoints) {
  EXPECT_DOUBLE_EQ(estimate_text_width("=", 40), 24);
  EXPECT_DOUBLE_EQ(estimate_text_width("é", 10), 6);
}

}  // namespace
}  // namespace azvd
