#include <gtest/gtest.h>

#include <random>

#include "azvd/error.hpp"
#include "azvd/svg.hpp"
#include "scene_checks.hpp"
#include "testing.hpp"

namespace azvd {
namespace {

const Catalog& cat() { return testing::shipped().catalog; }

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

Scene single_icon(const std::string& asset) {
  SceneNode p;
  p.role = SceneNode::Role::kPrimitive;
  p.primitive = Primitive{IconPrimitive{asset}, {0, 0, 100, 100}};
  Scene s;
  s.root.id = "lex";
  s.root.children.push_back(std::move(p));
  s.bounds = {0, 0, 100, 100};
  return s;
}

TEST(FormatNumber, FixedSixDecimals) {
  EXPECT_EQ(format_number(0), "0.000000");
  EXPECT_EQ(format_number(-0.0), "0.000000");
  EXPECT_EQ(format_number(-1e-9), "0.000000");
  EXPECT_EQ(format_number(1.5), "1.500000");
  EXPECT_EQ(format_number(1e20), "100000000000000000000.000000");
}

TEST(EmitSvg, EmptySceneHasMarginOnlyViewBox) {
  const std::string svg = emit_svg(Scene{}, cat());
  EXPECT_NE(svg.find("viewBox=\"-10.000000 -10.000000 20.000000 20.000000\""), std::string::npos);
  EXPECT_EQ(svg.find("<svg class"), std::string::npos);
  EXPECT_EQ(testing::svg_world_boxes(svg).size(), 0u);
}

TEST(EmitSvg, SingleIconInlinesOneAsset) {
  const std::string svg = emit_svg(single_icon("chat"), cat());
  EXPECT_EQ(count(svg, "<svg class=\"icon-"), 1u);
  EXPECT_NE(svg.find(cat().find_asset("chat")->content.substr(0, 20)), std::string::npos);
}

TEST(EmitSvg, MissingAsset) {
  try {
    emit_svg(single_icon("dog"), cat());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingAsset);
  }
}

TEST(EmitSvg, PlaceholdersForEmptySlots) {
  const Diagram d = load_diagram(testing::load_json(testing::testdata_dir() /
                                                    "context-empty.diagram.json"),
                                 cat());
  const std::string svg = emit_svg(build_scene(d, cat()), cat());
  EXPECT_EQ(count(svg, "class=\"placeholder\""), 2u);
  EXPECT_EQ(count(svg, "stroke-dasharray"), 2u);
  EXPECT_NE(svg.find(">ctxt</text>"), std::string::npos);
  EXPECT_NE(svg.find(">proc</text>"), std::string::npos);
}

TEST(EmitSvg, Fig18MiddleTransformsReproduceScene) {
  const Diagram d = load_diagram(testing::load_json(testing::testdata_dir() /
                                                    "chat-middle.diagram.json"),
                                 cat());
  const Scene s = build_scene(d, cat());
  const std::string svg = emit_svg(s, cat());
  EXPECT_LE(testing::svg_fixpoint_error(s, svg), 1e-6);
}

TEST(EmitSvg, EscapesText) {
  SceneNode p;
  p.role = SceneNode::Role::kPrimitive;
  p.primitive = Primitive{TextPrimitive{"a<&>\"b", 10}, {0, 0, 36, 10}};
  Scene s;
  s.root.children.push_back(std::move(p));
  const std::string svg = emit_svg(s, cat());
  EXPECT_NE(svg.find(">a&lt;&amp;&gt;&quot;b</text>"), std::string::npos);
}

TEST(EmitSvg, ByteDeterministicAndWellFormed) {
  std::mt19937 rng(3);
  testing::DiagramGenerator gen(cat(), 0.2);
  for (int i = 0; i < 40; ++i) {
    const Diagram d = gen(rng, 4);
    const Scene s = build_scene(d, cat());
    const std::string a = emit_svg(s, cat());
    EXPECT_EQ(a, emit_svg(build_scene(d, cat()), cat()));
    EXPECT_EQ(a.find('\r'), std::string::npos);
    EXPECT_EQ(a.find("e+"), std::string::npos);
    EXPECT_LE(testing::svg_fixpoint_error(s, a), 1e-6);
  }
}

TEST(EmitSvg, ViewBoxIsBoundsPlusMargin) {
  const Scene s = build_scene(Diagram{"lex-gentil", {}}, cat());
  const std::string svg = emit_svg(s, cat());
  EXPECT_NE(svg.find("width=\"120.000000\" height=\"120.000000\" "
                     "viewBox=\"-10.000000 -10.000000 120.000000 120.000000\""),
            std::string::npos);
}

}  // namespace
}  // namespace azvd
