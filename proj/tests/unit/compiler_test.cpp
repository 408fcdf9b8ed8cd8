#include <gtest/gtest.h>

#include <random>

#include "azvd/compiler.hpp"
#include "azvd/error.hpp"
#include "testing.hpp"

namespace azvd {
namespace {

using nlohmann::json;

const Workspace& ws() { return testing::shipped(); }
const Catalog& cat() { return ws().catalog; }

Diagram leaf(const std::string& layout) { return Diagram{layout, {}}; }

Diagram diagram_file(const std::string& name) {
  return load_diagram(testing::load_json(testing::testdata_dir() / name), cat());
}

ErrorCode error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kIo;
}

TEST(Compile, Fig17Blocks) {
  for (const char* name : {"left", "middle", "right"}) {
    const std::string golden = testing::testdata(std::string("golden/chat-") + name + ".azee");
    const Diagram d = diagram_file(std::string("chat-") + name + ".diagram.json");
    EXPECT_EQ(print_azee(compile(d, cat())), golden) << name;
  }
}

TEST(Compile, LightningSubstitutesBothSides) {
  Diagram d{"lightning", {}};
  d.fill("A", leaf("lex-lion")).fill("B", leaf("lex-mechant"));
  const Expr expected = Expr::app(
      "each-of",
      {{"items", Expr::list({Expr::app("about-point", {{"pt", Expr::constant("Lssp")},
                                                       {"locsig", Expr::app("lion")}}),
                            Expr::app("about-point", {{"pt", Expr::constant("Rssp")},
                                                      {"locsig", Expr::app("méchant")}})})}});
  EXPECT_EQ(compile(d, cat()), expected);
}

TEST(Compile, SpliceKeepsItemOrder) {
  Diagram d{"all-of", {}};
  d.fill_list("items", {leaf("lex-chat"), leaf("lex-soleil"), leaf("point-Rssp")});
  EXPECT_EQ(compile(d, cat()),
            Expr::app("all-of", {{"items", Expr::list({Expr::app("chat"), Expr::app("soleil"),
                                                       Expr::constant("Rssp")})}}));
}

TEST(Compile, IncompleteNamesFirstEmptySlot) {
  const Diagram d = diagram_file("incomplete.diagram.json");
  try {
    compile(d, cat());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteDiagram);
    EXPECT_EQ(e.location(), "info/sig");
  }
  EXPECT_EQ(first_empty_slot(d, cat()), "info/sig");
}

TEST(Compile, MissingFillIsEmptyDepthFirst) {
  Diagram d{"context-bar", {}};
  Diagram inner{"equals", {}};
  inner.fill("info", leaf("lex-chat"));
  d.fill("proc", std::move(inner));
  try {
    compile(d, cat());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.location(), "ctxt");
  }
  d.fill("ctxt", leaf("lex-lion"));
  EXPECT_EQ(first_empty_slot(d, cat()), "proc/topic");
}

TEST(Compile, EmptyListFillIsIncomplete) {
  Diagram d{"each-of", {}};
  d.fill_list("items", {leaf("lex-chat"), Diagram{"intensity", {}}});
  EXPECT_EQ(first_empty_slot(d, cat()), "items[1]/sig");
  d.fill_list("items", {});
  EXPECT_EQ(error_of([&] { compile(d, cat()); }), ErrorCode::kIncompleteDiagram);
}

TEST(Compile, UnknownLayoutAndFillMismatch) {
  EXPECT_EQ(error_of([&] { compile(leaf("nope"), cat()); }), ErrorCode::kUnknownLayout);
  Diagram d{"each-of", {}};
  d.fill("items", leaf("lex-chat"));
  EXPECT_EQ(error_of([&] { compile(d, cat()); }), ErrorCode::kFillMismatch);
}

TEST(Compile, OutputValidates) {
  std::mt19937 rng(42);
  testing::DiagramGenerator gen(cat());
  for (int i = 0; i < 100; ++i) {
    const Expr e = compile(gen(rng, 5), cat());
    ASSERT_TRUE(validate_expr(e, ws().registry).ok()) << print_azee(e);
  }
}

TEST(Synthesize, Fig17RoundTrip) {
  for (const char* name : {"left", "middle", "right"}) {
    const std::string text = testing::testdata(std::string("golden/chat-") + name + ".azee");
    const Diagram d = synthesize(parse_azee(text), cat(), ws().registry);
    EXPECT_EQ(print_azee(compile(d, cat())), text);
  }
  const Diagram right = synthesize(parse_azee(testing::testdata("golden/chat-right.azee")),
                                   cat(), ws().registry);
  EXPECT_EQ(right, diagram_file("chat-right.diagram.json"));
}

TEST(Synthesize, PrefersLightningOverPerRuleLayouts) {
  const Expr e = parse_azee(
      ":each-of\n  'items\n  list\n    :about-point\n      'pt\n      ^Lssp\n      'locsig\n"
      "      :lion\n    :about-point\n      'pt\n      ^Rssp\n      'locsig\n      :méchant\n");
  const Diagram d = synthesize(e, cat(), ws().registry);
  Diagram expected{"lightning", {}};
  expected.fill("A", leaf("lex-lion")).fill("B", leaf("lex-mechant"));
  EXPECT_EQ(d, expected);
}

TEST(Synthesize, SwappedConstantsFallBackToPerRule) {
  const Expr e = parse_azee(
      ":each-of\n  'items\n  list\n    :about-point\n      'pt\n      ^Rssp\n      'locsig\n"
      "      :lion\n    :about-point\n      'pt\n      ^Lssp\n      'locsig\n      :méchant\n");
  const Diagram d = synthesize(e, cat(), ws().registry);
  EXPECT_EQ(d.layout, "each-of");
  EXPECT_EQ(d.fills.at("items").diagrams.size(), 2u);
  EXPECT_EQ(d.fills.at("items").diagrams[0].layout, "about-point");
  EXPECT_EQ(compile(d, cat()), e);
}

TEST(Synthesize, AtomicLeaf) {
  EXPECT_EQ(synthesize(Expr::app("gentil"), cat(), ws().registry), leaf("lex-gentil"));
  EXPECT_EQ(synthesize(Expr::constant("Lssp"), cat(), ws().registry), leaf("point-Lssp"));
}

TEST(Synthesize, VariantPolicy) {
  const Expr e = parse_azee(testing::testdata("golden/chat-left.azee"));
  VariantPolicy policy{{{"info-about", "equals-vertical"}}};
  const Diagram d = synthesize(e, cat(), ws().registry, policy);
  EXPECT_EQ(d.layout, "equals-vertical");
  EXPECT_EQ(compile(d, cat()), e);

  policy.choices["info-about"] = "context-bar";
  EXPECT_EQ(error_of([&] { synthesize(e, cat(), ws().registry, policy); }),
            ErrorCode::kUnknownLayout);
  EXPECT_EQ(error_of([&] {
              synthesize(e, cat(), ws().registry, VariantPolicy{{{"nope", "equals"}}});
            }),
            ErrorCode::kUnknownTemplate);
}

TEST(Synthesize, RejectsInvalidExpressions) {
  EXPECT_EQ(error_of([&] { synthesize(Expr::app("unknown-rule"), cat(), ws().registry); }),
            ErrorCode::kUnknownRule);
  EXPECT_EQ(error_of([&] {
              synthesize(Expr::app("info-about", {{"topic", Expr::app("chat")}}), cat(),
                         ws().registry);
            }),
            ErrorCode::kInvalidExpression);
}

TEST(Synthesize, NoAntecedentWithoutLayout) {
  json doc = testing::load_json(testing::data_dir() / "catalog.json");
  auto& layouts = doc["layouts"];
  for (auto it = layouts.begin(); it != layouts.end(); ++it)
    if ((*it)["id"] == "category") {
      layouts.erase(it);
      break;
    }
  const Catalog c = load_catalog(doc, cat().assets());
  const Expr e = Expr::app("category", {{"cat", Expr::app("chat")}, {"elt", Expr::app("lion")}});
  try {
    synthesize(e, c, ws().registry);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNoAntecedent);
    EXPECT_NE(std::string(err.what()).find("category"), std::string::npos);
  }
}

TEST(Synthesize, RandomRoundTrip) {
  std::mt19937 rng(99);
  testing::ExprGenerator gen(ws().registry);
  for (int i = 0; i < 200; ++i) {
    const Expr e = gen(rng, 6);
    ASSERT_EQ(compile(synthesize(e, cat(), ws().registry), cat()), e) << print_azee(e);
  }
}

TEST(MatchTemplate, BindsSlotsAndSplices) {
  const Expr t = parse_template(":each-of\n  'items\n  list\n    :gentil\n    [rest...]\n");
  const Expr e = Expr::app(
      "each-of", {{"items", Expr::list({Expr::app("gentil"), Expr::app("chat"), Expr::app("lion")})}});
  const auto b = match_template(t, e);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->spliced.at("rest").size(), 2u);
  EXPECT_EQ(instantiate(t, *b), e);
  const Expr short_list =
      Expr::app("each-of", {{"items", Expr::list({Expr::app("gentil")})}});
  EXPECT_FALSE(match_template(t, short_list));
  EXPECT_FALSE(match_template(Expr::slot("x"), Expr::list({Expr::app("gentil")})));
}

TEST(Coverage, ShippedCatalogComplete) {
  const CoverageReport r = coverage_check(ws().registry, cat());
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(r.rules.size(), ws().registry.rules().size() + ws().registry.constants().size());
  EXPECT_EQ(r.variants.size(), cat().templates().size());
  EXPECT_EQ(r.to_json()["ok"], true);
}

TEST(Coverage, RemovingCategoryFailsIt) {
  json doc = testing::load_json(testing::data_dir() / "catalog.json");
  auto& layouts = doc["layouts"];
  for (auto it = layouts.begin(); it != layouts.end(); ++it)
    if ((*it)["id"] == "category") {
      layouts.erase(it);
      break;
    }
  const CoverageReport r = coverage_check(ws().registry, load_catalog(doc, cat().assets()));
  EXPECT_FALSE(r.ok());
  for (const auto& entry : r.rules) EXPECT_EQ(entry.ok, entry.subject != "category") << entry.subject;
}

TEST(Coverage, MutatedVariantFails) {
  json doc = testing::load_json(testing::data_dir() / "catalog.json");
  for (auto& l : doc["layouts"])
    if (l["id"] == "context-bar-vertical")
      l["template"] = ":context\n  'ctxt\n  [proc]\n  'proc\n  [ctxt]\n";
  const CoverageReport r = coverage_check(ws().registry, load_catalog(doc, cat().assets()));
  EXPECT_FALSE(r.ok());
  for (const auto& entry : r.variants) EXPECT_EQ(entry.ok, entry.subject != "context") << entry.subject;
  for (const auto& entry : r.rules) EXPECT_TRUE(entry.ok) << entry.subject;
}

}  // namespace
}  // namespace azvd
