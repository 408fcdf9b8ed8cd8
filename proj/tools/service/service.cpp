#include "service.hpp"

#include "azvd/compiler.hpp"
#include "azvd/diagram.hpp"
#include "azvd/layout.hpp"
#include "azvd/svg.hpp"

namespace azvd::service {

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSchema:
      return 400;
    case ErrorCode::kUnknownLayout:
    case ErrorCode::kUnknownSlot:
    case ErrorCode::kUnknownTemplate:
      return 404;
    case ErrorCode::kSyntax:
    case ErrorCode::kUnknownRule:
    case ErrorCode::kInvalidExpression:
    case ErrorCode::kFillMismatch:
    case ErrorCode::kIncompleteDiagram:
    case ErrorCode::kNoAntecedent:
      return 422;
    case ErrorCode::kDuplicateRule:
    case ErrorCode::kMissingAsset:
    case ErrorCode::kDanglingReference:
    case ErrorCode::kIo:
      return 500;
  }
  return 500;
}

nlohmann::json api_error(const Error& e) {
  nlohmann::json j{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (!e.location().empty()) j["location"] = e.location();
  return j;
}

namespace {

Response json_response(int status, const nlohmann::json& j) {
  return Response{status, "application/json", j.dump() + "\n"};
}

Response error_response(const Error& e) { return json_response(status_for(e.code()), api_error(e)); }

nlohmann::json parse_body(std::string_view body) {
  auto j = nlohmann::json::parse(body.begin(), body.end(), nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::kSchema, "request body is not valid JSON");
  return j;
}

template <class F>
Response guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return error_response(e);
  }
}

nlohmann::json slot_json(const ElementSpec& e) {
  return {{"id", *e.slot_id()}, {"kind", e.is_slot_list() ? "slot-list" : "slot"}};
}

}  // namespace

Response Service::get_catalog() const {
  const Catalog& cat = ws_.catalog;
  nlohmann::json templates = nlohmann::json::array();
  for (const auto& entry : cat.templates()) {
    nlohmann::json variants = nlohmann::json::array();
    for (const LayoutSpec& l : variants_for(cat, entry.id)) {
      nlohmann::json slots = nlohmann::json::array();
      nlohmann::json assets = nlohmann::json::array();
      for (const auto& e : l.elements) {
        if (e.slot_id()) slots.push_back(slot_json(e));
        if (const auto* icon = std::get_if<IconElement>(&e.kind))
          assets.push_back("/assets/" + icon->asset);
      }
      variants.push_back({{"layout", l.id}, {"variant", l.variant}, {"slots", slots},
                          {"assets", assets}});
    }
    templates.push_back({{"id", entry.id},
                         {"template", print_azee(entry.templ)},
                         {"default", entry.default_layout},
                         {"variants", variants}});
  }
  nlohmann::json assets = nlohmann::json::object();
  for (const auto& [id, asset] : cat.assets()) assets[id] = "/assets/" + id;
  return json_response(200, {{"templates", templates}, {"assets", assets}});
}

Response Service::get_asset(std::string_view id) const {
  const Asset* asset = ws_.catalog.find_asset(id);
  if (!asset) {
    const std::string name(id);
    return json_response(404, api_error(Error(ErrorCode::kMissingAsset,
                                              "unknown asset '" + name + "'", name)));
  }
  const Box& vb = asset->view_box;
  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                    "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
                    format_number(vb.x) + ' ' + format_number(vb.y) + ' ' +
                    format_number(vb.width) + ' ' + format_number(vb.height) + "\" width=\"" +
                    format_number(asset->width) + "\" height=\"" + format_number(asset->height) +
                    "\">\n" + asset->content + (asset->content.empty() ? "" : "\n") + "</svg>\n";
  return Response{200, "image/svg+xml", std::move(svg)};
}

Response Service::post_render(std::string_view body) const {
  return guarded([&] {
    const Diagram d = load_diagram(parse_body(body), ws_.catalog);
    return Response{200, "image/svg+xml", emit_svg(build_scene(d, ws_.catalog), ws_.catalog)};
  });
}

Response Service::post_compile(std::string_view body) const {
  return guarded([&] {
    const Diagram d = load_diagram(parse_body(body), ws_.catalog);
    return json_response(200, {{"azee", print_azee(compile(d, ws_.catalog))}});
  });
}

Response Service::post_synthesize(std::string_view body) const {
  return guarded([&] {
    const auto j = parse_body(body);
    if (!j.is_object() || !j.contains("azee") || !j["azee"].is_string())
      throw Error(ErrorCode::kSchema, "expected { \"azee\": string }");
    VariantPolicy policy;
    if (j.contains("policy")) {
      const auto& p = j["policy"];
      if (!p.is_object()) throw Error(ErrorCode::kSchema, "'policy' must be an object");
      for (const auto& [tid, lid] : p.items()) {
        if (!lid.is_string()) throw Error(ErrorCode::kSchema, "policy values must be layout ids", tid);
        policy.choices[tid] = lid.get<std::string>();
      }
    }
    const Expr e = parse_azee(j["azee"].get<std::string>());
    const Diagram d = synthesize(e, ws_.catalog, ws_.registry, policy);
    return Response{200, "application/json", dump_diagram(d)};
  });
}

Response Service::handle(std::string_view method, std::string_view path,
                         std::string_view body) const {
  constexpr std::string_view kAssets = "/assets/";
  const bool get = method == "GET";
  const bool post = method == "POST";
  if (path == "/catalog") return get ? get_catalog() : Response{405, "text/plain", ""};
  if (path.substr(0, kAssets.size()) == kAssets)
    return get ? get_asset(path.substr(kAssets.size())) : Response{405, "text/plain", ""};
  if (path == "/render" || path == "/compile" || path == "/synthesize") {
    if (!post) return Response{405, "text/plain", ""};
    if (path == "/render") return post_render(body);
    if (path == "/compile") return post_compile(body);
    return post_synthesize(body);
  }
  return Response{404, "text/plain", ""};
}

}  // namespace azvd::service
