#include "azvd/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "azvd/error.hpp"

namespace azvd {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

namespace {

constexpr double kStrokeWidth = 2;
constexpr double kBaselineRatio = 0.8;  // baseline offset from the box top, per font size
constexpr const char* kDash = "6,4";

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string attr(const char* name, double v) {
  return std::string(" ") + name + "=\"" + format_number(v) + "\"";
}

class SvgWriter {
 public:
  explicit SvgWriter(const Catalog& cat) : cat_(cat) {}

  std::string run(const Scene& scene) {
    const double w = scene.bounds.width + 2 * kSvgMargin;
    const double h = scene.bounds.height + 2 * kSvgMargin;
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"" << attr("width", w)
         << attr("height", h) << " viewBox=\"" << format_number(scene.bounds.x - kSvgMargin) << ' '
         << format_number(scene.bounds.y - kSvgMargin) << ' ' << format_number(w) << ' '
         << format_number(h) << "\">\n";
    out_ << "  <g class=\"azvd\" fill=\"none\" stroke=\"#000000\""
         << attr("stroke-width", kStrokeWidth)
         << " stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";
    node(scene.root, 2);
    out_ << "  </g>\n";
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  void indent(int depth) { out_ << std::string(static_cast<std::size_t>(depth) * 2, ' '); }

  static std::string class_for(const SceneNode& n) {
    switch (n.role) {
      case SceneNode::Role::kLayout: return "layout-" + n.id;
      case SceneNode::Role::kElement: return "element-" + n.id;
      case SceneNode::Role::kList: return "list";
      case SceneNode::Role::kListItem: return "item";
      case SceneNode::Role::kPrimitive: return "primitive";
    }
    return "";
  }

  void node(const SceneNode& n, int depth) {
    if (n.primitive) {
      primitive(*n.primitive, depth);
      return;
    }
    indent(depth);
    out_ << "<g class=\"" << escape(class_for(n)) << '"';
    if (!n.transform.is_identity())
      out_ << " transform=\"translate(" << format_number(n.transform.tx) << ','
           << format_number(n.transform.ty) << ") scale(" << format_number(n.transform.scale)
           << ")\"";
    if (n.children.empty()) {
      out_ << "/>\n";
      return;
    }
    out_ << ">\n";
    for (const auto& c : n.children) node(c, depth + 1);
    indent(depth);
    out_ << "</g>\n";
  }

  void text(const std::string& content, const Box& box, double size, int depth) {
    indent(depth);
    out_ << "<text" << attr("x", box.x) << attr("y", box.y + kBaselineRatio * size)
         << attr("font-size", size) << attr("textLength", box.width)
         << " lengthAdjust=\"spacingAndGlyphs\" font-family=\"sans-serif\" fill=\"#000000\""
            " stroke=\"none\">"
         << escape(content) << "</text>\n";
  }

  void primitive(const Primitive& p, int depth) {
    const Box& b = p.box;
    if (const auto* icon = std::get_if<IconPrimitive>(&p.payload)) {
      const Asset* asset = cat_.find_asset(icon->asset);
      if (!asset)
        throw Error(ErrorCode::kMissingAsset, "missing asset '" + icon->asset + "'", icon->asset);
      const Box& vb = asset->view_box;
      indent(depth);
      out_ << "<svg class=\"icon-" << escape(icon->asset) << '"' << attr("x", b.x)
           << attr("y", b.y) << attr("width", b.width) << attr("height", b.height)
           << " viewBox=\"" << format_number(vb.x) << ' ' << format_number(vb.y) << ' '
           << format_number(vb.width) << ' ' << format_number(vb.height)
           << "\" preserveAspectRatio=\"none\" overflow=\"visible\">\n";
      std::istringstream lines(asset->content);
      std::string line;
      while (std::getline(lines, line)) {
        indent(depth + 1);
        out_ << line << '\n';
      }
      indent(depth);
      out_ << "</svg>\n";
    } else if (const auto* t = std::get_if<TextPrimitive>(&p.payload)) {
      text(t->content, b, t->size, depth);
    } else if (const auto* s = std::get_if<StrokePrimitive>(&p.payload)) {
      for (const auto& path : s->paths) {
        indent(depth);
        out_ << "<polyline points=\"";
        for (std::size_t i = 0; i < path.size(); ++i) {
          if (i) out_ << ' ';
          out_ << format_number(path[i].x) << ',' << format_number(path[i].y);
        }
        out_ << '"';
        if (s->dashed) out_ << " stroke-dasharray=\"" << kDash << '"';
        out_ << "/>\n";
      }
    } else if (const auto* ph = std::get_if<PlaceholderPrimitive>(&p.payload)) {
      indent(depth);
      out_ << "<g class=\"placeholder\">\n";
      indent(depth + 1);
      out_ << "<rect" << attr("x", b.x) << attr("y", b.y) << attr("width", b.width)
           << attr("height", b.height) << " stroke-dasharray=\"" << kDash << "\"/>\n";
      const double size = std::min(0.3 * b.height,
                                   b.width / std::max(1.0, estimate_text_width(ph->slot, 1.0) + 0.5));
      const double tw = estimate_text_width(ph->slot, size);
      const Box label{b.x + (b.width - tw) / 2, b.y + (b.height - size) / 2, tw, size};
      text(ph->slot, label, size, depth + 1);
      indent(depth);
      out_ << "</g>\n";
    }
  }

  const Catalog& cat_;
  std::ostringstream out_;
};

}  // namespace

std::string emit_svg(const Scene& scene, const Catalog& cat) { return SvgWriter(cat).run(scene); }

}  // namespace azvd
