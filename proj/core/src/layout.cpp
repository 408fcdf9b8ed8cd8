#include "azvd/layout.hpp"

#include <algorithm>

#include "azvd/error.hpp"

namespace azvd {

namespace {

double dimension(const Box& b, Dimension d) { return d == Dimension::kWidth ? b.width : b.height; }

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }

double element_scale(const LayoutSpec& spec, const ElementSpec& e, const Box& natural,
                     const Placement& placed) {
  const ScaleConstraint* sc = spec.scale_for(e.id);
  if (!sc) return 1;
  double s = 1;
  if (const auto* fixed = std::get_if<FixedNominal>(&sc->mode)) {
    const double larger = std::max(natural.width, natural.height);
    if (larger > 0) s = fixed->size / larger;
  } else {
    const auto& rel = std::get<RelativeTo>(sc->mode);
    auto it = placed.elements.find(rel.target);
    const double own = dimension(natural, rel.dimension);
    if (it != placed.elements.end() && own > 0) {
      const double target = dimension(it->second.box, rel.dimension);
      if (target > 0) s = rel.factor * target / own;
    }
  }
  const double snapped = snap(s);
  return snapped > 0 ? snapped : s;
}

}  // namespace

Placement resolve_layout(const LayoutSpec& spec, const std::map<std::string, Box>& child_boxes) {
  Placement out;
  std::optional<Box> bounds;
  for (std::size_t i = 0; i < spec.elements.size(); ++i) {
    const ElementSpec& e = spec.elements[i];
    Box natural = natural_box(e);
    if (auto slot = e.slot_id()) {
      if (auto it = child_boxes.find(*slot); it != child_boxes.end()) natural = it->second;
    }

    const double s = element_scale(spec, e, natural, out);
    Transform t{s, snap(-s * natural.x), snap(-s * natural.y)};
    const AlignConstraint* align = i == 0 ? nullptr : spec.align_for(e.id);
    if (align) {
      if (auto target = out.elements.find(align->target); target != out.elements.end()) {
        const Point goal = remarkable_point(target->second.box, align->target_point) + align->offset;
        const Point local = remarkable_point(natural, align->subject_point);
        t.tx = snap(goal.x - s * local.x);
        t.ty = snap(goal.y - s * local.y);
      }
    }
    const Box box = t.apply(natural);
    out.elements[e.id] = ElementPlacement{t, box};
    bounds = unite(bounds, box);
  }
  out.bounds = bounds.value_or(Box{});
  return out;
}

namespace {

struct Built {
  SceneNode node;
  Box bounds;
};

bool degenerate(const Box& b) { return b.width <= 0 || b.height <= 0; }

Box snap_box(const Box& b) { return {snap(b.x), snap(b.y), snap(b.width), snap(b.height)}; }

SceneNode primitive_node(Primitive p) {
  SceneNode n;
  n.role = SceneNode::Role::kPrimitive;
  n.primitive = std::move(p);
  return n;
}

SceneNode placeholder(const std::string& slot, const Box& nominal) {
  return primitive_node(Primitive{PlaceholderPrimitive{slot}, snap_box(nominal)});
}

class SceneBuilder {
 public:
  explicit SceneBuilder(const Catalog& cat) : cat_(cat) {}

  Built build(const Diagram& d, const std::string& path) {
    const LayoutSpec& layout = cat_.layout(d.layout);

    // Content of filled slots, built bottom-up.
    std::map<std::string, Box> child_boxes;
    std::map<std::string, SceneNode> contents;
    std::map<std::string, Box> content_bounds;
    for (const auto& e : layout.elements) {
      const auto slot = e.slot_id();
      if (!slot) continue;
      auto it = d.fills.find(*slot);
      if (it == d.fills.end() || it->second.diagrams.empty()) continue;
      const Fill& fill = it->second;
      const std::string here = path.empty() ? *slot : path + "/" + *slot;

      Built content;
      if (fill.kind == Fill::Kind::kChild) {
        content = build(fill.diagrams.front(), here);
      } else {
        content = arrange(fill, std::get<SlotListElement>(e.kind), here);
      }
      if (degenerate(content.bounds))
        warnings_.push_back("degenerate content in slot '" + here + "'");
      else
        child_boxes[*slot] = content.bounds;
      content_bounds[*slot] = content.bounds;
      contents.emplace(*slot, std::move(content.node));
    }

    const Placement placement = resolve_layout(layout, child_boxes);
    const double dx = snap(-placement.bounds.x);
    const double dy = snap(-placement.bounds.y);

    Built out;
    out.node.role = SceneNode::Role::kLayout;
    out.node.id = layout.id;
    std::optional<Box> bounds;
    for (const auto& e : layout.elements) {
      const ElementPlacement& ep = placement.elements.at(e.id);
      Transform t{ep.transform.scale, snap(ep.transform.tx + dx), snap(ep.transform.ty + dy)};
      const Box box = t.apply(natural_or_child(e, child_boxes));

      SceneNode el;
      el.role = SceneNode::Role::kElement;
      el.id = e.id;
      el.transform = t;
      if (const auto* icon = std::get_if<IconElement>(&e.kind)) {
        el.children.push_back(
            primitive_node(Primitive{IconPrimitive{icon->asset}, snap_box(natural_box(e))}));
      } else if (const auto* text = std::get_if<TextElement>(&e.kind)) {
        el.children.push_back(primitive_node(
            Primitive{TextPrimitive{text->content, text->size}, snap_box(natural_box(e))}));
      } else if (const auto* stroke = std::get_if<StrokeElement>(&e.kind)) {
        el.children.push_back(primitive_node(
            Primitive{StrokePrimitive{stroke->paths, stroke->dashed}, snap_box(natural_box(e))}));
      } else {
        const std::string slot = *e.slot_id();
        auto content = contents.find(slot);
        if (content == contents.end()) {
          el.children.push_back(placeholder(slot, natural_box(e)));
        } else {
          const Box& cb = content_bounds.at(slot);
          if (degenerate(cb)) {
            // Unscaled, centered on the slot box.
            const Point c = remarkable_point(box, RemarkablePoint::kC);
            el.transform = Transform{1, snap(c.x - cb.width / 2), snap(c.y - cb.height / 2)};
          }
          el.children.push_back(std::move(content->second));
        }
      }
      out.node.placed.push_back(PlacedElement{e.id, box});
      out.node.children.push_back(std::move(el));
      bounds = unite(bounds, box);
    }
    const Box b = bounds.value_or(Box{});
    out.bounds = Box{0, 0, snap(b.right()), snap(b.bottom())};
    return out;
  }

  std::vector<std::string> take_warnings() { return std::move(warnings_); }

 private:
  static Box natural_or_child(const ElementSpec& e, const std::map<std::string, Box>& child_boxes) {
    if (auto slot = e.slot_id()) {
      if (auto it = child_boxes.find(*slot); it != child_boxes.end()) return it->second;
    }
    return natural_box(e);
  }

  // Lays list items along the list direction, centered on the cross axis.
  Built arrange(const Fill& fill, const SlotListElement& spec, const std::string& path) {
    std::vector<Built> items;
    for (std::size_t i = 0; i < fill.diagrams.size(); ++i)
      items.push_back(build(fill.diagrams[i], path + "[" + std::to_string(i) + "]"));

    const bool horizontal = spec.direction == Direction::kHorizontal;
    double cross = 0;
    for (const auto& it : items)
      cross = std::max(cross, horizontal ? it.bounds.height : it.bounds.width);

    Built out;
    out.node.role = SceneNode::Role::kList;
    double cursor = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const Box& b = items[i].bounds;
      if (i > 0) cursor += spec.spacing;
      SceneNode item;
      item.role = SceneNode::Role::kListItem;
      item.id = std::to_string(i);
      item.transform = horizontal
                           ? Transform{1, snap(cursor), snap((cross - b.height) / 2)}
                           : Transform{1, snap((cross - b.width) / 2), snap(cursor)};
      item.children.push_back(std::move(items[i].node));
      out.node.children.push_back(std::move(item));
      cursor += horizontal ? b.width : b.height;
    }
    out.bounds = horizontal ? Box{0, 0, snap(cursor), snap(cross)}
                            : Box{0, 0, snap(cross), snap(cursor)};
    return out;
  }

  const Catalog& cat_;
  std::vector<std::string> warnings_;
};

void collect(const SceneNode& node, const Transform& parent, std::vector<WorldPrimitive>& out) {
  const Transform here = parent.then(node.transform);
  if (node.primitive) out.push_back({&*node.primitive, here, here.apply(node.primitive->box)});
  for (const auto& c : node.children) collect(c, here, out);
}

}  // namespace

Scene build_scene(const Diagram& d, const Catalog& cat) {
  check_diagram(d, cat);
  SceneBuilder builder(cat);
  Built built = builder.build(d, "");
  Scene scene;
  scene.root = std::move(built.node);
  scene.bounds = built.bounds;
  scene.warnings = builder.take_warnings();
  return scene;
}

std::vector<WorldPrimitive> world_primitives(const Scene& s) {
  std::vector<WorldPrimitive> out;
  collect(s.root, Transform{}, out);
  return out;
}

Box bounding_box(const Scene& s) {
  std::optional<Box> acc;
  for (const auto& wp : world_primitives(s)) acc = unite(acc, wp.world_box);
  return acc.value_or(Box{});
}

}  // namespace azvd
