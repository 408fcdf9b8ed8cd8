#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "azvd/catalog.hpp"
#include "azvd/diagram.hpp"
#include "azvd/geometry.hpp"

namespace azvd {

struct ElementPlacement {
  Transform transform;  // element-local -> layout coordinates
  Box box;              // the element's box in layout coordinates
};

struct Placement {
  std::map<std::string, ElementPlacement> elements;  // by element id
  Box bounds;
};

/// Places every element of `spec` in document order: scale first, then
/// translate so the aligned remarkable points coincide. `child_boxes`
/// holds the content box of filled slots (keyed by slot id); slots without
/// an entry use their nominal box. The anchor's top-left sits at the origin.
Placement resolve_layout(const LayoutSpec& spec, const std::map<std::string, Box>& child_boxes);

struct IconPrimitive {
  std::string asset;
};
struct TextPrimitive {
  std::string content;
  double size = 0;
};
struct StrokePrimitive {
  std::vector<std::vector<Point>> paths;
  bool dashed = false;
};
/// Stand-in for an empty slot: dashed box labelled with the slot id.
struct PlaceholderPrimitive {
  std::string slot;
};

struct Primitive {
  std::variant<IconPrimitive, TextPrimitive, StrokePrimitive, PlaceholderPrimitive> payload;
  Box box;  // in the owning group's coordinates
};

/// Where an element of a layout instance ended up, in the coordinates of
/// the layout group.
struct PlacedElement {
  std::string id;
  Box box;
};

struct SceneNode {
  enum class Role { kLayout, kElement, kList, kListItem, kPrimitive };

  Role role = Role::kLayout;
  std::string id;  // layout id, element id, or empty
  Transform transform;
  std::vector<SceneNode> children;
  std::optional<Primitive> primitive;   // kPrimitive only
  std::vector<PlacedElement> placed;    // kLayout only
};

struct Scene {
  SceneNode root;
  Box bounds;  // top-left at the origin
  std::vector<std::string> warnings;
};

/// Recursively lays out `d`: children first, their boxes fed to
/// resolve_layout, contents contain-fitted into slot boxes. Empty slots
/// become placeholders. Throws Error{kUnknownLayout}, {kUnknownSlot},
/// {kFillMismatch}.
Scene build_scene(const Diagram& d, const Catalog& cat);

/// Tight union of the transformed primitive boxes; (0,0,0,0) if none.
Box bounding_box(const Scene& s);

struct WorldPrimitive {
  const Primitive* primitive;
  Transform to_world;
  Box world_box;
};
std::vector<WorldPrimitive> world_primitives(const Scene& s);

}  // namespace azvd
