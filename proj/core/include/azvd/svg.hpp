#pragma once

#include <string>

#include "azvd/catalog.hpp"
#include "azvd/layout.hpp"

namespace azvd {

/// Margin added around the scene bounds in the viewBox.
inline constexpr double kSvgMargin = 10;

/// Serializes a scene as a self-contained SVG 1.1 document. Groups become
/// `<g transform="translate(tx,ty) scale(s)">`, icons are inlined as nested
/// `<svg>` elements, placeholders as dashed rects labelled with the slot id.
/// Numbers use 6 fixed decimals. Throws Error{kMissingAsset}.
std::string emit_svg(const Scene& scene, const Catalog& cat);

/// Fixed 6-decimal rendering used for every numeric attribute.
std::string format_number(double v);

}  // namespace azvd
