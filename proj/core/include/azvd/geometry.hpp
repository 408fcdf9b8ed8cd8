#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace azvd {

/// Coordinates are in layout units with the y axis pointing down.
struct Point {
  double x = 0;
  double y = 0;

  bool operator==(const Point&) const = default;
};

struct Box {
  double x = 0;
  double y = 0;
  double width = 0;
  double height = 0;

  double right() const { return x + width; }
  double bottom() const { return y + height; }
  bool empty() const { return width <= 0 || height <= 0; }

  bool operator==(const Box&) const = default;
};

/// Corners, edge midpoints and center of a bounding box.
enum class RemarkablePoint { kNW, kN, kNE, kW, kC, kE, kSW, kS, kSE };

inline constexpr std::array<RemarkablePoint, 9> kAllRemarkablePoints = {
    RemarkablePoint::kNW, RemarkablePoint::kN, RemarkablePoint::kNE,
    RemarkablePoint::kW,  RemarkablePoint::kC, RemarkablePoint::kE,
    RemarkablePoint::kSW, RemarkablePoint::kS, RemarkablePoint::kSE};

Point remarkable_point(const Box& box, RemarkablePoint p);
std::optional<RemarkablePoint> parse_remarkable_point(std::string_view name);
std::string_view to_string(RemarkablePoint p);

/// Uniform scale followed by translation: p' = scale * p + (tx, ty).
/// Rotation is reserved and always zero.
struct Transform {
  double scale = 1;
  double tx = 0;
  double ty = 0;

  Point apply(Point p) const { return {scale * p.x + tx, scale * p.y + ty}; }
  Box apply(const Box& b) const {
    return {scale * b.x + tx, scale * b.y + ty, scale * b.width, scale * b.height};
  }
  /// `this` applied after `inner`.
  Transform then(const Transform& inner) const {
    return {scale * inner.scale, scale * inner.tx + tx, scale * inner.ty + ty};
  }
  bool is_identity() const { return scale == 1 && tx == 0 && ty == 0; }

  bool operator==(const Transform&) const = default;
};

/// Smallest box containing both; an unset accumulator adopts `b`.
Box unite(const std::optional<Box>& acc, const Box& b);

/// Scene coordinates live on a 1e-6 grid so that the fixed 6-decimal SVG
/// output reproduces them exactly.
double snap(double v);

}  // namespace azvd
