#include "azvd/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace azvd {

Point remarkable_point(const Box& box, RemarkablePoint p) {
  const double left = box.x, cx = box.x + box.width / 2, right = box.x + box.width;
  const double top = box.y, cy = box.y + box.height / 2, bottom = box.y + box.height;
  switch (p) {
    case RemarkablePoint::kNW: return {left, top};
    case RemarkablePoint::kN: return {cx, top};
    case RemarkablePoint::kNE: return {right, top};
    case RemarkablePoint::kW: return {left, cy};
    case RemarkablePoint::kC: return {cx, cy};
    case RemarkablePoint::kE: return {right, cy};
    case RemarkablePoint::kSW: return {left, bottom};
    case RemarkablePoint::kS: return {cx, bottom};
    case RemarkablePoint::kSE: return {right, bottom};
  }
  return {cx, cy};
}

std::string_view to_string(RemarkablePoint p) {
  switch (p) {
    case RemarkablePoint::kNW: return "NW";
    case RemarkablePoint::kN: return "N";
    case RemarkablePoint::kNE: return "NE";
    case RemarkablePoint::kW: return "W";
    case RemarkablePoint::kC: return "C";
    case RemarkablePoint::kE: return "E";
    case RemarkablePoint::kSW: return "SW";
    case RemarkablePoint::kS: return "S";
    case RemarkablePoint::kSE: return "SE";
  }
  return "C";
}

std::optional<RemarkablePoint> parse_remarkable_point(std::string_view name) {
  for (auto p : kAllRemarkablePoints)
    if (to_string(p) == name) return p;
  return std::nullopt;
}

Box unite(const std::optional<Box>& acc, const Box& b) {
  if (!acc) return b;
  const double left = std::min(acc->x, b.x);
  const double top = std::min(acc->y, b.y);
  const double right = std::max(acc->right(), b.right());
  const double bottom = std::max(acc->bottom(), b.bottom());
  return {left, top, right - left, bottom - top};
}

double snap(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0 ? 0.0 : r;  // no negative zero
}

}  // namespace azvd
