#pragma once

#include <string>
#include <vector>

#include "hedgehog/geometry.hpp"

namespace hedgehog {

struct SvgCurve {
  std::vector<Point> points;
  bool closed = false;
  std::string color;  // empty selects from the default palette
};

// SVG 1.1 document with one path element per curve and one circle marker
// per cusp point. The viewport fits the union bounding box with a 5%
// margin; the y axis is flipped to the usual mathematical orientation.
std::string svg_document(const std::vector<SvgCurve>& curves,
                         const std::vector<Point>& cusp_markers);

}  // namespace hedgehog
