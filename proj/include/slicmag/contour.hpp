#pragma once

#include <optional>

#include "slicmag/image.hpp"
#include "slicmag/slic.hpp"

namespace slicmag {

/// Closed outer boundary of one connected segment region.
struct Contour {
    std::vector<PixelCoord> points;  ///< ordered trace, last implicitly connects to first
    int segment_id = 0;
};

/// Outer boundaries of every 4-connected component carrying segment_id,
/// traced with Moore border following. Absent id -> empty list.
std::vector<Contour> extract_contours(const LabelMap& lm, int segment_id);

/// Scale coordinates by `factor` (round-half-up, clamped), collapsing duplicate
/// consecutive points. Returns nullopt when fewer than 3 points survive.
std::optional<Contour> scale_contour(const Contour& c, double factor, int max_w = -1,
                                     int max_h = -1);

/// Even-odd scanline fill. Without `source`: 255 inside, 0 outside.
/// With `source`: inside pixels copy source, outside 0.
Plane fill_polygon(const Contour& c, int w, int h, const Plane* source = nullptr);

}  // namespace slicmag
