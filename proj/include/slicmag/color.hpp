#pragma once

#include "slicmag/image.hpp"

namespace slicmag {

/// Full-range BT.601 conversion, rounded half-away-from-zero and clamped to [0,255].
RasterImage rgb_to_ycbcr(const RasterImage& img);

/// Inverse full-range BT.601.
RasterImage ycbcr_to_rgb(const RasterImage& img);

/// Round half away from zero, then clamp to [0,255].
uint8_t quantize_u8(double v);

}  // namespace slicmag
