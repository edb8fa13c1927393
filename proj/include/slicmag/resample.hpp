#pragma once

#include "slicmag/image.hpp"

namespace slicmag {

enum class InterpMethod { Nearest, Bilinear, Bicubic };

std::string to_string(InterpMethod m);

/// Parse "nearest" | "bilinear" | "bicubic" (case-insensitive).
InterpMethod parse_interp(const std::string& name);

/// Resize with pixel-center alignment: x_src = (x_out + 0.5) * w / out_w - 0.5.
/// Out-of-range source reads are edge-clamped; results rounded and clamped to [0,255].
Plane resize_plane(const Plane& p, int out_w, int out_h, InterpMethod m);

/// Per-plane resize; color space preserved.
RasterImage resize_image(const RasterImage& img, int out_w, int out_h, InterpMethod m);

}  // namespace slicmag
