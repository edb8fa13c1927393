#pragma once

#include <optional>

#include "slicmag/contour.hpp"
#include "slicmag/image.hpp"
#include "slicmag/resample.hpp"
#include "slicmag/slic.hpp"

namespace slicmag {

struct PipelineConfig {
    int scale = 4;
    InterpMethod base_interp = InterpMethod::Bicubic;
    SlicParams slic;
    int window = 5;          ///< odd window size for conditional dilation
    int dilation_passes = 1;
    int pad_margin = 2;

    void validate() const;
};

/// Stage intermediates retained when tracing is requested; masks and channel
/// images are captured for the first segment's Y channel.
struct PipelineTrace {
    std::optional<RasterImage> guide;          ///< plain-interpolated HR image
    std::optional<RasterImage> label_overlay;  ///< segment boundaries on the guide
    std::optional<Plane> mask_a;               ///< binary segment mask at LR
    std::optional<Plane> mask_b;               ///< Y-channel mask at LR
    std::optional<Plane> dilated;              ///< mask_b after conditional dilation
    std::optional<Plane> upscaled;             ///< dilated mask at HR
};

/// Full enlargement workflow: preprocess, segment + contour, per-segment
/// masked enhancement, merge. Output dimensions are input x cfg.scale.
RasterImage enlarge(const RasterImage& lr, const PipelineConfig& cfg,
                    PipelineTrace* trace = nullptr);

/// Plain whole-image interpolation, the comparison arm.
RasterImage enlarge_baseline(const RasterImage& lr, int scale, InterpMethod m);

}  // namespace slicmag
