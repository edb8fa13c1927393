#pragma once

#include "slicmag/image.hpp"

namespace slicmag {

struct QualityReport {
    double mse = 0.0;      ///< averaged over all compared channels
    double psnr_db = 0.0;  ///< +infinity when mse == 0
    int width = 0;
    int height = 0;

    bool identical() const { return mse == 0.0; }
};

enum class PsnrChannel { RgbJoint, LumaOnly };

/// PSNR = 10 log10(255^2 / MSE). RGB images compare all three channels jointly
/// unless LumaOnly is selected; crop_border trims that many pixels on each side first.
QualityReport psnr(const RasterImage& a, const RasterImage& b,
                   PsnrChannel channel = PsnrChannel::RgbJoint, int crop_border = 0);

}  // namespace slicmag
