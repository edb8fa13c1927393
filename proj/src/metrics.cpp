#include "slicmag/metrics.hpp"

#include <cmath>
#include <limits>

#include "slicmag/color.hpp"

namespace slicmag {

QualityReport psnr(const RasterImage& a, const RasterImage& b, PsnrChannel channel,
                   int crop_border) {
    if (a.width() != b.width() || a.height() != b.height())
        throw std::invalid_argument("psnr: image dimensions differ");
    if (a.space() != b.space())
        throw std::invalid_argument("psnr: color spaces differ");
    if (crop_border < 0 || 2 * crop_border >= a.width() || 2 * crop_border >= a.height())
        throw std::invalid_argument("psnr: crop border too large");

    const RasterImage* pa = &a;
    const RasterImage* pb = &b;
    RasterImage ya, yb;
    if (channel == PsnrChannel::LumaOnly && a.space() == ColorSpace::RGB) {
        ya = rgb_to_ycbcr(a);
        yb = rgb_to_ycbcr(b);
        pa = &ya;
        pb = &yb;
    }
    const size_t nplanes = (channel == PsnrChannel::LumaOnly) ? 1 : pa->plane_count();

    const int x0 = crop_border, y0 = crop_border;
    const int x1 = a.width() - crop_border, y1 = a.height() - crop_border;
    double sum = 0.0;
    for (size_t p = 0; p < nplanes; ++p)
        for (int y = y0; y < y1; ++y)
            for (int x = x0; x < x1; ++x) {
                const double d = static_cast<double>(pa->plane(p).at(x, y)) -
                                 static_cast<double>(pb->plane(p).at(x, y));
                sum += d * d;
            }

    QualityReport r;
    r.width = x1 - x0;
    r.height = y1 - y0;
    r.mse = sum / (static_cast<double>(nplanes) * r.width * r.height);
    r.psnr_db = r.mse > 0.0 ? 10.0 * std::log10(255.0 * 255.0 / r.mse)
                            : std::numeric_limits<double>::infinity();
    return r;
}

}  // namespace slicmag
