#include "slicmag/color.hpp"

#include <cmath>

namespace slicmag {

uint8_t quantize_u8(double v) {
    long r = std::lround(v);  // half away from zero
    if (r < 0) r = 0;
    if (r > 255) r = 255;
    return static_cast<uint8_t>(r);
}

RasterImage rgb_to_ycbcr(const RasterImage& img) {
    if (img.space() != ColorSpace::RGB)
        throw std::invalid_argument("rgb_to_ycbcr: input must be RGB, got " +
                                    to_string(img.space()));
    const Plane& rp = img.plane(0);
    const Plane& gp = img.plane(1);
    const Plane& bp = img.plane(2);
    Plane y(rp.width(), rp.height());
    Plane cb(rp.width(), rp.height());
    Plane cr(rp.width(), rp.height());
    const size_t n = rp.samples().size();
    for (size_t i = 0; i < n; ++i) {
        const double r = rp.samples()[i];
        const double g = gp.samples()[i];
        const double b = bp.samples()[i];
        y.samples()[i] = quantize_u8(0.299 * r + 0.587 * g + 0.114 * b);
        cb.samples()[i] = quantize_u8(128.0 - 0.168736 * r - 0.331264 * g + 0.5 * b);
        cr.samples()[i] = quantize_u8(128.0 + 0.5 * r - 0.418688 * g - 0.081312 * b);
    }
    return RasterImage({std::move(y), std::move(cb), std::move(cr)}, ColorSpace::YCbCr);
}

RasterImage ycbcr_to_rgb(const RasterImage& img) {
    if (img.space() != ColorSpace::YCbCr)
        throw std::invalid_argument("ycbcr_to_rgb: input must be YCbCr, got " +
                                    to_string(img.space()));
    const Plane& yp = img.plane(0);
    const Plane& cbp = img.plane(1);
    const Plane& crp = img.plane(2);
    Plane r(yp.width(), yp.height());
    Plane g(yp.width(), yp.height());
    Plane b(yp.width(), yp.height());
    const size_t n = yp.samples().size();
    for (size_t i = 0; i < n; ++i) {
        const double y = yp.samples()[i];
        const double cb = cbp.samples()[i] - 128.0;
        const double cr = crp.samples()[i] - 128.0;
        r.samples()[i] = quantize_u8(y + 1.402 * cr);
        g.samples()[i] = quantize_u8(y - 0.344136 * cb - 0.714136 * cr);
        b.samples()[i] = quantize_u8(y + 1.772 * cb);
    }
    return RasterImage({std::move(r), std::move(g), std::move(b)}, ColorSpace::RGB);
}

}  // namespace slicmag
