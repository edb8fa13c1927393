#include "slicmag/image.hpp"

namespace slicmag {

std::string to_string(ColorSpace space) {
    switch (space) {
        case ColorSpace::RGB: return "RGB";
        case ColorSpace::YCbCr: return "YCbCr";
        case ColorSpace::Gray: return "Gray";
    }
    return "?";
}

void RasterImage::validate() const {
    if (planes_.empty())
        throw std::invalid_argument("RasterImage: at least one plane required");
    const size_t expected = (space_ == ColorSpace::Gray) ? 1 : 3;
    if (planes_.size() != expected)
        throw std::invalid_argument("RasterImage: " + to_string(space_) + " requires " +
                                    std::to_string(expected) + " plane(s), got " +
                                    std::to_string(planes_.size()));
    for (const Plane& p : planes_) {
        if (p.width() != planes_.front().width() || p.height() != planes_.front().height())
            throw std::invalid_argument("RasterImage: planes have mismatched dimensions");
    }
}

Plane pad_replicate(const Plane& p, int margin) {
    if (margin < 0) throw std::invalid_argument("pad_replicate: margin must be >= 0");
    if (margin == 0) return p;
    Plane out(p.width() + 2 * margin, p.height() + 2 * margin);
    for (int y = 0; y < out.height(); ++y)
        for (int x = 0; x < out.width(); ++x)
            out.at(x, y) = p.at_clamped(x - margin, y - margin);
    return out;
}

}  // namespace slicmag
