#include "slicmag/morphology.hpp"

#include <algorithm>
#include <limits>

#include "slicmag/parallel.hpp"

namespace slicmag {

StructuringElement StructuringElement::flat(int width, int height) {
    return StructuringElement(width, height,
                              std::vector<int>(static_cast<size_t>(width) * height, 0));
}

StructuringElement::StructuringElement(int width, int height, std::vector<int> offsets)
    : width_(width), height_(height), offsets_(std::move(offsets)) {
    if (width < 1 || height < 1 || width % 2 == 0 || height % 2 == 0)
        throw std::invalid_argument("StructuringElement: dimensions must be odd and >= 1");
    if (offsets_.size() != static_cast<size_t>(width) * height)
        throw std::invalid_argument("StructuringElement: offset count mismatch");
}

bool StructuringElement::is_flat() const {
    return std::all_of(offsets_.begin(), offsets_.end(), [](int v) { return v == 0; });
}

BinaryMask BinaryMask::from_plane(const Plane& p) {
    BinaryMask m(p.width(), p.height());
    for (int y = 0; y < p.height(); ++y)
        for (int x = 0; x < p.width(); ++x) m.set(x, y, p.at(x, y) != 0);
    return m;
}

Plane BinaryMask::to_plane() const {
    Plane p(width_, height_);
    for (int y = 0; y < height_; ++y)
        for (int x = 0; x < width_; ++x) p.at(x, y) = get(x, y) ? 255 : 0;
    return p;
}

Plane dilate(const Plane& f, const StructuringElement& b) {
    Plane out(f.width(), f.height());
    const int rx = b.origin_x();
    const int ry = b.origin_y();
    parallel_for(0, f.height(), [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            for (int x = 0; x < f.width(); ++x) {
                int best = std::numeric_limits<int>::min();
                for (int t = -ry; t <= ry; ++t)
                    for (int s = -rx; s <= rx; ++s) {
                        const int v = f.at_clamped(x - s, y - t) + b.offset(s + rx, t + ry);
                        best = std::max(best, v);
                    }
                out.at(x, y) = static_cast<uint8_t>(std::clamp(best, 0, 255));
            }
        }
    });
    return out;
}

Plane conditional_dilate(const Plane& channel_mask, const BinaryMask& region,
                         const StructuringElement& window) {
    if (channel_mask.width() != region.width() || channel_mask.height() != region.height())
        throw std::invalid_argument("conditional_dilate: mask/region dimension mismatch");
    Plane out(channel_mask.width(), channel_mask.height());
    const int rx = window.origin_x();
    const int ry = window.origin_y();
    parallel_for(0, channel_mask.height(), [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            for (int x = 0; x < channel_mask.width(); ++x) {
                if (region.get(x, y)) {
                    out.at(x, y) = channel_mask.at(x, y);
                    continue;
                }
                uint8_t best = 0;
                for (int t = -ry; t <= ry; ++t)
                    for (int s = -rx; s <= rx; ++s)
                        best = std::max(best, channel_mask.at_clamped(x + s, y + t));
                out.at(x, y) = best;
            }
        }
    });
    return out;
}

}  // namespace slicmag
