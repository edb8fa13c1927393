#pragma once

#include "slicmag/image.hpp"

namespace slicmag {

/// Odd-dimension window with optional additive profile; origin at the center cell.
class StructuringElement {
public:
    /// Flat (all-zero offsets) element.
    static StructuringElement flat(int width, int height);

    StructuringElement(int width, int height, std::vector<int> offsets);

    int width() const { return width_; }
    int height() const { return height_; }
    int origin_x() const { return (width_ - 1) / 2; }
    int origin_y() const { return (height_ - 1) / 2; }

    /// Additive profile at window cell (cx, cy), top-left indexed.
    int offset(int cx, int cy) const { return offsets_[static_cast<size_t>(cy) * width_ + cx]; }

    bool is_flat() const;

private:
    int width_;
    int height_;
    std::vector<int> offsets_;
};

/// Per-pixel membership map for one segment; true = foreground (white).
class BinaryMask {
public:
    BinaryMask(int width, int height, bool fill = false)
        : width_(width), height_(height), bits_(static_cast<size_t>(width) * height, fill) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("BinaryMask: dimensions must be >= 1");
    }

    /// Foreground where the plane is nonzero.
    static BinaryMask from_plane(const Plane& p);

    int width() const { return width_; }
    int height() const { return height_; }

    bool get(int x, int y) const { return bits_[static_cast<size_t>(y) * width_ + x]; }
    void set(int x, int y, bool v) { bits_[static_cast<size_t>(y) * width_ + x] = v; }

    /// 0/255 rendering for file output.
    Plane to_plane() const;

private:
    int width_;
    int height_;
    std::vector<bool> bits_;
};

/// Grayscale dilation: out(x,y) = max over the element footprint of f(x-s,y-t) + B(s,t),
/// edge-clamped reads, result clamped to [0,255].
Plane dilate(const Plane& f, const StructuringElement& b);

/// Where region(x,y) is black (false): window max of channel_mask at (x,y).
/// Where region is foreground: pass channel_mask through unchanged.
Plane conditional_dilate(const Plane& channel_mask, const BinaryMask& region,
                         const StructuringElement& window);

}  // namespace slicmag
