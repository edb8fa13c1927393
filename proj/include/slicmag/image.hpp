#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace slicmag {

struct PixelCoord {
    int x = 0;
    int y = 0;

    friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

/// Single-channel 2-D grid of 8-bit samples, row-major.
class Plane {
public:
    Plane() = default;

    Plane(int width, int height, uint8_t fill = 0)
        : width_(width), height_(height),
          samples_(static_cast<size_t>(check_dims(width, height)), fill) {}

    Plane(int width, int height, std::vector<uint8_t> samples)
        : width_(width), height_(height), samples_(std::move(samples)) {
        check_dims(width, height);
        if (samples_.size() != static_cast<size_t>(width) * height)
            throw std::invalid_argument("Plane: sample count does not match dimensions");
    }

    int width() const { return width_; }
    int height() const { return height_; }

    uint8_t at(int x, int y) const { return samples_[idx(x, y)]; }
    uint8_t& at(int x, int y) { return samples_[idx(x, y)]; }

    /// Read with coordinates clamped into the plane domain.
    uint8_t at_clamped(int x, int y) const {
        if (x < 0) x = 0;
        if (x >= width_) x = width_ - 1;
        if (y < 0) y = 0;
        if (y >= height_) y = height_ - 1;
        return samples_[idx(x, y)];
    }

    const std::vector<uint8_t>& samples() const { return samples_; }
    std::vector<uint8_t>& samples() { return samples_; }

    friend bool operator==(const Plane&, const Plane&) = default;

private:
    static long long check_dims(int w, int h) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("Plane: width and height must be >= 1");
        return static_cast<long long>(w) * h;
    }

    size_t idx(int x, int y) const { return static_cast<size_t>(y) * width_ + x; }

    int width_ = 0;
    int height_ = 0;
    std::vector<uint8_t> samples_;
};

enum class ColorSpace { RGB, YCbCr, Gray };

std::string to_string(ColorSpace space);

/// 1 (Gray) or 3 (RGB / YCbCr) planes of identical dimensions.
class RasterImage {
public:
    RasterImage() = default;

    RasterImage(std::vector<Plane> planes, ColorSpace space)
        : planes_(std::move(planes)), space_(space) {
        validate();
    }

    ColorSpace space() const { return space_; }
    int width() const { return planes_.front().width(); }
    int height() const { return planes_.front().height(); }
    size_t plane_count() const { return planes_.size(); }

    const Plane& plane(size_t i) const { return planes_.at(i); }
    Plane& plane(size_t i) { return planes_.at(i); }
    const std::vector<Plane>& planes() const { return planes_; }

    friend bool operator==(const RasterImage&, const RasterImage&) = default;

private:
    void validate() const;

    std::vector<Plane> planes_;
    ColorSpace space_ = ColorSpace::Gray;
};

/// Replicate-pad a plane by `margin` pixels on every side.
Plane pad_replicate(const Plane& p, int margin);

}  // namespace slicmag
