#pragma once

#include "slicmag/image.hpp"

namespace slicmag {

struct SlicParams {
    int k = 100;                       ///< requested superpixel count
    double compactness = 10.0;         ///< spatial weight m
    int max_iters = 10;
    bool enforce_connectivity = true;
};

/// Dense per-pixel segment ids; with connectivity enforced, each id's
/// pixel set is a single 4-connected region.
class LabelMap {
public:
    LabelMap(int width, int height, std::vector<int> labels, int num_segments);

    int width() const { return width_; }
    int height() const { return height_; }
    int num_segments() const { return num_segments_; }

    int at(int x, int y) const { return labels_[static_cast<size_t>(y) * width_ + x]; }
    const std::vector<int>& labels() const { return labels_; }

    /// Labels rendered as gray values; requires num_segments <= 256.
    Plane to_plane() const;

private:
    int width_;
    int height_;
    int num_segments_;
    std::vector<int> labels_;
};

/// SLIC clustering: CIELAB + spatial windowed k-means,
/// D = sqrt(d_lab^2 + (d_xy / S)^2 * m^2), grid-seeded with gradient perturbation.
LabelMap slic_segment(const RasterImage& img, const SlicParams& params);

int segment_count(const LabelMap& lm);

/// Copy of img with label-boundary pixels painted a fixed marker color.
RasterImage boundary_overlay(const RasterImage& img, const LabelMap& lm);

}  // namespace slicmag
