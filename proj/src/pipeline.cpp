#include "slicmag/pipeline.hpp"

#include <algorithm>

#include "slicmag/color.hpp"
#include "slicmag/morphology.hpp"

namespace slicmag {

void PipelineConfig::validate() const {
    if (scale < 2) throw std::invalid_argument("PipelineConfig: scale must be >= 2");
    if (window < 1 || window % 2 == 0)
        throw std::invalid_argument("PipelineConfig: window must be odd and >= 1");
    if (base_interp == InterpMethod::Nearest)
        throw std::invalid_argument("PipelineConfig: base_interp must be bilinear or bicubic");
    if (dilation_passes < 1)
        throw std::invalid_argument("PipelineConfig: dilation_passes must be >= 1");
    if (pad_margin < 0)
        throw std::invalid_argument("PipelineConfig: pad_margin must be >= 0");
}

namespace {

// Segment the padded guide and crop the labels back to the guide frame,
// re-densifying ids that only survive in the border.
LabelMap segment_guide(const RasterImage& guide, const PipelineConfig& cfg) {
    const int margin = cfg.pad_margin;
    RasterImage padded = guide;
    if (margin > 0) {
        std::vector<Plane> planes;
        for (const Plane& p : guide.planes()) planes.push_back(pad_replicate(p, margin));
        padded = RasterImage(std::move(planes), guide.space());
    }
    LabelMap lm = slic_segment(padded, cfg.slic);
    if (margin == 0) return lm;

    const int w = guide.width(), h = guide.height();
    std::vector<int> cropped(static_cast<size_t>(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            cropped[static_cast<size_t>(y) * w + x] = lm.at(x + margin, y + margin);

    std::vector<int> remap(lm.num_segments(), -1);
    int next = 0;
    for (int& lab : cropped) {
        if (remap[lab] == -1) remap[lab] = next++;
        lab = remap[lab];
    }
    return LabelMap(w, h, std::move(cropped), next);
}

}  // namespace

RasterImage enlarge(const RasterImage& lr, const PipelineConfig& cfg, PipelineTrace* trace) {
    cfg.validate();
    if (lr.space() != ColorSpace::RGB)
        throw std::invalid_argument("enlarge: input must be RGB");

    const int hr_w = lr.width() * cfg.scale;
    const int hr_h = lr.height() * cfg.scale;

    // Stage 1: preprocess.
    const RasterImage guide = resize_image(lr, hr_w, hr_h, cfg.base_interp);
    if (trace) trace->guide = guide;

    // Stage 2: segmentation and contour detection.
    const LabelMap lm = segment_guide(guide, cfg);
    if (trace) trace->label_overlay = boundary_overlay(guide, lm);
    if (lm.num_segments() <= 1) return guide;  // single homogeneous region

    // Stage 3 + 4: per-segment enhancement, merged in ascending label order.
    const RasterImage lr_ycc = rgb_to_ycbcr(lr);
    const RasterImage guide_ycc = rgb_to_ycbcr(guide);
    const StructuringElement window = StructuringElement::flat(cfg.window, cfg.window);

    std::vector<Plane> out_planes(3, Plane(hr_w, hr_h));
    std::vector<bool> written(static_cast<size_t>(hr_w) * hr_h, false);

    for (int seg = 0; seg < lm.num_segments(); ++seg) {
        for (const Contour& hr_contour : extract_contours(lm, seg)) {
            const auto lr_contour =
                scale_contour(hr_contour, 1.0 / cfg.scale, lr.width(), lr.height());
            if (!lr_contour) continue;  // sub-pixel at LR; backfill covers it

            const Plane mask_a = fill_polygon(*lr_contour, lr.width(), lr.height());
            const BinaryMask region = BinaryMask::from_plane(mask_a);
            const Plane hr_mask = fill_polygon(hr_contour, hr_w, hr_h);

            for (int c = 0; c < 3; ++c) {
                Plane mask_b =
                    fill_polygon(*lr_contour, lr.width(), lr.height(), &lr_ycc.plane(c));
                if (trace && seg == 0 && c == 0) {
                    trace->mask_a = mask_a;
                    trace->mask_b = mask_b;
                }
                for (int pass = 0; pass < cfg.dilation_passes; ++pass)
                    mask_b = conditional_dilate(mask_b, region, window);
                if (trace && seg == 0 && c == 0) trace->dilated = mask_b;

                const Plane up = resize_plane(mask_b, hr_w, hr_h, cfg.base_interp);
                if (trace && seg == 0 && c == 0) trace->upscaled = up;

                for (int y = 0; y < hr_h; ++y)
                    for (int x = 0; x < hr_w; ++x)
                        if (hr_mask.at(x, y)) out_planes[c].at(x, y) = up.at(x, y);
            }
            for (int y = 0; y < hr_h; ++y)
                for (int x = 0; x < hr_w; ++x)
                    if (hr_mask.at(x, y))
                        written[static_cast<size_t>(y) * hr_w + x] = true;
        }
    }

    // Coverage backfill from the guide for pixels no segment claimed.
    for (int y = 0; y < hr_h; ++y)
        for (int x = 0; x < hr_w; ++x)
            if (!written[static_cast<size_t>(y) * hr_w + x])
                for (int c = 0; c < 3; ++c) out_planes[c].at(x, y) = guide_ycc.plane(c).at(x, y);

    return ycbcr_to_rgb(RasterImage(std::move(out_planes), ColorSpace::YCbCr));
}

RasterImage enlarge_baseline(const RasterImage& lr, int scale, InterpMethod m) {
    if (scale < 1) throw std::invalid_argument("enlarge_baseline: scale must be >= 1");
    return resize_image(lr, lr.width() * scale, lr.height() * scale, m);
}

}  // namespace slicmag
