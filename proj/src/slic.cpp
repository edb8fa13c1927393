#include "slicmag/slic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "slicmag/parallel.hpp"

namespace slicmag {

namespace {

struct LabPixel {
    float l, a, b;
};

float srgb_to_linear(uint8_t v) {
    const float s = v / 255.0f;
    return s <= 0.04045f ? s / 12.92f : std::pow((s + 0.055f) / 1.055f, 2.4f);
}

float lab_f(float t) {
    constexpr float eps = 216.0f / 24389.0f;
    constexpr float kappa = 24389.0f / 27.0f;
    return t > eps ? std::cbrt(t) : (kappa * t + 16.0f) / 116.0f;
}

// sRGB (D65) -> CIELAB.
LabPixel rgb_to_lab(uint8_t r8, uint8_t g8, uint8_t b8) {
    const float r = srgb_to_linear(r8), g = srgb_to_linear(g8), b = srgb_to_linear(b8);
    const float x = 0.4124564f * r + 0.3575761f * g + 0.1804375f * b;
    const float y = 0.2126729f * r + 0.7151522f * g + 0.0721750f * b;
    const float z = 0.0193339f * r + 0.1191920f * g + 0.9503041f * b;
    const float fx = lab_f(x / 0.95047f);
    const float fy = lab_f(y);
    const float fz = lab_f(z / 1.08883f);
    return {116.0f * fy - 16.0f, 500.0f * (fx - fy), 200.0f * (fy - fz)};
}

struct Center {
    double l, a, b, x, y;
};

double lab_dist2(const LabPixel& p, const Center& c) {
    const double dl = p.l - c.l, da = p.a - c.a, db = p.b - c.b;
    return dl * dl + da * da + db * db;
}

// Grid dimensions whose product best approximates k at the image aspect ratio.
std::pair<int, int> seed_grid(int k, int w, int h) {
    const double ideal = std::sqrt(static_cast<double>(k) * w / h);
    int best_nx = 1, best_ny = k;
    long long best_err = std::numeric_limits<long long>::max();
    for (int nx : {static_cast<int>(std::floor(ideal)), static_cast<int>(std::ceil(ideal))}) {
        if (nx < 1) nx = 1;
        for (int dy = -1; dy <= 1; ++dy) {
            int ny = static_cast<int>(std::lround(static_cast<double>(k) / nx)) + dy;
            if (ny < 1) ny = 1;
            const long long err = std::llabs(static_cast<long long>(nx) * ny - k);
            if (err < best_err || (err == best_err && nx > best_nx)) {
                best_err = err;
                best_nx = nx;
                best_ny = ny;
            }
        }
    }
    return {best_nx, best_ny};
}

}  // namespace

LabelMap::LabelMap(int width, int height, std::vector<int> labels, int num_segments)
    : width_(width), height_(height), num_segments_(num_segments), labels_(std::move(labels)) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("LabelMap: dimensions must be >= 1");
    if (labels_.size() != static_cast<size_t>(width) * height)
        throw std::invalid_argument("LabelMap: label count mismatch");
}

Plane LabelMap::to_plane() const {
    if (num_segments_ > 256)
        throw std::invalid_argument("LabelMap::to_plane: more than 256 segments");
    Plane p(width_, height_);
    for (size_t i = 0; i < labels_.size(); ++i)
        p.samples()[i] = static_cast<uint8_t>(labels_[i]);
    return p;
}

int segment_count(const LabelMap& lm) { return lm.num_segments(); }

namespace {

// Relabel so ids are dense in row-major first-occurrence order.
LabelMap densify(int w, int h, std::vector<int> labels) {
    std::vector<int> out(labels.size());
    std::vector<int> seen;
    for (size_t i = 0; i < labels.size(); ++i) {
        const int old = labels[i];
        auto it = std::find(seen.begin(), seen.end(), old);
        int id;
        if (it == seen.end()) {
            id = static_cast<int>(seen.size());
            seen.push_back(old);
        } else {
            id = static_cast<int>(it - seen.begin());
        }
        out[i] = id;
    }
    return LabelMap(w, h, std::move(out), static_cast<int>(seen.size()));
}

struct Components {
    std::vector<int> comp_of;   // per pixel
    std::vector<int> size;      // per component
    std::vector<int> label;     // per component
};

Components find_components(int w, int h, const std::vector<int>& labels) {
    Components c;
    c.comp_of.assign(labels.size(), -1);
    std::vector<size_t> stack;
    for (size_t start = 0; start < labels.size(); ++start) {
        if (c.comp_of[start] != -1) continue;
        const int id = static_cast<int>(c.size.size());
        c.size.push_back(0);
        c.label.push_back(labels[start]);
        stack.push_back(start);
        c.comp_of[start] = id;
        while (!stack.empty()) {
            const size_t i = stack.back();
            stack.pop_back();
            ++c.size[id];
            const int x = static_cast<int>(i % w), y = static_cast<int>(i / w);
            const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                const int nx = x + dx[d], ny = y + dy[d];
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                const size_t ni = static_cast<size_t>(ny) * w + nx;
                if (c.comp_of[ni] == -1 && labels[ni] == labels[i]) {
                    c.comp_of[ni] = id;
                    stack.push_back(ni);
                }
            }
        }
    }
    return c;
}

// Merge stray components so every surviving label is one 4-connected region.
// Each component becomes its own segment; undersized ones are absorbed into
// their largest neighboring group (union-find), which always terminates.
void enforce_connectivity(int w, int h, std::vector<int>& labels, int min_size) {
    const Components c = find_components(w, h, labels);
    const int ncomp = static_cast<int>(c.size.size());

    std::vector<int> parent(ncomp);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };

    // Component adjacency edges (right/down neighbors across a component seam).
    std::vector<std::pair<int, int>> edges;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int ci = c.comp_of[static_cast<size_t>(y) * w + x];
            if (x + 1 < w) {
                const int cr = c.comp_of[static_cast<size_t>(y) * w + x + 1];
                if (cr != ci) edges.emplace_back(ci, cr);
            }
            if (y + 1 < h) {
                const int cd = c.comp_of[static_cast<size_t>(y + 1) * w + x];
                if (cd != ci) edges.emplace_back(ci, cd);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<long long> set_size(c.size.begin(), c.size.end());
    bool changed = true;
    while (changed) {
        changed = false;
        // Best adjacent group per undersized group (largest size, then lowest root).
        std::vector<int> target(ncomp, -1);
        for (const auto& [a, b] : edges) {
            const int ra = find(a), rb = find(b);
            if (ra == rb) continue;
            for (const auto& [from, to] : {std::pair{ra, rb}, std::pair{rb, ra}}) {
                if (set_size[from] >= min_size) continue;
                if (target[from] == -1 || set_size[to] > set_size[target[from]] ||
                    (set_size[to] == set_size[target[from]] && to < target[from]))
                    target[from] = to;
            }
        }
        for (int r = 0; r < ncomp; ++r) {
            if (find(r) != r || set_size[r] >= min_size || target[r] == -1) continue;
            const int t = find(target[r]);
            if (t == r) continue;
            parent[r] = t;
            set_size[t] += set_size[r];
            changed = true;
        }
    }

    for (size_t i = 0; i < labels.size(); ++i) labels[i] = find(c.comp_of[i]);
}

}  // namespace

LabelMap slic_segment(const RasterImage& img, const SlicParams& params) {
    if (img.space() != ColorSpace::RGB)
        throw std::invalid_argument("slic_segment: input must be RGB");
    const int w = img.width(), h = img.height();
    const long long npix = static_cast<long long>(w) * h;
    if (params.k < 1 || params.k > npix)
        throw std::invalid_argument("slic_segment: k must be in [1, pixel count]");
    if (params.compactness < 0.0)
        throw std::invalid_argument("slic_segment: compactness must be >= 0");
    if (params.max_iters < 1)
        throw std::invalid_argument("slic_segment: max_iters must be >= 1");

    std::vector<LabPixel> lab(npix);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            lab[static_cast<size_t>(y) * w + x] =
                rgb_to_lab(img.plane(0).at(x, y), img.plane(1).at(x, y), img.plane(2).at(x, y));

    const double step = std::sqrt(static_cast<double>(npix) / params.k);

    // Seed on a regular grid, nudged to the lowest-gradient spot in a 3x3 patch.
    auto gradient = [&](int x, int y) {
        auto at = [&](int xx, int yy) -> const LabPixel& {
            xx = std::clamp(xx, 0, w - 1);
            yy = std::clamp(yy, 0, h - 1);
            return lab[static_cast<size_t>(yy) * w + xx];
        };
        auto d2 = [](const LabPixel& p, const LabPixel& q) {
            const double dl = p.l - q.l, da = p.a - q.a, db = p.b - q.b;
            return dl * dl + da * da + db * db;
        };
        return d2(at(x + 1, y), at(x - 1, y)) + d2(at(x, y + 1), at(x, y - 1));
    };

    const auto [nx, ny] = seed_grid(params.k, w, h);
    std::vector<Center> centers;
    centers.reserve(static_cast<size_t>(nx) * ny);
    for (int gy = 0; gy < ny; ++gy) {
        for (int gx = 0; gx < nx; ++gx) {
            int sx = std::clamp(static_cast<int>((gx + 0.5) * w / nx), 0, w - 1);
            int sy = std::clamp(static_cast<int>((gy + 0.5) * h / ny), 0, h - 1);
            double best_g = std::numeric_limits<double>::max();
            int bx = sx, by = sy;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    const int cx = std::clamp(sx + dx, 0, w - 1);
                    const int cy = std::clamp(sy + dy, 0, h - 1);
                    const double g = gradient(cx, cy);
                    if (g < best_g) {
                        best_g = g;
                        bx = cx;
                        by = cy;
                    }
                }
            const LabPixel& p = lab[static_cast<size_t>(by) * w + bx];
            centers.push_back({p.l, p.a, p.b, static_cast<double>(bx), static_cast<double>(by)});
        }
    }

    const double m2_over_s2 = (params.compactness * params.compactness) / (step * step);
    std::vector<int> labels(npix, -1);
    std::vector<double> dists(npix);
    const int reach = static_cast<int>(std::ceil(step));

    for (int iter = 0; iter < params.max_iters; ++iter) {
        std::fill(dists.begin(), dists.end(), std::numeric_limits<double>::max());
        std::vector<int> next(npix, -1);

        for (size_t ci = 0; ci < centers.size(); ++ci) {
            const Center& c = centers[ci];
            const int x0 = std::max(0, static_cast<int>(c.x) - reach);
            const int x1 = std::min(w - 1, static_cast<int>(c.x) + reach);
            const int y0 = std::max(0, static_cast<int>(c.y) - reach);
            const int y1 = std::min(h - 1, static_cast<int>(c.y) + reach);
            for (int y = y0; y <= y1; ++y) {
                for (int x = x0; x <= x1; ++x) {
                    const size_t i = static_cast<size_t>(y) * w + x;
                    const double dxy2 = (x - c.x) * (x - c.x) + (y - c.y) * (y - c.y);
                    const double d = lab_dist2(lab[i], c) + dxy2 * m2_over_s2;
                    if (d < dists[i]) {  // strict: ties keep the lower center index
                        dists[i] = d;
                        next[i] = static_cast<int>(ci);
                    }
                }
            }
        }

        // Pixels missed by every search window fall back to a full scan.
        for (size_t i = 0; i < next.size(); ++i) {
            if (next[i] != -1) continue;
            const int x = static_cast<int>(i % w), y = static_cast<int>(i / w);
            double best = std::numeric_limits<double>::max();
            for (size_t ci = 0; ci < centers.size(); ++ci) {
                const Center& c = centers[ci];
                const double dxy2 = (x - c.x) * (x - c.x) + (y - c.y) * (y - c.y);
                const double d = lab_dist2(lab[i], c) + dxy2 * m2_over_s2;
                if (d < best) {
                    best = d;
                    next[i] = static_cast<int>(ci);
                }
            }
        }

        const bool converged = (next == labels);
        labels = std::move(next);
        if (converged) break;

        std::vector<Center> sums(centers.size(), {0, 0, 0, 0, 0});
        std::vector<long long> counts(centers.size(), 0);
        for (size_t i = 0; i < labels.size(); ++i) {
            const int ci = labels[i];
            sums[ci].l += lab[i].l;
            sums[ci].a += lab[i].a;
            sums[ci].b += lab[i].b;
            sums[ci].x += static_cast<double>(i % w);
            sums[ci].y += static_cast<double>(i / w);
            ++counts[ci];
        }
        for (size_t ci = 0; ci < centers.size(); ++ci) {
            if (counts[ci] == 0) continue;  // orphan center keeps its position
            centers[ci] = {sums[ci].l / counts[ci], sums[ci].a / counts[ci],
                           sums[ci].b / counts[ci], sums[ci].x / counts[ci],
                           sums[ci].y / counts[ci]};
        }
    }

    if (params.enforce_connectivity) {
        const int min_size = std::max(1, static_cast<int>(step * step / 4.0));
        enforce_connectivity(w, h, labels, min_size);
    }
    return densify(w, h, std::move(labels));
}

RasterImage boundary_overlay(const RasterImage& img, const LabelMap& lm) {
    if (img.space() != ColorSpace::RGB)
        throw std::invalid_argument("boundary_overlay: image must be RGB");
    if (img.width() != lm.width() || img.height() != lm.height())
        throw std::invalid_argument("boundary_overlay: image/label dimension mismatch");
    const uint8_t marker[3] = {255, 0, 0};
    std::vector<Plane> planes(img.planes());
    for (int y = 0; y < lm.height(); ++y) {
        for (int x = 0; x < lm.width(); ++x) {
            const int lab = lm.at(x, y);
            const bool edge = (x + 1 < lm.width() && lm.at(x + 1, y) != lab) ||
                              (x > 0 && lm.at(x - 1, y) != lab) ||
                              (y + 1 < lm.height() && lm.at(x, y + 1) != lab) ||
                              (y > 0 && lm.at(x, y - 1) != lab);
            if (edge)
                for (int c = 0; c < 3; ++c) planes[c].at(x, y) = marker[c];
        }
    }
    return RasterImage(std::move(planes), ColorSpace::RGB);
}

}  // namespace slicmag
