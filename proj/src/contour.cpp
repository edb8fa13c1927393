#include "slicmag/contour.hpp"

#include <algorithm>
#include <cmath>

namespace slicmag {

namespace {

// Clockwise Moore neighborhood, y pointing down.
constexpr int kDx[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
constexpr int kDy[8] = {0, -1, -1, -1, 0, 1, 1, 1};

int direction_of(PixelCoord from, PixelCoord to) {
    for (int d = 0; d < 8; ++d)
        if (from.x + kDx[d] == to.x && from.y + kDy[d] == to.y) return d;
    return 0;
}

std::vector<PixelCoord> moore_trace(const std::vector<int>& comp_of, int w, int h, int comp,
                                    PixelCoord start) {
    auto in_comp = [&](int x, int y) {
        return x >= 0 && x < w && y >= 0 && y < h &&
               comp_of[static_cast<size_t>(y) * w + x] == comp;
    };

    std::vector<PixelCoord> pts{start};
    PixelCoord backtrack{start.x - 1, start.y};  // start is topmost-leftmost, west is outside
    PixelCoord cur = start;
    const PixelCoord first_backtrack = backtrack;
    const long long cap = 4LL * w * h + 8;

    for (long long step = 0; step < cap; ++step) {
        const int from = direction_of(cur, backtrack);
        bool moved = false;
        for (int i = 1; i <= 8; ++i) {
            const int d = (from + i) % 8;
            const PixelCoord cand{cur.x + kDx[d], cur.y + kDy[d]};
            if (in_comp(cand.x, cand.y)) {
                backtrack = {cur.x + kDx[(d + 7) % 8], cur.y + kDy[(d + 7) % 8]};
                cur = cand;
                moved = true;
                break;
            }
        }
        if (!moved) break;  // isolated pixel
        if (cur == start && backtrack == first_backtrack) break;
        pts.push_back(cur);
    }
    return pts;
}

}  // namespace

std::vector<Contour> extract_contours(const LabelMap& lm, int segment_id) {
    const int w = lm.width(), h = lm.height();
    std::vector<int> comp_of(static_cast<size_t>(w) * h, -1);
    std::vector<Contour> result;
    std::vector<size_t> stack;

    for (size_t i = 0; i < comp_of.size(); ++i) {
        if (comp_of[i] != -1 || lm.labels()[i] != segment_id) continue;
        const int comp = static_cast<int>(result.size());
        comp_of[i] = comp;
        stack.push_back(i);
        while (!stack.empty()) {
            const size_t j = stack.back();
            stack.pop_back();
            const int x = static_cast<int>(j % w), y = static_cast<int>(j / w);
            const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                const int nx = x + dx[d], ny = y + dy[d];
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                const size_t nj = static_cast<size_t>(ny) * w + nx;
                if (comp_of[nj] == -1 && lm.labels()[nj] == segment_id) {
                    comp_of[nj] = comp;
                    stack.push_back(nj);
                }
            }
        }
        // i is this component's topmost-leftmost pixel in row-major order.
        Contour c;
        c.segment_id = segment_id;
        c.points = moore_trace(comp_of, w, h, comp,
                               {static_cast<int>(i % w), static_cast<int>(i / w)});
        result.push_back(std::move(c));
    }
    return result;
}

std::optional<Contour> scale_contour(const Contour& c, double factor, int max_w, int max_h) {
    if (factor <= 0.0) throw std::invalid_argument("scale_contour: factor must be > 0");
    Contour out;
    out.segment_id = c.segment_id;
    for (const PixelCoord& p : c.points) {
        PixelCoord q{static_cast<int>(std::floor(p.x * factor + 0.5)),
                     static_cast<int>(std::floor(p.y * factor + 0.5))};
        if (q.x < 0) q.x = 0;
        if (q.y < 0) q.y = 0;
        if (max_w > 0 && q.x >= max_w) q.x = max_w - 1;
        if (max_h > 0 && q.y >= max_h) q.y = max_h - 1;
        if (!out.points.empty() && out.points.back() == q) continue;
        out.points.push_back(q);
    }
    // The trace is closed; a duplicate wrap-around point adds nothing.
    while (out.points.size() > 1 && out.points.front() == out.points.back())
        out.points.pop_back();
    if (out.points.size() < 3) return std::nullopt;
    return out;
}

Plane fill_polygon(const Contour& c, int w, int h, const Plane* source) {
    if (source && (source->width() != w || source->height() != h))
        throw std::invalid_argument("fill_polygon: source plane dimension mismatch");
    if (w < 1 || h < 1) throw std::invalid_argument("fill_polygon: bad dimensions");

    const size_t n = c.points.size();
    std::vector<bool> inside(static_cast<size_t>(w) * h, false);
    auto clampx = [&](int x) { return std::clamp(x, 0, w - 1); };
    auto clampy = [&](int y) { return std::clamp(y, 0, h - 1); };

    // Even-odd scanline over non-horizontal edges (half-open in y).
    for (int y = 0; y < h; ++y) {
        std::vector<double> xs;
        for (size_t i = 0; i < n; ++i) {
            const PixelCoord a = c.points[i];
            const PixelCoord b = c.points[(i + 1) % n];
            if (a.y == b.y) continue;
            const int ylo = std::min(a.y, b.y), yhi = std::max(a.y, b.y);
            if (y < ylo || y >= yhi) continue;
            xs.push_back(a.x + static_cast<double>(y - a.y) * (b.x - a.x) / (b.y - a.y));
        }
        std::sort(xs.begin(), xs.end());
        for (size_t i = 0; i + 1 < xs.size(); i += 2) {
            const int x0 = clampx(static_cast<int>(std::ceil(xs[i])));
            const int x1 = clampx(static_cast<int>(std::floor(xs[i + 1])));
            for (int x = x0; x <= x1; ++x) inside[static_cast<size_t>(y) * w + x] = true;
        }
    }

    // The boundary itself belongs to the region: rasterize the outline.
    for (size_t i = 0; i < n; ++i) {
        PixelCoord a = c.points[i];
        const PixelCoord b = c.points[(i + 1) % n];
        int x = clampx(a.x), y = clampy(a.y);
        const int x2 = clampx(b.x), y2 = clampy(b.y);
        const int sx = x < x2 ? 1 : -1, sy = y < y2 ? 1 : -1;
        const int dx = std::abs(x2 - x), dy = -std::abs(y2 - y);
        int err = dx + dy;
        while (true) {
            inside[static_cast<size_t>(y) * w + x] = true;
            if (x == x2 && y == y2) break;
            const int e2 = 2 * err;
            if (e2 >= dy) {
                err += dy;
                x += sx;
            }
            if (e2 <= dx) {
                err += dx;
                y += sy;
            }
        }
    }

    Plane out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (inside[static_cast<size_t>(y) * w + x])
                out.at(x, y) = source ? source->at(x, y) : 255;
    return out;
}

}  // namespace slicmag
