#include "slicmag/resample.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "slicmag/color.hpp"
#include "slicmag/parallel.hpp"

namespace slicmag {

namespace {

// Keys cubic convolution kernel, a = -0.5.
double cubic_weight(double t) {
    constexpr double a = -0.5;
    t = std::fabs(t);
    if (t < 1.0) return ((a + 2.0) * t - (a + 3.0)) * t * t + 1.0;
    if (t < 2.0) return ((a * t - 5.0 * a) * t + 8.0 * a) * t - 4.0 * a;
    return 0.0;
}

double src_coord(int out_pos, int out_len, int in_len) {
    return (out_pos + 0.5) * static_cast<double>(in_len) / out_len - 0.5;
}

}  // namespace

std::string to_string(InterpMethod m) {
    switch (m) {
        case InterpMethod::Nearest: return "nearest";
        case InterpMethod::Bilinear: return "bilinear";
        case InterpMethod::Bicubic: return "bicubic";
    }
    return "?";
}

InterpMethod parse_interp(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "nearest") return InterpMethod::Nearest;
    if (s == "bilinear") return InterpMethod::Bilinear;
    if (s == "bicubic") return InterpMethod::Bicubic;
    throw std::invalid_argument("unknown interpolation method: " + name);
}

Plane resize_plane(const Plane& p, int out_w, int out_h, InterpMethod m) {
    if (out_w < 1 || out_h < 1)
        throw std::invalid_argument("resize_plane: output dimensions must be >= 1");
    if (out_w == p.width() && out_h == p.height() && m == InterpMethod::Nearest) return p;

    Plane out(out_w, out_h);
    parallel_for(0, out_h, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y) {
            const double sy = src_coord(y, out_h, p.height());
            for (int x = 0; x < out_w; ++x) {
                const double sx = src_coord(x, out_w, p.width());
                double v = 0.0;
                switch (m) {
                    case InterpMethod::Nearest: {
                        const int ix = static_cast<int>(std::lround(sx));
                        const int iy = static_cast<int>(std::lround(sy));
                        v = p.at_clamped(ix, iy);
                        break;
                    }
                    case InterpMethod::Bilinear: {
                        const int x0 = static_cast<int>(std::floor(sx));
                        const int y0f = static_cast<int>(std::floor(sy));
                        const double fx = sx - x0;
                        const double fy = sy - y0f;
                        const double top = (1.0 - fx) * p.at_clamped(x0, y0f) +
                                           fx * p.at_clamped(x0 + 1, y0f);
                        const double bot = (1.0 - fx) * p.at_clamped(x0, y0f + 1) +
                                           fx * p.at_clamped(x0 + 1, y0f + 1);
                        v = (1.0 - fy) * top + fy * bot;
                        break;
                    }
                    case InterpMethod::Bicubic: {
                        const int x0 = static_cast<int>(std::floor(sx));
                        const int y0f = static_cast<int>(std::floor(sy));
                        double acc = 0.0;
                        for (int j = -1; j <= 2; ++j) {
                            const double wy = cubic_weight(sy - (y0f + j));
                            if (wy == 0.0) continue;
                            double row = 0.0;
                            for (int i = -1; i <= 2; ++i)
                                row += cubic_weight(sx - (x0 + i)) *
                                       p.at_clamped(x0 + i, y0f + j);
                            acc += wy * row;
                        }
                        v = acc;
                        break;
                    }
                }
                out.at(x, y) = quantize_u8(v);
            }
        }
    });
    return out;
}

RasterImage resize_image(const RasterImage& img, int out_w, int out_h, InterpMethod m) {
    std::vector<Plane> planes;
    planes.reserve(img.plane_count());
    for (const Plane& p : img.planes()) planes.push_back(resize_plane(p, out_w, out_h, m));
    return RasterImage(std::move(planes), img.space());
}

}  // namespace slicmag
