#include <doctest.h>

#include <set>

#include "slicmag/contour.hpp"
#include "test_support.hpp"

using namespace slicmag;

namespace {

LabelMap map_from(const std::vector<int>& labels, int w, int h, int nseg) {
    return LabelMap(w, h, labels, nseg);
}

// Even-odd ray cast (half-open edge rule) plus on-edge membership.
bool oracle_inside(const Contour& c, int px, int py) {
    const size_t n = c.points.size();
    bool in = false;
    for (size_t i = 0; i < n; ++i) {
        const PixelCoord a = c.points[i], b = c.points[(i + 1) % n];
        // On-segment test for integer-ish geometry.
        const long cross = static_cast<long>(b.x - a.x) * (py - a.y) -
                           static_cast<long>(b.y - a.y) * (px - a.x);
        if (cross == 0 && px >= std::min(a.x, b.x) && px <= std::max(a.x, b.x) &&
            py >= std::min(a.y, b.y) && py <= std::max(a.y, b.y))
            return true;
        if (a.y == b.y) continue;
        const int ylo = std::min(a.y, b.y), yhi = std::max(a.y, b.y);
        if (py < ylo || py >= yhi) continue;
        const double xi = a.x + static_cast<double>(py - a.y) * (b.x - a.x) / (b.y - a.y);
        if (px < xi) in = !in;
    }
    return in;
}

}  // namespace

TEST_CASE("full-frame segment traces the image border") {
    const LabelMap lm(10, 8, std::vector<int>(80, 0), 1);
    const auto contours = extract_contours(lm, 0);
    REQUIRE(contours.size() == 1);
    for (const PixelCoord& p : contours[0].points)
        REQUIRE((p.x == 0 || p.x == 9 || p.y == 0 || p.y == 7));
    // All four corners appear.
    std::set<std::pair<int, int>> pts;
    for (const PixelCoord& p : contours[0].points) pts.insert({p.x, p.y});
    for (auto [x, y] : {std::pair{0, 0}, std::pair{9, 0}, std::pair{9, 7}, std::pair{0, 7}})
        REQUIRE(pts.count({x, y}) == 1);
}

TEST_CASE("centered square blob: 12-point boundary") {
    std::vector<int> labels(100, 0);
    for (int y = 3; y < 7; ++y)
        for (int x = 3; x < 7; ++x) labels[y * 10 + x] = 1;
    const auto contours = extract_contours(map_from(labels, 10, 10, 2), 1);
    REQUIRE(contours.size() == 1);
    CHECK(contours[0].points.size() == 12);
    for (const PixelCoord& p : contours[0].points) {
        REQUIRE(p.x >= 3);
        REQUIRE(p.x <= 6);
        REQUIRE((p.x == 3 || p.x == 6 || p.y == 3 || p.y == 6));
    }
}

TEST_CASE("two disjoint blobs give two contours") {
    std::vector<int> labels(100, 0);
    for (int y = 1; y < 3; ++y)
        for (int x = 1; x < 3; ++x) labels[y * 10 + x] = 1;
    for (int y = 6; y < 9; ++y)
        for (int x = 6; x < 9; ++x) labels[y * 10 + x] = 1;
    CHECK(extract_contours(map_from(labels, 10, 10, 2), 1).size() == 2);
}

TEST_CASE("absent segment id gives an empty list") {
    const LabelMap lm(4, 4, std::vector<int>(16, 0), 1);
    CHECK(extract_contours(lm, 0).size() == 1);
    CHECK(extract_contours(lm, 3).empty());
}

TEST_CASE("scale_contour") {
    Contour square;
    square.segment_id = 2;
    square.points = {{4, 4}, {12, 4}, {12, 12}, {4, 12}};

    SUBCASE("factor 1 is the identity") {
        const auto out = scale_contour(square, 1.0);
        REQUIRE(out.has_value());
        CHECK(out->points == square.points);
        CHECK(out->segment_id == 2);
    }
    SUBCASE("quarter scale maps (4..12) to (1..3)") {
        const auto out = scale_contour(square, 0.25);
        REQUIRE(out.has_value());
        const std::vector<PixelCoord> expected{{1, 1}, {3, 1}, {3, 3}, {1, 3}};
        CHECK(out->points == expected);
    }
    SUBCASE("degenerate collapse is dropped") {
        Contour tiny;
        tiny.points = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
        CHECK_FALSE(scale_contour(tiny, 0.25).has_value());
    }
    SUBCASE("scale then inverse returns within one pixel") {
        const auto down = scale_contour(square, 0.25);
        REQUIRE(down.has_value());
        const auto up = scale_contour(*down, 4.0);
        REQUIRE(up.has_value());
        REQUIRE(up->points.size() == square.points.size());
        for (size_t i = 0; i < square.points.size(); ++i) {
            CHECK(std::abs(up->points[i].x - square.points[i].x) <= 4);
            CHECK(std::abs(up->points[i].y - square.points[i].y) <= 4);
        }
    }
    SUBCASE("invalid factor") {
        CHECK_THROWS_AS(scale_contour(square, 0.0), std::invalid_argument);
    }
}

TEST_CASE("fill_polygon") {
    SUBCASE("axis-aligned rectangle fills w*h pixels") {
        Contour rect;
        rect.points = {{2, 3}, {7, 3}, {7, 6}, {2, 6}};
        const Plane out = fill_polygon(rect, 10, 10);
        int area = 0;
        for (int y = 0; y < 10; ++y)
            for (int x = 0; x < 10; ++x) {
                const bool inside = x >= 2 && x <= 7 && y >= 3 && y <= 6;
                REQUIRE(out.at(x, y) == (inside ? 255 : 0));
                if (out.at(x, y)) ++area;
            }
        CHECK(area == 6 * 4);
    }
    SUBCASE("triangle matches the even-odd oracle per pixel") {
        Contour tri;
        tri.points = {{0, 0}, {4, 0}, {0, 4}};
        const Plane out = fill_polygon(tri, 5, 5);
        for (int y = 0; y < 5; ++y)
            for (int x = 0; x < 5; ++x)
                REQUIRE((out.at(x, y) == 255) == oracle_inside(tri, x, y));
    }
    SUBCASE("binary output uses only 0 and 255") {
        Contour tri;
        tri.points = {{1, 1}, {6, 2}, {3, 7}};
        const Plane out = fill_polygon(tri, 8, 8);
        for (auto s : out.samples()) REQUIRE((s == 0 || s == 255));
    }
    SUBCASE("source plane variant copies inside, zeroes outside") {
        Contour rect;
        rect.points = {{1, 1}, {3, 1}, {3, 3}, {1, 3}};
        const Plane src(5, 5, uint8_t{60});
        const Plane out = fill_polygon(rect, 5, 5, &src);
        for (int y = 0; y < 5; ++y)
            for (int x = 0; x < 5; ++x) {
                const bool inside = x >= 1 && x <= 3 && y >= 1 && y <= 3;
                REQUIRE(out.at(x, y) == (inside ? 60 : 0));
            }
    }
    SUBCASE("mismatched source dimensions are rejected") {
        Contour rect;
        rect.points = {{0, 0}, {1, 0}, {1, 1}};
        const Plane src(3, 3);
        CHECK_THROWS_AS(fill_polygon(rect, 5, 5, &src), std::invalid_argument);
    }
}

TEST_CASE("fill/trace round trip reproduces blobs up to the boundary") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        // Random simply-connected blob: union of a few overlapping rectangles
        // anchored at a common seed.
        std::vector<int> labels(16 * 16, 0);
        std::uniform_int_distribution<int> pos(3, 9), len(2, 5);
        const int ax = pos(rng), ay = pos(rng);
        for (int r = 0; r < 3; ++r) {
            const int x0 = std::max(0, ax - len(rng) / 2), y0 = std::max(0, ay - len(rng) / 2);
            const int x1 = std::min(15, ax + len(rng)), y1 = std::min(15, ay + len(rng));
            for (int y = y0; y <= y1; ++y)
                for (int x = x0; x <= x1; ++x) labels[y * 16 + x] = 1;
        }
        const LabelMap lm(16, 16, labels, 2);
        const auto contours = extract_contours(lm, 1);
        REQUIRE(contours.size() == 1);
        const Plane filled = fill_polygon(contours[0], 16, 16);

        int blob = 0, mismatches = 0, perimeter = 0;
        for (int y = 0; y < 16; ++y)
            for (int x = 0; x < 16; ++x) {
                const bool in_blob = labels[y * 16 + x] == 1;
                if (in_blob) ++blob;
                if (in_blob != (filled.at(x, y) == 255)) ++mismatches;
                if (in_blob) {
                    const bool edge = x == 0 || x == 15 || y == 0 || y == 15 ||
                                      labels[y * 16 + x - 1] == 0 ||
                                      labels[y * 16 + x + 1] == 0 ||
                                      labels[(y - 1) * 16 + x] == 0 ||
                                      labels[(y + 1) * 16 + x] == 0;
                    if (edge) ++perimeter;
                }
            }
        REQUIRE(blob > 0);
        REQUIRE(mismatches <= perimeter);
    }
}
