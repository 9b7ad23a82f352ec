#pragma once

#include "meshgen/blockio.hpp"
#include "meshgen/core.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <random>

namespace testutil {

using meshgen::Point2;
using meshgen::StructuredGrid;

inline bool bit_equal(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

inline bool bit_equal(const Point2& a, const Point2& b) {
    return bit_equal(a.x, b.x) && bit_equal(a.y, b.y);
}

inline bool grids_bit_equal(const StructuredGrid& a, const StructuredGrid& b) {
    if (a.xi_partitions() != b.xi_partitions() || a.eta_partitions() != b.eta_partitions())
        return false;
    for (int j = 0; j <= a.eta_partitions(); ++j)
        for (int i = 0; i <= a.xi_partitions(); ++i)
            if (!bit_equal(a.at(i, j), b.at(i, j))) return false;
    return true;
}

inline double max_node_distance(const StructuredGrid& a, const StructuredGrid& b) {
    double worst = 0.0;
    for (int j = 0; j <= a.eta_partitions(); ++j)
        for (int i = 0; i <= a.xi_partitions(); ++i)
            worst = std::max(worst, distance(a.at(i, j), b.at(i, j)));
    return worst;
}

inline StructuredGrid make_grid(const std::string& name, int xi, int eta,
                                const std::function<Point2(int, int)>& f) {
    StructuredGrid g(name, xi, eta);
    for (int j = 0; j <= eta; ++j)
        for (int i = 0; i <= xi; ++i) g.at(i, j) = f(i, j);
    return g;
}

/// Boundary of the unit square with uniform edge sampling, interior zeroed.
inline StructuredGrid square_boundary(int xi, int eta) {
    StructuredGrid g("square", xi, eta);
    for (int i = 0; i <= xi; ++i) {
        const double x = static_cast<double>(i) / xi;
        g.at(i, 0) = {x, 0.0};
        g.at(i, eta) = {x, 1.0};
    }
    for (int j = 0; j <= eta; ++j) {
        const double y = static_cast<double>(j) / eta;
        g.at(0, j) = {0.0, y};
        g.at(xi, j) = {1.0, y};
    }
    return g;
}

struct RigidMotion {
    double angle = 0.0;
    Point2 shift{0.0, 0.0};
    double scale = 1.0;

    Point2 operator()(const Point2& p) const {
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        return {scale * (c * p.x - s * p.y) + shift.x,
                scale * (s * p.x + c * p.y) + shift.y};
    }

    std::vector<Point2> operator()(const std::vector<Point2>& pts) const {
        std::vector<Point2> out;
        out.reserve(pts.size());
        for (const Point2& p : pts) out.push_back((*this)(p));
        return out;
    }

    StructuredGrid operator()(const StructuredGrid& g) const {
        StructuredGrid out = g;
        for (int j = 0; j <= g.eta_partitions(); ++j)
            for (int i = 0; i <= g.xi_partitions(); ++i) out.at(i, j) = (*this)(g.at(i, j));
        return out;
    }
};

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }

  private:
    std::mt19937_64 engine_;
};

/// Open polyline with strictly positive segment lengths, occasionally
/// carrying an exact consecutive duplicate to exercise collapsing.
inline std::vector<Point2> random_polyline(Rng& rng, int min_points = 2,
                                           int max_points = 12,
                                           bool inject_duplicates = true) {
    const int n = rng.uniform_int(min_points, max_points);
    std::vector<Point2> pts;
    Point2 p{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    pts.push_back(p);
    while (static_cast<int>(pts.size()) < n) {
        const double angle = rng.uniform(0.0, 6.283185307179586);
        const double len = rng.uniform(0.05, 1.5);
        p = {p.x + len * std::cos(angle), p.y + len * std::sin(angle)};
        pts.push_back(p);
        if (inject_duplicates && rng.uniform(0.0, 1.0) < 0.15) pts.push_back(p);
    }
    return pts;
}

inline double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const double vx = b.x - a.x;
    const double vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    double t = len2 > 0.0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Point2 proj{a.x + t * vx, a.y + t * vy};
    return distance(p, proj);
}

inline double point_polyline_distance(const Point2& p, const std::vector<Point2>& poly) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < poly.size(); ++k)
        best = std::min(best, point_segment_distance(p, poly[k - 1], poly[k]));
    return best;
}

inline double polyline_length(const std::vector<Point2>& poly) {
    double total = 0.0;
    for (std::size_t k = 1; k < poly.size(); ++k) total += distance(poly[k - 1], poly[k]);
    return total;
}

/// Point at arc length s along the polyline, by walking the segments.
inline Point2 walk_to_arc_length(const std::vector<Point2>& poly, double s) {
    double done = 0.0;
    for (std::size_t k = 1; k < poly.size(); ++k) {
        const double seg = distance(poly[k - 1], poly[k]);
        if (done + seg >= s || k + 1 == poly.size()) {
            const double t = seg > 0.0 ? std::clamp((s - done) / seg, 0.0, 1.0) : 0.0;
            return {poly[k - 1].x + t * (poly[k].x - poly[k - 1].x),
                    poly[k - 1].y + t * (poly[k].y - poly[k - 1].y)};
        }
        done += seg;
    }
    return poly.back();
}

/// Valid block input over a randomly skewed, randomly subdivided quad
/// with complementary random weights. Corners coincide exactly.
inline meshgen::BlockInput random_block_input(Rng& rng) {
    // Random convex-ish quadrilateral: perturbed unit square corners.
    const Point2 c00{rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)};
    const Point2 c10{rng.uniform(1.3, 2.2), rng.uniform(-0.3, 0.3)};
    const Point2 c11{rng.uniform(1.2, 2.3), rng.uniform(1.2, 2.1)};
    const Point2 c01{rng.uniform(-0.3, 0.3), rng.uniform(1.4, 2.4)};

    const auto edge = [&](const Point2& a, const Point2& b) {
        const int pieces = rng.uniform_int(1, 5);
        std::vector<Point2> pts(static_cast<std::size_t>(pieces) + 1);
        for (int k = 0; k <= pieces; ++k) {
            const double t = static_cast<double>(k) / pieces;
            pts[static_cast<std::size_t>(k)] = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
            if (k > 0 && k < pieces) {
                pts[static_cast<std::size_t>(k)].x += rng.uniform(-0.08, 0.08);
                pts[static_cast<std::size_t>(k)].y += rng.uniform(-0.08, 0.08);
            }
        }
        pts.front() = a;
        pts.back() = b;
        return pts;
    };

    meshgen::BlockInput block;
    block.name = "fuzz";
    block.xi_partitions = rng.uniform_int(2, 7);
    block.eta_partitions = rng.uniform_int(2, 7);
    const double wx = rng.uniform(0.0, 1.0);
    const double wy = rng.uniform(0.0, 1.0);
    block.weights = {wx, 1.0 - wx, wy, 1.0 - wy};
    block.gamma1 = edge(c00, c01);
    block.gamma2 = edge(c01, c11);
    block.gamma3 = edge(c10, c11);
    block.gamma4 = edge(c00, c10);
    return block;
}

} // namespace testutil
