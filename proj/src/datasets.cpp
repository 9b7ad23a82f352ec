#include "meshgen/datasets.hpp"

#include <cmath>

namespace meshgen::datasets {

namespace {

constexpr double pi = 3.14159265358979323846;

// Opaque trig wrappers: keeping cos and sin as separate opaque calls stops
// the compiler from fusing them into sincos, whose last-ulp rounding can
// differ from the separate calls. Generated coordinates must not depend on
// optimization flags, since the shipped files are compared bitwise.
[[gnu::noinline]] double stable_cos(double a) { return std::cos(a); }
[[gnu::noinline]] double stable_sin(double a) { return std::sin(a); }

void check_refinement(int refinement) {
    if (refinement != 1 && refinement != 2)
        throw Error("datasets: refinement must be 1 or 2");
}

std::vector<Point2> straight_line(const Point2& a, const Point2& b, int partitions) {
    std::vector<Point2> pts(static_cast<std::size_t>(partitions) + 1);
    for (int k = 0; k <= partitions; ++k) {
        const double t = static_cast<double>(k) / partitions;
        pts[static_cast<std::size_t>(k)] = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    }
    pts.front() = a;
    pts.back() = b;
    return pts;
}

} // namespace

BlockInput cutout(int refinement) {
    check_refinement(refinement);
    BlockInput b;
    b.name = refinement == 1 ? "cutout_r1" : "cutout_r2";
    b.xi_partitions = refinement == 1 ? 15 : 30;
    b.eta_partitions = refinement == 1 ? 6 : 12;
    b.weights = {0.1, 0.9, 0.0, 1.0};

    b.gamma1 = straight_line({0.0, 0.0}, {0.0, 4.0}, 4);
    b.gamma3 = straight_line({10.0, 0.0}, {10.0, 4.0}, 4);
    b.gamma4 = straight_line({0.0, 0.0}, {10.0, 0.0}, 10);
    b.gamma2 = {
        {0.0, 4.0}, {1.0, 4.0}, {2.5, 4.0}, {4.0, 4.0}, {4.0, 2.8}, {5.0, 2.8},
        {6.0, 2.8}, {6.0, 4.0}, {7.5, 4.0}, {9.0, 4.0}, {10.0, 4.0},
    };
    return b;
}

BlockInput bottle(int refinement) {
    check_refinement(refinement);
    BlockInput b;
    b.name = refinement == 1 ? "bottle_r1" : "bottle_r2";
    b.xi_partitions = refinement == 1 ? 6 : 12;
    b.eta_partitions = refinement == 1 ? 15 : 30;
    b.weights = {1.0, 0.0, 0.5, 0.5};

    // Side profile, base to mouth: straight body, tapering shoulder,
    // straight neck.
    const std::vector<Point2> profile = {
        {2.0, 0.0}, {2.0, 1.5}, {2.0, 3.0}, {2.0, 4.5}, {2.0, 6.0}, {1.7, 6.9},
        {1.1, 7.6}, {0.5, 8.0}, {0.5, 8.7}, {0.5, 9.4}, {0.5, 10.0},
    };
    b.gamma3 = profile;
    b.gamma1.reserve(profile.size());
    for (const Point2& p : profile) b.gamma1.push_back({-p.x, p.y});

    b.gamma4 = straight_line({-2.0, 0.0}, {2.0, 0.0}, 4);
    b.gamma2 = straight_line({-0.5, 10.0}, {0.5, 10.0}, 4);
    return b;
}

BlockInput doubly_connected(int refinement) {
    check_refinement(refinement);
    BlockInput b;
    b.name = refinement == 1 ? "doubly_connected_r1" : "doubly_connected_r2";
    b.xi_partitions = refinement == 1 ? 30 : 40;
    b.eta_partitions = refinement == 1 ? 6 : 8;
    b.weights = {0.05, 0.95, 0.0, 1.0};

    const double r_inner = 1.0;
    const double r_outer = 2.0;
    const int segments = 20;

    // Both circles traced clockwise from the positive x axis, so the map
    // (cut angle, radius) -> (x, y) keeps a positive orientation. The
    // trace closes on its exact starting point.
    const auto circle = [&](double r) {
        std::vector<Point2> pts(static_cast<std::size_t>(segments) + 1);
        for (int k = 0; k < segments; ++k) {
            const double angle = -2.0 * pi * k / segments;
            pts[static_cast<std::size_t>(k)] = {r * stable_cos(angle), r * stable_sin(angle)};
        }
        pts.back() = pts.front();
        return pts;
    };
    b.gamma4 = circle(r_inner);
    b.gamma2 = circle(r_outer);
    b.gamma1 = straight_line({r_inner, 0.0}, {r_outer, 0.0}, 4);
    b.gamma3 = b.gamma1;
    return b;
}

std::vector<BlockInput> igapo(int refinement) {
    check_refinement(refinement);

    // East shore of the main basin: 70 equal-length steps heading
    // roughly north. The tributary mouths (steps 20..21 and 45..49) are
    // exactly vertical so both refinements of a tributary resample onto
    // the same physical nodes as the main block.
    const int shore_steps = 70;
    const double step = 20.0;
    const int t1_lo = 20, t1_hi = 22;
    const int t2_lo = 45, t2_hi = 50;

    std::vector<Point2> east(static_cast<std::size_t>(shore_steps) + 1);
    east[0] = {400.0, 0.0};
    for (int p = 0; p < shore_steps; ++p) {
        const bool mouth = (p >= t1_lo && p < t1_hi) || (p >= t2_lo && p < t2_hi);
        Point2 d{0.0, 1.0};
        if (!mouth) {
            const double angle = pi / 2.0 + 0.35 * stable_sin(2.0 * pi * 1.2 * p / shore_steps + 0.6);
            d = {stable_cos(angle), stable_sin(angle)};
        }
        east[static_cast<std::size_t>(p) + 1] = {east[static_cast<std::size_t>(p)].x + step * d.x,
                                                 east[static_cast<std::size_t>(p)].y + step * d.y};
    }

    std::vector<Point2> west(east.size());
    for (int p = 0; p <= shore_steps; ++p) {
        const double width = 110.0 + 30.0 * stable_sin(2.0 * pi * 0.9 * p / shore_steps + 2.0);
        west[static_cast<std::size_t>(p)] = {east[static_cast<std::size_t>(p)].x - width,
                                             east[static_cast<std::size_t>(p)].y};
    }

    const std::string suffix = refinement == 1 ? "_r1" : "_r2";

    BlockInput principal;
    principal.name = "igapo_principal" + suffix;
    principal.xi_partitions = refinement == 1 ? 6 : 12;
    principal.eta_partitions = refinement == 1 ? 70 : 140;
    principal.weights = {0.5, 0.5, 0.5, 0.5};
    principal.gamma1 = west;
    principal.gamma3 = east;
    principal.gamma4 = straight_line(west.front(), east.front(), 6);
    principal.gamma2 = straight_line(west.back(), east.back(), 6);

    // Tributary 1: a narrow finger off the shore span [t1_lo, t1_hi].
    BlockInput trib1;
    trib1.name = "igapo_tributary1" + suffix;
    trib1.xi_partitions = refinement == 1 ? 10 : 20;
    trib1.eta_partitions = refinement == 1 ? 2 : 4;
    trib1.weights = {0.5, 0.5, 0.5, 0.5};
    trib1.gamma1.assign(east.begin() + t1_lo, east.begin() + t1_hi + 1);
    {
        const Point2 south = trib1.gamma1.front();
        const Point2 north = trib1.gamma1.back();
        const int n = 10;
        trib1.gamma4.resize(static_cast<std::size_t>(n) + 1);
        trib1.gamma2.resize(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            const double f = static_cast<double>(k) / n;
            trib1.gamma4[static_cast<std::size_t>(k)] = {south.x + 180.0 * f,
                                                         south.y + 12.0 * f * f};
            trib1.gamma2[static_cast<std::size_t>(k)] = {north.x + 180.0 * f,
                                                         north.y - 12.0 * f * f};
        }
        trib1.gamma4.front() = south;
        trib1.gamma2.front() = north;
        trib1.gamma3 = straight_line(trib1.gamma4.back(), trib1.gamma2.back(), 2);
    }

    // Tributary 2: a wider bay off the shore span [t2_lo, t2_hi].
    BlockInput trib2;
    trib2.name = "igapo_tributary2" + suffix;
    trib2.xi_partitions = refinement == 1 ? 8 : 28;
    trib2.eta_partitions = refinement == 1 ? 5 : 10;
    trib2.weights = {0.5, 0.5, 0.5, 0.5};
    trib2.gamma1.assign(east.begin() + t2_lo, east.begin() + t2_hi + 1);
    {
        const Point2 south = trib2.gamma1.front();
        const Point2 north = trib2.gamma1.back();
        const int n = 8;
        trib2.gamma4.resize(static_cast<std::size_t>(n) + 1);
        trib2.gamma2.resize(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            const double f = static_cast<double>(k) / n;
            trib2.gamma4[static_cast<std::size_t>(k)] = {south.x + 176.0 * f,
                                                         south.y + 20.0 * f * f};
            trib2.gamma2[static_cast<std::size_t>(k)] = {north.x + 176.0 * f,
                                                         north.y - 30.0 * f * f};
        }
        trib2.gamma4.front() = south;
        trib2.gamma2.front() = north;
        trib2.gamma3 = straight_line(trib2.gamma4.back(), trib2.gamma2.back(), 5);
    }

    return {principal, trib1, trib2};
}

std::string write_block_file(const BlockInput& block) {
    std::string out;
    out += "BLOCK " + block.name + "\n";
    out += "PARTITIONS " + std::to_string(block.xi_partitions) + " " +
           std::to_string(block.eta_partitions) + "\n";
    out += "WEIGHTS_X " + format_double(block.weights.p13_x) + " " +
           format_double(block.weights.p24_x) + "\n";
    out += "WEIGHTS_Y " + format_double(block.weights.p13_y) + " " +
           format_double(block.weights.p24_y) + "\n";
    const auto border = [&out](const char* label, const std::vector<Point2>& pts) {
        out += std::string("BORDER ") + label + " " + std::to_string(pts.size()) + "\n";
        for (const Point2& p : pts)
            out += format_double(p.x) + " " + format_double(p.y) + "\n";
    };
    border("GAMMA1", block.gamma1);
    border("GAMMA2", block.gamma2);
    border("GAMMA3", block.gamma3);
    border("GAMMA4", block.gamma4);
    out += "END\n";
    return out;
}

} // namespace meshgen::datasets
