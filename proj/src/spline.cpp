#include "meshgen/spline.hpp"

#include <algorithm>

namespace meshgen {

namespace {

// Linear blend on one segment; returns the endpoint exactly when the
// local coordinate is exactly 0 or 1.
Point2 segment_point(const Point2& a, const Point2& b, double local) {
    const double wa = 1.0 - local;
    return {a.x * wa + b.x * local, a.y * wa + b.y * local};
}

} // namespace

ParametricSpline build_spline(const std::vector<Point2>& border_points) {
    ParametricSpline s;
    for (const Point2& p : border_points) {
        if (!is_finite(p))
            throw Error("degenerate border: non-finite point");
        if (!s.points_.empty() && p == s.points_.back())
            continue; // collapse consecutive duplicates
        s.points_.push_back(p);
    }
    if (s.points_.size() < 2)
        throw Error("degenerate border: fewer than 2 distinct points");

    s.arc_.resize(s.points_.size());
    s.arc_[0] = 0.0;
    for (std::size_t k = 1; k < s.points_.size(); ++k)
        s.arc_[k] = s.arc_[k - 1] + distance(s.points_[k - 1], s.points_[k]);

    const double total = s.arc_.back();
    s.knots_.resize(s.arc_.size());
    for (std::size_t k = 0; k < s.arc_.size(); ++k)
        s.knots_[k] = s.arc_[k] / total;
    s.knots_.back() = 1.0;

    for (std::size_t k = 1; k < s.knots_.size(); ++k)
        if (!(s.knots_[k] > s.knots_[k - 1]))
            throw Error("degenerate border: chord lengths too small to order knots");
    return s;
}

Point2 ParametricSpline::eval(double t) const {
    constexpr double slack = 1e-12;
    if (t < 0.0) {
        if (t < -slack)
            throw Error("spline parameter " + format_double(t) + " outside [0, 1]");
        t = 0.0;
    } else if (t > 1.0) {
        if (t > 1.0 + slack)
            throw Error("spline parameter " + format_double(t) + " outside [0, 1]");
        t = 1.0;
    }

    // Segment [knots_[k-1], knots_[k]] containing t.
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
    std::size_t k = static_cast<std::size_t>(it - knots_.begin());
    if (k == knots_.size()) k = knots_.size() - 1; // t == 1
    if (k == 0) k = 1;

    if (t == knots_[k]) return points_[k];
    if (t == knots_[k - 1]) return points_[k - 1];

    const double t0 = knots_[k - 1];
    const double t1 = knots_[k];
    return segment_point(points_[k - 1], points_[k], (t - t0) / (t1 - t0));
}

std::vector<Point2> ParametricSpline::resample(int n) const {
    if (n < 1)
        throw Error("resample: partition count must be >= 1");

    std::vector<Point2> out(static_cast<std::size_t>(n) + 1);
    out.front() = points_.front();
    out.back() = points_.back();

    const double total = arc_.back();
    std::size_t seg = 1;
    for (int k = 1; k < n; ++k) {
        const double target = total * (static_cast<double>(k) / n);
        while (seg + 1 < arc_.size() && arc_[seg] < target) ++seg;
        const double len = arc_[seg] - arc_[seg - 1];
        out[static_cast<std::size_t>(k)] =
            segment_point(points_[seg - 1], points_[seg], (target - arc_[seg - 1]) / len);
    }
    return out;
}

} // namespace meshgen
