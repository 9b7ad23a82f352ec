#pragma once

#include "meshgen/core.hpp"

namespace meshgen {

/// Piecewise-linear interpolant of an ordered border point list.
///
/// The knot of each point is its cumulative chord length normalized to
/// [0, 1], so the parameter is proportional to arc length along the
/// polyline. Consecutive duplicate input points are collapsed at build
/// time; non-consecutive repeats (closed curves) are kept.
class ParametricSpline {
  public:
    const std::vector<Point2>& points() const { return points_; }
    const std::vector<double>& knots() const { return knots_; }

    /// Value at parameter t in [0, 1]. Values within 1e-12 outside the
    /// range are clamped; anything farther is an error. Evaluation at a
    /// knot returns the control point exactly.
    Point2 eval(double t) const;

    /// n + 1 points at uniform arc-length spacing along the polyline.
    /// The first and last returned points are the spline endpoints.
    std::vector<Point2> resample(int n) const;

    /// Total polyline length.
    double length() const { return arc_.back(); }

    friend ParametricSpline build_spline(const std::vector<Point2>& border_points);

  private:
    std::vector<Point2> points_;
    std::vector<double> knots_; // normalized cumulative chord length
    std::vector<double> arc_;   // unnormalized cumulative chord length
};

/// Interpolating spline over the given border points.
/// Throws Error("degenerate border ...") when fewer than two distinct
/// points remain after collapsing consecutive duplicates.
ParametricSpline build_spline(const std::vector<Point2>& border_points);

inline Point2 eval_spline(const ParametricSpline& s, double t) { return s.eval(t); }

inline std::vector<Point2> resample(const ParametricSpline& s, int n) {
    return s.resample(n);
}

} // namespace meshgen
