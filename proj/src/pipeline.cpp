#include "meshgen/pipeline.hpp"

#include "meshgen/spline.hpp"

namespace meshgen {

GeneratedBlock generate_block(const BlockInput& input, const SolverConfig& cfg) {
    const int xi = input.xi_partitions;
    const int eta = input.eta_partitions;
    if (xi < 1 || eta < 1)
        throw Error("block '" + input.name + "': partition counts must be >= 1");
    input.weights.validate();

    const std::vector<Point2> left = build_spline(input.gamma1).resample(eta);
    const std::vector<Point2> top = build_spline(input.gamma2).resample(xi);
    const std::vector<Point2> right = build_spline(input.gamma3).resample(eta);
    const std::vector<Point2> bottom = build_spline(input.gamma4).resample(xi);

    constexpr double corner_tol = 1e-6;
    const auto check_corner = [&](const Point2& a, const Point2& b, const char* which) {
        if (distance(a, b) > corner_tol)
            throw Error("block '" + input.name + "': corner disagreement exceeds 1e-6 at " +
                        which);
    };
    check_corner(bottom.front(), left.front(), "bottom-left");
    check_corner(bottom.back(), right.front(), "bottom-right");
    check_corner(top.front(), left.back(), "top-left");
    check_corner(top.back(), right.back(), "top-right");

    StructuredGrid boundary(input.name, xi, eta);
    for (int i = 0; i <= xi; ++i) {
        boundary.at(i, 0) = bottom[static_cast<std::size_t>(i)];
        boundary.at(i, eta) = top[static_cast<std::size_t>(i)];
    }
    for (int j = 0; j <= eta; ++j) {
        boundary.at(0, j) = left[static_cast<std::size_t>(j)];
        boundary.at(xi, j) = right[static_cast<std::size_t>(j)];
    }
    const auto mid = [](const Point2& a, const Point2& b) {
        return Point2{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    };
    boundary.at(0, 0) = mid(bottom.front(), left.front());
    boundary.at(xi, 0) = mid(bottom.back(), right.front());
    boundary.at(0, eta) = mid(top.front(), left.back());
    boundary.at(xi, eta) = mid(top.back(), right.back());

    const StructuredGrid initial = init_interior(boundary, input.weights);
    SmoothResult smoothed = smooth(initial, cfg);
    QualityReport quality = quality_report(smoothed.grid);
    return {std::move(smoothed.grid), smoothed.report, quality};
}

} // namespace meshgen
