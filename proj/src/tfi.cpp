#include "meshgen/tfi.hpp"

namespace meshgen {

void WeightSet::validate() const {
    constexpr double sum_tol = 1e-9;
    for (double v : {p13_x, p24_x, p13_y, p24_y})
        if (!(v >= 0.0 && v <= 1.0))
            throw Error("weights must lie in [0, 1]");
    if (std::abs(p13_x + p24_x - 1.0) > sum_tol ||
        std::abs(p13_y + p24_y - 1.0) > sum_tol)
        throw Error("weights must sum to 1");
}

StructuredGrid init_interior(const StructuredGrid& boundary, const WeightSet& w) {
    w.validate();
    const int xi = boundary.xi_partitions();
    const int eta = boundary.eta_partitions();

    for (int i = 0; i <= xi; ++i)
        for (int j : {0, eta})
            if (!is_finite(boundary.at(i, j)))
                throw Error("init_interior: non-finite boundary node");
    for (int j = 0; j <= eta; ++j)
        for (int i : {0, xi})
            if (!is_finite(boundary.at(i, j)))
                throw Error("init_interior: non-finite boundary node");

    StructuredGrid g = boundary;
    for (int j = 1; j < eta; ++j) {
        for (int i = 1; i < xi; ++i) {
            const Point2& left = g.at(0, j);
            const Point2& right = g.at(xi, j);
            const Point2& bottom = g.at(i, 0);
            const Point2& top = g.at(i, eta);

            const double dx_xi = (right.x - left.x) / xi;
            const double dx_eta = (top.x - bottom.x) / eta;
            const double dy_xi = (right.y - left.y) / xi;
            const double dy_eta = (top.y - bottom.y) / eta;

            g.at(i, j).x = w.p13_x * (left.x + i * dx_xi) + w.p24_x * (bottom.x + j * dx_eta);
            g.at(i, j).y = w.p13_y * (left.y + i * dy_xi) + w.p24_y * (bottom.y + j * dy_eta);
        }
    }
    return g;
}

} // namespace meshgen
