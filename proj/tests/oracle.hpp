#pragma once

#include "meshgen/core.hpp"

namespace testutil {

/// Reference nine-point relaxation pass, written straight from the
/// difference equations with no shared code with the library. Interior
/// nodes are visited j outer, i inner, updating in place.
inline double oracle_sweep(meshgen::StructuredGrid& g, double relaxation = 1.0,
                           double source_p = 0.0, double source_q = 0.0) {
    const int xi = g.xi_partitions();
    const int eta = g.eta_partitions();
    double max_change = 0.0;
    for (int j = 1; j < eta; ++j) {
        for (int i = 1; i < xi; ++i) {
            const double x_xi = (g.at(i + 1, j).x - g.at(i - 1, j).x) / 2.0;
            const double y_xi = (g.at(i + 1, j).y - g.at(i - 1, j).y) / 2.0;
            const double x_eta = (g.at(i, j + 1).x - g.at(i, j - 1).x) / 2.0;
            const double y_eta = (g.at(i, j + 1).y - g.at(i, j - 1).y) / 2.0;

            const double alpha = x_eta * x_eta + y_eta * y_eta;
            const double beta = x_xi * x_eta + y_xi * y_eta;
            const double gamma = x_xi * x_xi + y_xi * y_xi;
            const double det = x_xi * y_eta - x_eta * y_xi;
            const double jac = 1.0 / det;
            const double j2 = jac * jac;

            const double a_p = 2.0 * alpha + 2.0 * gamma;
            const double a_e = alpha + source_p / (2.0 * j2);
            const double a_w = alpha - source_p / (2.0 * j2);
            const double a_n = gamma + source_q / (2.0 * j2);
            const double a_s = gamma - source_q / (2.0 * j2);
            const double a_ne = -beta / 2.0;
            const double a_nw = beta / 2.0;
            const double a_se = beta / 2.0;
            const double a_sw = -beta / 2.0;

            const double gs_x =
                (a_e * g.at(i + 1, j).x + a_w * g.at(i - 1, j).x + a_n * g.at(i, j + 1).x +
                 a_s * g.at(i, j - 1).x + a_ne * g.at(i + 1, j + 1).x +
                 a_se * g.at(i + 1, j - 1).x + a_nw * g.at(i - 1, j + 1).x +
                 a_sw * g.at(i - 1, j - 1).x) /
                a_p;
            const double gs_y =
                (a_e * g.at(i + 1, j).y + a_w * g.at(i - 1, j).y + a_n * g.at(i, j + 1).y +
                 a_s * g.at(i, j - 1).y + a_ne * g.at(i + 1, j + 1).y +
                 a_se * g.at(i + 1, j - 1).y + a_nw * g.at(i - 1, j + 1).y +
                 a_sw * g.at(i - 1, j - 1).y) /
                a_p;

            const double new_x = g.at(i, j).x + relaxation * (gs_x - g.at(i, j).x);
            const double new_y = g.at(i, j).y + relaxation * (gs_y - g.at(i, j).y);
            const double dx = new_x - g.at(i, j).x;
            const double dy = new_y - g.at(i, j).y;
            max_change = std::max(max_change, std::sqrt(dx * dx + dy * dy));
            g.at(i, j).x = new_x;
            g.at(i, j).y = new_y;
        }
    }
    return max_change;
}

/// Reference weighted-average interior fill (the two-term border blend).
inline meshgen::StructuredGrid oracle_weighted_fill(const meshgen::StructuredGrid& boundary,
                                                    double p13_x, double p24_x,
                                                    double p13_y, double p24_y) {
    meshgen::StructuredGrid g = boundary;
    const int xi = g.xi_partitions();
    const int eta = g.eta_partitions();
    for (int j = 1; j < eta; ++j) {
        for (int i = 1; i < xi; ++i) {
            const double dxxi_j = (boundary.at(xi, j).x - boundary.at(0, j).x) / xi;
            const double dxeta_i = (boundary.at(i, eta).x - boundary.at(i, 0).x) / eta;
            const double dyxi_j = (boundary.at(xi, j).y - boundary.at(0, j).y) / xi;
            const double dyeta_i = (boundary.at(i, eta).y - boundary.at(i, 0).y) / eta;
            g.at(i, j).x = p13_x * (boundary.at(0, j).x + i * dxxi_j) +
                           p24_x * (boundary.at(i, 0).x + j * dxeta_i);
            g.at(i, j).y = p13_y * (boundary.at(0, j).y + i * dyxi_j) +
                           p24_y * (boundary.at(i, 0).y + j * dyeta_i);
        }
    }
    return g;
}

} // namespace testutil
