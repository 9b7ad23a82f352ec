#include "meshgen/quality.hpp"

#include <limits>

namespace meshgen {

QualityReport quality_report(const StructuredGrid& grid) {
    const int xi = grid.xi_partitions();
    const int eta = grid.eta_partitions();

    QualityReport r;
    r.min_jacobian_det = std::numeric_limits<double>::infinity();
    r.max_jacobian_det = -std::numeric_limits<double>::infinity();

    double skew_sum = 0.0;
    for (int j = 1; j < eta; ++j) {
        for (int i = 1; i < xi; ++i) {
            const double x_xi = (grid.at(i + 1, j).x - grid.at(i - 1, j).x) / 2.0;
            const double y_xi = (grid.at(i + 1, j).y - grid.at(i - 1, j).y) / 2.0;
            const double x_eta = (grid.at(i, j + 1).x - grid.at(i, j - 1).x) / 2.0;
            const double y_eta = (grid.at(i, j + 1).y - grid.at(i, j - 1).y) / 2.0;

            const double det = x_xi * y_eta - x_eta * y_xi;
            r.min_jacobian_det = std::min(r.min_jacobian_det, det);
            r.max_jacobian_det = std::max(r.max_jacobian_det, det);
            if (det <= 0.0) ++r.folded_node_count;

            const double alpha = x_eta * x_eta + y_eta * y_eta;
            const double beta = x_xi * x_eta + y_xi * y_eta;
            const double gamma = x_xi * x_xi + y_xi * y_xi;
            if (alpha * gamma > 0.0) // fully collapsed nodes contribute no skew
                skew_sum += beta / std::sqrt(alpha * gamma);
            ++r.node_count;
        }
    }
    if (r.node_count > 0)
        r.mean_beta_over_alpha_gamma = skew_sum / r.node_count;
    return r;
}

std::string to_text(const QualityReport& r) {
    std::string out;
    out += "min_jacobian_det: " + format_double(r.min_jacobian_det) + "\n";
    out += "max_jacobian_det: " + format_double(r.max_jacobian_det) + "\n";
    out += "folded_node_count: " + std::to_string(r.folded_node_count) + "\n";
    out += "mean_beta_over_alpha_gamma: " + format_double(r.mean_beta_over_alpha_gamma) + "\n";
    out += "node_count: " + std::to_string(r.node_count) + "\n";
    return out;
}

InverseMetrics inverse_metrics(const MetricField& m) {
    InverseMetrics inv;
    inv.xi_x = m.jacobian * m.y_eta;
    inv.xi_y = -m.jacobian * m.x_eta;
    inv.eta_x = -m.jacobian * m.y_xi;
    inv.eta_y = m.jacobian * m.x_xi;
    return inv;
}

} // namespace meshgen
