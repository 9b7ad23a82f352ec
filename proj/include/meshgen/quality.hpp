#pragma once

#include "meshgen/core.hpp"
#include "meshgen/elliptic.hpp"

namespace meshgen {

/// Mesh diagnostics over the interior nodes. The determinant reported is
/// x_xi * y_eta - x_eta * y_xi (finite even where the Jacobian proper
/// blows up); a node is folded when it is non-positive.
struct QualityReport {
    double min_jacobian_det = 0.0;
    double max_jacobian_det = 0.0;
    int folded_node_count = 0;
    double mean_beta_over_alpha_gamma = 0.0;
    int node_count = 0;
};

/// Statistics over all interior nodes using central differences.
/// Degenerate nodes are counted, never thrown on. A grid too small to
/// have interior nodes reports the empty-range identities
/// (min = +inf, max = -inf, zero counts).
QualityReport quality_report(const StructuredGrid& grid);

/// One "key: value" line per field.
std::string to_text(const QualityReport& report);

/// Derivatives of the computational coordinates with respect to the
/// physical ones, from inverting the 2x2 forward-derivative matrix.
struct InverseMetrics {
    double xi_x = 0.0;
    double xi_y = 0.0;
    double eta_x = 0.0;
    double eta_y = 0.0;
};

InverseMetrics inverse_metrics(const MetricField& m);

} // namespace meshgen
