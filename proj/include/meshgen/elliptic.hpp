#pragma once

#include "meshgen/core.hpp"

namespace meshgen {

/// Transformation metrics at one interior node. First derivatives are
/// central differences with unit computational spacing; alpha, beta and
/// gamma are the generating-equation coefficients and jacobian is
/// 1 / (x_xi * y_eta - x_eta * y_xi).
struct MetricField {
    double x_xi = 0.0;
    double x_eta = 0.0;
    double y_xi = 0.0;
    double y_eta = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double jacobian = 0.0;
};

/// Nine-point stencil coefficients of the discretized generating
/// equations, labeled by cardinal direction around the center node.
struct StencilCoefficients {
    double a_p = 0.0;
    double a_e = 0.0;
    double a_w = 0.0;
    double a_n = 0.0;
    double a_s = 0.0;
    double a_ne = 0.0;
    double a_se = 0.0;
    double a_nw = 0.0;
    double a_sw = 0.0;
};

/// Outcome of a smoothing run.
struct SolveReport {
    int iterations = 0;
    double final_max_change = 0.0;
    bool converged = false;
    double residual_max = 0.0;
};

class SolverError : public Error {
  public:
    SolverError(const std::string& what, GridIndex node) : Error(what), node_(node) {}
    GridIndex node() const { return node_; }

  private:
    GridIndex node_;
};

/// Central-difference metrics at an interior node. Throws SolverError
/// naming the node when |x_xi * y_eta - x_eta * y_xi| < eps.
MetricField compute_metrics(const StructuredGrid& grid, const GridIndex& idx, double eps);

/// Stencil coefficients from one node's metrics and the source terms.
/// Throws when a_p degenerates (grid collapsed at the node).
StencilCoefficients stencil_coefficients(const MetricField& m, double source_p,
                                         double source_q, double eps = 1e-12);

/// One in-place Gauss-Seidel pass over the interior in lexicographic
/// order (j outer, i inner, both ascending). Metrics are recomputed from
/// current values at every node; x and y are updated together from the
/// same coefficients, under the configured relaxation factor. Returns
/// the maximum Euclidean nodal displacement.
double sweep(StructuredGrid& grid, const SolverConfig& cfg);

struct SmoothResult {
    StructuredGrid grid;
    SolveReport report;
};

/// Repeats sweeps until the displacement drops to cfg.tolerance or
/// cfg.max_iterations is reached. Non-convergence is reported, not
/// thrown; solver errors (singular Jacobian, divergence) propagate.
SmoothResult smooth(const StructuredGrid& grid, const SolverConfig& cfg);

/// Maximum absolute discrete residual of the generating equations over
/// interior nodes, taken over both coordinate systems.
double laplace_residual(const StructuredGrid& grid, const SolverConfig& cfg);

} // namespace meshgen
