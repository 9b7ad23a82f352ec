#include "meshgen/elliptic.hpp"

namespace meshgen {

namespace {

std::string node_label(const GridIndex& idx) {
    return "(" + std::to_string(idx.i) + ", " + std::to_string(idx.j) + ")";
}

// Sum of the eight neighbor contributions in stencil order.
double gather(const StencilCoefficients& c, double e, double w, double n, double s,
              double ne, double se, double nw, double sw) {
    return c.a_e * e + c.a_w * w + c.a_n * n + c.a_s * s + c.a_ne * ne +
           c.a_se * se + c.a_nw * nw + c.a_sw * sw;
}

} // namespace

MetricField compute_metrics(const StructuredGrid& grid, const GridIndex& idx, double eps) {
    if (is_boundary(idx, grid))
        throw Error("compute_metrics: node " + node_label(idx) + " is not interior");

    const int i = idx.i;
    const int j = idx.j;
    MetricField m;
    m.x_xi = (grid.at(i + 1, j).x - grid.at(i - 1, j).x) / 2.0;
    m.y_xi = (grid.at(i + 1, j).y - grid.at(i - 1, j).y) / 2.0;
    m.x_eta = (grid.at(i, j + 1).x - grid.at(i, j - 1).x) / 2.0;
    m.y_eta = (grid.at(i, j + 1).y - grid.at(i, j - 1).y) / 2.0;

    m.alpha = m.x_eta * m.x_eta + m.y_eta * m.y_eta;
    m.beta = m.x_xi * m.x_eta + m.y_xi * m.y_eta;
    m.gamma = m.x_xi * m.x_xi + m.y_xi * m.y_xi;

    const double det = m.x_xi * m.y_eta - m.x_eta * m.y_xi;
    if (std::abs(det) < eps)
        throw SolverError("singular Jacobian at node " + node_label(idx) +
                              ": |x_xi*y_eta - x_eta*y_xi| = " + format_double(std::abs(det)),
                          idx);
    m.jacobian = 1.0 / det;
    return m;
}

StencilCoefficients stencil_coefficients(const MetricField& m, double source_p,
                                         double source_q, double eps) {
    StencilCoefficients c;
    c.a_p = 2.0 * m.alpha + 2.0 * m.gamma;
    if (c.a_p <= eps)
        throw Error("degenerate stencil: grid collapsed at node (alpha + gamma ~ 0)");

    const double j2 = m.jacobian * m.jacobian;
    const double px = source_p / (2.0 * j2);
    const double qx = source_q / (2.0 * j2);
    c.a_e = m.alpha + px;
    c.a_w = m.alpha - px;
    c.a_n = m.gamma + qx;
    c.a_s = m.gamma - qx;
    c.a_ne = -m.beta / 2.0;
    c.a_nw = m.beta / 2.0;
    c.a_se = m.beta / 2.0;
    c.a_sw = -m.beta / 2.0;
    return c;
}

double sweep(StructuredGrid& grid, const SolverConfig& cfg) {
    cfg.validate();
    const int xi = grid.xi_partitions();
    const int eta = grid.eta_partitions();

    double max_change = 0.0;
    for (int j = 1; j < eta; ++j) {
        for (int i = 1; i < xi; ++i) {
            const GridIndex idx{i, j};
            const MetricField m = compute_metrics(grid, idx, cfg.jacobian_epsilon);
            const StencilCoefficients c =
                stencil_coefficients(m, cfg.source_p, cfg.source_q, cfg.jacobian_epsilon);

            const Point2& e = grid.at(i + 1, j);
            const Point2& w = grid.at(i - 1, j);
            const Point2& n = grid.at(i, j + 1);
            const Point2& s = grid.at(i, j - 1);
            const Point2& ne = grid.at(i + 1, j + 1);
            const Point2& se = grid.at(i + 1, j - 1);
            const Point2& nw = grid.at(i - 1, j + 1);
            const Point2& sw = grid.at(i - 1, j - 1);

            const double gs_x =
                gather(c, e.x, w.x, n.x, s.x, ne.x, se.x, nw.x, sw.x) / c.a_p;
            const double gs_y =
                gather(c, e.y, w.y, n.y, s.y, ne.y, se.y, nw.y, sw.y) / c.a_p;

            Point2& p = grid.at(i, j);
            const double new_x = p.x + cfg.relaxation * (gs_x - p.x);
            const double new_y = p.y + cfg.relaxation * (gs_y - p.y);
            if (!std::isfinite(new_x) || !std::isfinite(new_y))
                throw SolverError("divergence: non-finite update at node " + node_label(idx),
                                  idx);

            const double dx = new_x - p.x;
            const double dy = new_y - p.y;
            const double change = std::sqrt(dx * dx + dy * dy);
            if (change > max_change) max_change = change;
            p.x = new_x;
            p.y = new_y;
        }
    }
    return max_change;
}

SmoothResult smooth(const StructuredGrid& grid, const SolverConfig& cfg) {
    cfg.validate();
    if (!grid.all_finite())
        throw Error("smooth: grid '" + grid.name() + "' contains non-finite nodes");

    SmoothResult result{grid, SolveReport{}};
    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        const double change = sweep(result.grid, cfg);
        result.report.iterations = iter;
        result.report.final_max_change = change;
        if (change <= cfg.tolerance) {
            result.report.converged = true;
            break;
        }
    }
    result.report.residual_max = laplace_residual(result.grid, cfg);
    return result;
}

double laplace_residual(const StructuredGrid& grid, const SolverConfig& cfg) {
    const int xi = grid.xi_partitions();
    const int eta = grid.eta_partitions();

    double residual = 0.0;
    for (int j = 1; j < eta; ++j) {
        for (int i = 1; i < xi; ++i) {
            const MetricField m =
                compute_metrics(grid, GridIndex{i, j}, cfg.jacobian_epsilon);
            const StencilCoefficients c =
                stencil_coefficients(m, cfg.source_p, cfg.source_q, cfg.jacobian_epsilon);

            const Point2& e = grid.at(i + 1, j);
            const Point2& w = grid.at(i - 1, j);
            const Point2& n = grid.at(i, j + 1);
            const Point2& s = grid.at(i, j - 1);
            const Point2& ne = grid.at(i + 1, j + 1);
            const Point2& se = grid.at(i + 1, j - 1);
            const Point2& nw = grid.at(i - 1, j + 1);
            const Point2& sw = grid.at(i - 1, j - 1);
            const Point2& p = grid.at(i, j);

            const double rx =
                gather(c, e.x, w.x, n.x, s.x, ne.x, se.x, nw.x, sw.x) - c.a_p * p.x;
            const double ry =
                gather(c, e.y, w.y, n.y, s.y, ne.y, se.y, nw.y, sw.y) - c.a_p * p.y;
            residual = std::max({residual, std::abs(rx), std::abs(ry)});
        }
    }
    return residual;
}

} // namespace meshgen
