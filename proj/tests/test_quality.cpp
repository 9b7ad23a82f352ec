#include "meshgen/quality.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace meshgen;
using testutil::Rng;

TEST_SUITE("quality") {

TEST_CASE("uniform lattice statistics") {
    const StructuredGrid g = testutil::make_grid("u", 5, 4, [](int i, int j) {
        return Point2{static_cast<double>(i), static_cast<double>(j)};
    });
    const QualityReport r = quality_report(g);
    CHECK(r.min_jacobian_det == 1.0);
    CHECK(r.max_jacobian_det == 1.0);
    CHECK(r.folded_node_count == 0);
    CHECK(r.mean_beta_over_alpha_gamma == 0.0);
    CHECK(r.node_count == 4 * 3);
    CHECK(to_text(r).find("min_jacobian_det: 1\n") != std::string::npos);
}

TEST_CASE("mirroring flips every determinant") {
    const StructuredGrid g = testutil::make_grid("m", 4, 4, [](int i, int j) {
        return Point2{static_cast<double>(-i), static_cast<double>(j)};
    });
    const QualityReport r = quality_report(g);
    CHECK(r.min_jacobian_det == -1.0);
    CHECK(r.max_jacobian_det == -1.0);
    CHECK(r.folded_node_count == r.node_count);
}

TEST_CASE("sheared lattice reports its skew") {
    const StructuredGrid g = testutil::make_grid("s", 4, 4, [](int i, int j) {
        return Point2{i + 0.5 * j, static_cast<double>(j)};
    });
    const QualityReport r = quality_report(g);
    CHECK(r.min_jacobian_det == 1.0);
    const double expected = 0.5 / std::sqrt(1.25);
    CHECK(r.mean_beta_over_alpha_gamma == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("folded count and minimum determinant agree") {
    Rng rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const StructuredGrid g = testutil::make_grid("f", 5, 5, [&](int i, int j) {
            return Point2{i + rng.uniform(-0.7, 0.7), j + rng.uniform(-0.7, 0.7)};
        });
        const QualityReport r = quality_report(g);
        CHECK((r.folded_node_count == 0) == (r.min_jacobian_det > 0.0));
    }
}

TEST_CASE("grids without interior nodes report empty statistics") {
    const StructuredGrid g = testutil::square_boundary(1, 1);
    const QualityReport r = quality_report(g);
    CHECK(r.node_count == 0);
    CHECK(r.folded_node_count == 0);
    CHECK(std::isinf(r.min_jacobian_det));
}

TEST_CASE("inverse metrics invert the forward derivatives") {
    MetricField identity;
    identity.x_xi = 1.0;
    identity.y_eta = 1.0;
    identity.jacobian = 1.0;
    const InverseMetrics a = inverse_metrics(identity);
    CHECK(a.xi_x == 1.0);
    CHECK(a.xi_y == 0.0);
    CHECK(a.eta_x == 0.0);
    CHECK(a.eta_y == 1.0);

    MetricField stretched;
    stretched.x_xi = 2.0;
    stretched.y_eta = 1.0;
    stretched.jacobian = 0.5;
    const InverseMetrics b = inverse_metrics(stretched);
    CHECK(b.xi_x == 0.5);
    CHECK(b.xi_y == 0.0);
    CHECK(b.eta_x == 0.0);
    CHECK(b.eta_y == 1.0);
}

TEST_CASE("inverse times forward is the identity matrix") {
    Rng rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        MetricField m;
        m.x_xi = rng.uniform(-3, 3);
        m.x_eta = rng.uniform(-3, 3);
        m.y_xi = rng.uniform(-3, 3);
        m.y_eta = rng.uniform(-3, 3);
        const double det = m.x_xi * m.y_eta - m.x_eta * m.y_xi;
        if (std::abs(det) < 0.1) continue;
        m.jacobian = 1.0 / det;

        const InverseMetrics inv = inverse_metrics(m);
        const double p11 = inv.xi_x * m.x_xi + inv.xi_y * m.y_xi;
        const double p12 = inv.xi_x * m.x_eta + inv.xi_y * m.y_eta;
        const double p21 = inv.eta_x * m.x_xi + inv.eta_y * m.y_xi;
        const double p22 = inv.eta_x * m.x_eta + inv.eta_y * m.y_eta;
        CHECK(std::abs(p11 - 1.0) <= 1e-12);
        CHECK(std::abs(p12) <= 1e-12);
        CHECK(std::abs(p21) <= 1e-12);
        CHECK(std::abs(p22 - 1.0) <= 1e-12);
    }
}

} // TEST_SUITE
