#pragma once

#include "meshgen/core.hpp"

namespace meshgen {

/// Blending weights of the weighted-average interior fill. p13 weights
/// the left/right-border term, p24 the bottom/top-border term, per axis.
/// Each pair is complementary: p13 + p24 = 1 within 1e-9.
struct WeightSet {
    double p13_x = 0.5;
    double p24_x = 0.5;
    double p13_y = 0.5;
    double p24_y = 0.5;

    void validate() const;
};

/// Fills all interior nodes of a grid whose boundary rows/columns are
/// already assembled. Boundary nodes are returned untouched. Each
/// interior value blends the linear interpolant across the left/right
/// borders with the one across the bottom/top borders.
StructuredGrid init_interior(const StructuredGrid& boundary, const WeightSet& w);

} // namespace meshgen
