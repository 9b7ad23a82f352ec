#pragma once

#include "meshgen/blockio.hpp"
#include "meshgen/elliptic.hpp"
#include "meshgen/quality.hpp"

namespace meshgen {

struct GeneratedBlock {
    StructuredGrid grid;
    SolveReport solve;
    QualityReport quality;
};

/// Full monoblock generation: border splines, arc-length resampling to
/// the target partition counts, weighted-average interior fill, elliptic
/// smoothing, quality diagnostics. Corner nodes average the endpoint
/// samples of the two adjacent borders, which must agree within 1e-6.
GeneratedBlock generate_block(const BlockInput& input, const SolverConfig& cfg);

} // namespace meshgen
