#pragma once

#include "meshgen/pipeline.hpp"

namespace meshgen {

/// Several independently generated monoblocks, in input order.
struct MultiblockMesh {
    std::vector<GeneratedBlock> blocks;
};

struct InterfacePair {
    std::string block_a;
    std::string block_b;
    int matched_node_count = 0;
    double max_gap = 0.0; // over matched pairs only
};

struct InterfaceReport {
    double tolerance = 0.0;
    std::vector<InterfacePair> pairs;
};

/// Runs generate_block over every input. Blocks are independent; a
/// failure aborts the whole run naming the failing block. Names must be
/// unique.
MultiblockMesh generate_multiblock(std::span<const BlockInput> inputs,
                                   const SolverConfig& cfg);

/// Brute-force boundary-node proximity count for every unordered block
/// pair: pairs of boundary nodes (one per block) within Euclidean
/// distance tol, plus the largest gap among them.
InterfaceReport check_interfaces(const MultiblockMesh& mesh, double tol);

std::string to_text(const InterfaceReport& report);

} // namespace meshgen
