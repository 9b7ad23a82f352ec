#include "meshgen/multiblock.hpp"

#include <set>

namespace meshgen {

namespace {

std::vector<Point2> boundary_nodes(const StructuredGrid& g) {
    std::vector<Point2> nodes;
    const int xi = g.xi_partitions();
    const int eta = g.eta_partitions();
    for (int j = 0; j <= eta; ++j)
        for (int i = 0; i <= xi; ++i)
            if (i == 0 || i == xi || j == 0 || j == eta) nodes.push_back(g.at(i, j));
    return nodes;
}

} // namespace

MultiblockMesh generate_multiblock(std::span<const BlockInput> inputs,
                                   const SolverConfig& cfg) {
    if (inputs.empty())
        throw Error("generate_multiblock: no blocks given");

    std::set<std::string> names;
    for (const BlockInput& input : inputs)
        if (!names.insert(input.name).second)
            throw Error("generate_multiblock: duplicate block name '" + input.name + "'");

    MultiblockMesh mesh;
    mesh.blocks.reserve(inputs.size());
    for (const BlockInput& input : inputs) {
        try {
            mesh.blocks.push_back(generate_block(input, cfg));
        } catch (const SolverError& e) {
            throw SolverError("block '" + input.name + "': " + e.what(), e.node());
        } catch (const Error& e) {
            throw Error("block '" + input.name + "': " + e.what());
        }
    }
    return mesh;
}

InterfaceReport check_interfaces(const MultiblockMesh& mesh, double tol) {
    if (!(tol > 0.0))
        throw Error("check_interfaces: tolerance must be positive");
    if (mesh.blocks.size() < 2)
        throw Error("check_interfaces: needs at least 2 blocks");

    std::vector<std::vector<Point2>> nodes;
    nodes.reserve(mesh.blocks.size());
    for (const GeneratedBlock& b : mesh.blocks) nodes.push_back(boundary_nodes(b.grid));

    InterfaceReport report;
    report.tolerance = tol;
    for (std::size_t a = 0; a < mesh.blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < mesh.blocks.size(); ++b) {
            InterfacePair pair;
            pair.block_a = mesh.blocks[a].grid.name();
            pair.block_b = mesh.blocks[b].grid.name();
            for (const Point2& p : nodes[a]) {
                for (const Point2& q : nodes[b]) {
                    const double gap = distance(p, q);
                    if (gap <= tol) {
                        ++pair.matched_node_count;
                        pair.max_gap = std::max(pair.max_gap, gap);
                    }
                }
            }
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

std::string to_text(const InterfaceReport& report) {
    std::string out = "interface_tolerance: " + format_double(report.tolerance) + "\n";
    for (const InterfacePair& p : report.pairs) {
        out += "interface " + p.block_a + " " + p.block_b +
               ": matched=" + std::to_string(p.matched_node_count) +
               " max_gap=" + format_double(p.max_gap) + "\n";
    }
    return out;
}

} // namespace meshgen
