#include "meshgen/datasets.hpp"
#include "meshgen/multiblock.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_not_converged = 2;
constexpr int exit_folded = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw meshgen::Error("cannot read '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw meshgen::Error("cannot write '" + path + "'");
    out << content;
    if (!out) throw meshgen::Error("cannot write '" + path + "'");
}

struct SolverFlags {
    double tol = 1e-6;
    int max_iters = 10000;
    double omega = 1.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tol", tol, "Convergence tolerance (max nodal displacement)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-iters", max_iters, "Iteration limit")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--omega", omega, "Relaxation factor in (0, 2)")
            ->check(CLI::Range(1e-9, 2.0 - 1e-9));
    }

    meshgen::SolverConfig config() const {
        meshgen::SolverConfig cfg;
        cfg.tolerance = tol;
        cfg.max_iterations = max_iters;
        cfg.relaxation = omega;
        return cfg;
    }
};

void print_diagnostics(const meshgen::GeneratedBlock& b) {
    std::cerr << "block " << b.grid.name() << ": iterations=" << b.solve.iterations
              << " converged=" << (b.solve.converged ? "yes" : "no")
              << " final_change=" << meshgen::format_double(b.solve.final_max_change)
              << " residual=" << meshgen::format_double(b.solve.residual_max)
              << " min_det=" << meshgen::format_double(b.quality.min_jacobian_det)
              << " folded=" << b.quality.folded_node_count << "\n";
}

int run_generate(const std::string& block_path, const SolverFlags& solver,
                 const std::string& out_path, const std::string& vtk_path,
                 const std::string& svg_path, bool allow_folded) {
    const meshgen::BlockInput input = meshgen::parse_block_file(read_file(block_path));
    const meshgen::GeneratedBlock block = meshgen::generate_block(input, solver.config());
    print_diagnostics(block);

    if (!block.solve.converged) {
        std::cerr << "error: block " << block.grid.name() << " did not converge within "
                  << solver.max_iters << " iterations\n";
        return exit_not_converged;
    }
    if (block.quality.folded_node_count > 0) {
        if (!allow_folded) {
            std::cerr << "error: mesh is folded at " << block.quality.folded_node_count
                      << " node(s)\n";
            return exit_folded;
        }
        std::cerr << "warning: mesh is folded at " << block.quality.folded_node_count
                  << " node(s)\n";
    }

    if (!out_path.empty()) write_file(out_path, meshgen::write_mesh(block.grid));
    if (!vtk_path.empty()) write_file(vtk_path, meshgen::write_vtk(block.grid));
    if (!svg_path.empty()) {
        const meshgen::StructuredGrid grids[] = {block.grid};
        write_file(svg_path, meshgen::render_svg(grids, 0.0));
    }
    return exit_ok;
}

int run_multiblock(const std::vector<std::string>& paths, const SolverFlags& solver,
                   const std::string& svg_path, const std::string& out_dir,
                   double interface_tol, bool allow_folded) {
    std::vector<meshgen::BlockInput> inputs;
    inputs.reserve(paths.size());
    for (const std::string& path : paths)
        inputs.push_back(meshgen::parse_block_file(read_file(path)));

    const meshgen::MultiblockMesh mesh = meshgen::generate_multiblock(inputs, solver.config());
    for (const meshgen::GeneratedBlock& b : mesh.blocks) print_diagnostics(b);

    for (const meshgen::GeneratedBlock& b : mesh.blocks) {
        if (!b.solve.converged) {
            std::cerr << "error: block " << b.grid.name() << " did not converge within "
                      << solver.max_iters << " iterations\n";
            return exit_not_converged;
        }
    }
    for (const meshgen::GeneratedBlock& b : mesh.blocks) {
        if (b.quality.folded_node_count > 0) {
            if (!allow_folded) {
                std::cerr << "error: block " << b.grid.name() << " is folded at "
                          << b.quality.folded_node_count << " node(s)\n";
                return exit_folded;
            }
            std::cerr << "warning: block " << b.grid.name() << " is folded at "
                      << b.quality.folded_node_count << " node(s)\n";
        }
    }

    for (const meshgen::GeneratedBlock& b : mesh.blocks) {
        const auto path = std::filesystem::path(out_dir) / (b.grid.name() + ".mesh");
        write_file(path.string(), meshgen::write_mesh(b.grid));
    }
    if (!svg_path.empty()) {
        std::vector<meshgen::StructuredGrid> grids;
        grids.reserve(mesh.blocks.size());
        for (const meshgen::GeneratedBlock& b : mesh.blocks) grids.push_back(b.grid);
        write_file(svg_path, meshgen::render_svg(grids, 0.0));
    }
    if (mesh.blocks.size() >= 2)
        std::cout << meshgen::to_text(meshgen::check_interfaces(mesh, interface_tol));
    return exit_ok;
}

int run_quality(const std::string& mesh_path) {
    const meshgen::StructuredGrid grid = meshgen::parse_mesh(read_file(mesh_path));
    const meshgen::QualityReport report = meshgen::quality_report(grid);
    std::cout << meshgen::to_text(report);
    return report.folded_node_count == 0 ? exit_ok : exit_folded;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structured 2D mesh generator in generalized coordinates"};
    app.require_subcommand(1);

    std::string block_path, mesh_path, out_path, vtk_path, svg_path;
    std::string out_dir = ".";
    std::vector<std::string> block_paths;
    double interface_tol = 1e-6;
    bool allow_folded = false;
    SolverFlags gen_solver, multi_solver;

    CLI::App* gen = app.add_subcommand("generate", "Generate a monoblock mesh");
    gen->add_option("block_file", block_path, "Block definition file")->required();
    gen_solver.attach(gen);
    gen->add_option("--out", out_path, "Write the mesh text file here");
    gen->add_option("--vtk", vtk_path, "Write a legacy ASCII VTK file here");
    gen->add_option("--svg", svg_path, "Write an SVG wireframe here");
    gen->add_flag("--allow-folded", allow_folded, "Demote a folded mesh to a warning");

    CLI::App* multi = app.add_subcommand("multiblock", "Generate several blocks together");
    multi->add_option("block_files", block_paths, "Block definition files")
        ->required()
        ->expected(-1);
    multi_solver.attach(multi);
    multi->add_option("--svg", svg_path, "Write a combined SVG wireframe here");
    multi->add_option("--out-dir", out_dir, "Directory for the per-block <name>.mesh files");
    multi->add_option("--interface-tol", interface_tol,
                      "Node-matching tolerance for the interface report")
        ->check(CLI::PositiveNumber);
    multi->add_flag("--allow-folded", allow_folded, "Demote folded meshes to warnings");

    CLI::App* quality = app.add_subcommand("quality", "Report mesh diagnostics");
    quality->add_option("mesh_file", mesh_path, "Mesh text file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (gen->parsed())
            return run_generate(block_path, gen_solver, out_path, vtk_path, svg_path,
                                allow_folded);
        if (multi->parsed())
            return run_multiblock(block_paths, multi_solver, svg_path, out_dir,
                                  interface_tol, allow_folded);
        return run_quality(mesh_path);
    } catch (const meshgen::SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_not_converged;
    } catch (const meshgen::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) { // out-of-memory and the like
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
}
