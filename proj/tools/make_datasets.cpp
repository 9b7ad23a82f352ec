// Regenerates the example block files under data/ from the builders in
// meshgen::datasets. Run after changing a builder, then re-run the tests.
#include "meshgen/datasets.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    const std::filesystem::path out_dir = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(out_dir);

    std::vector<meshgen::BlockInput> blocks;
    for (int refinement : {1, 2}) {
        blocks.push_back(meshgen::datasets::cutout(refinement));
        blocks.push_back(meshgen::datasets::bottle(refinement));
        blocks.push_back(meshgen::datasets::doubly_connected(refinement));
        for (meshgen::BlockInput& b : meshgen::datasets::igapo(refinement))
            blocks.push_back(std::move(b));
    }

    for (const meshgen::BlockInput& b : blocks) {
        const auto path = out_dir / (b.name + ".block");
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << path << "\n";
            return 1;
        }
        out << meshgen::datasets::write_block_file(b);
        std::cout << path.string() << "\n";
    }
    return 0;
}
