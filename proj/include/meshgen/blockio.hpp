#pragma once

#include "meshgen/core.hpp"
#include "meshgen/tfi.hpp"

#include <span>

namespace meshgen {

/// One block definition: the four border point lists, the target
/// partition counts and the blending weights.
///
/// Border roles and orientation:
///   gamma1 - left border,   ordered bottom to top (increasing j)
///   gamma2 - top border,    ordered left to right (increasing i)
///   gamma3 - right border,  ordered bottom to top (increasing j)
///   gamma4 - bottom border, ordered left to right (increasing i)
/// Adjacent borders must meet at their shared corner within 1e-6.
struct BlockInput {
    std::string name;
    int xi_partitions = 0;
    int eta_partitions = 0;
    WeightSet weights;
    std::vector<Point2> gamma1;
    std::vector<Point2> gamma2;
    std::vector<Point2> gamma3;
    std::vector<Point2> gamma4;
};

enum class ParseCode {
    io,
    missing_section,
    bad_number,
    weight_sum,
    weight_range,
    corner_mismatch,
    border_too_short,
    bad_partitions,
    dimension_mismatch,
};

class ParseError : public Error {
  public:
    ParseError(ParseCode code, int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), code_(code), line_(line) {}

    ParseCode code() const { return code_; }
    int line() const { return line_; }

  private:
    ParseCode code_;
    int line_;
};

/// Parses the line-oriented block format:
///
///   BLOCK <name>
///   PARTITIONS <xi> <eta>
///   WEIGHTS_X <p13_x> <p24_x>
///   WEIGHTS_Y <p13_y> <p24_y>
///   BORDER GAMMA1 <point-count>
///   <x> <y>                       (point-count lines)
///   BORDER GAMMA2 ... GAMMA3 ... GAMMA4 ...
///   END
///
/// '#' starts a comment, blank lines are ignored, sections appear in the
/// order shown. Each violation raises ParseError with a stable code and
/// the offending line number.
BlockInput parse_block_file(const std::string& text);

/// Mesh text format: "MESH <name> <xi> <eta>" followed by one
/// "i j x y" line per node, j outer ascending, i inner ascending.
/// Coordinates use shortest round-trip formatting, so
/// parse_mesh(write_mesh(g)) reproduces g exactly.
std::string write_mesh(const StructuredGrid& grid);

StructuredGrid parse_mesh(const std::string& text);

/// Legacy ASCII VTK structured grid, point order i fastest, z = 0.
std::string write_vtk(const StructuredGrid& grid);

/// SVG wireframe of one or more grids: one polyline per constant-j line
/// and per constant-i line of each grid. The viewBox is the joint
/// bounding box padded by 2% of its larger span; the y axis points up.
/// A non-positive stroke_width selects one relative to the span.
std::string render_svg(std::span<const StructuredGrid> grids, double stroke_width);

} // namespace meshgen
