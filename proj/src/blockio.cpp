#include "meshgen/blockio.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace meshgen {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

// Comment-stripped, tokenized non-blank lines with their 1-based numbers.
std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream stream(text);
    std::string raw;
    int number = 0;
    while (std::getline(stream, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

class BlockReader {
  public:
    explicit BlockReader(const std::string& text) : lines_(tokenize(text)) {}

    BlockInput read() {
        BlockInput block;
        block.name = read_keyword_arg("BLOCK");
        read_partitions(block);
        read_weights(block);
        block.gamma1 = read_border("GAMMA1");
        block.gamma2 = read_border("GAMMA2");
        block.gamma3 = read_border("GAMMA3");
        block.gamma4 = read_border("GAMMA4");
        expect_keyword("END");
        check_corners(block);
        return block;
    }

  private:
    const Line& next(const std::string& wanted) {
        if (pos_ >= lines_.size())
            throw ParseError(ParseCode::missing_section, last_line_number() + 1,
                             "missing " + wanted + " section");
        return lines_[pos_++];
    }

    int last_line_number() const {
        return lines_.empty() ? 0 : lines_.back().number;
    }

    std::string read_keyword_arg(const std::string& keyword) {
        const Line& line = next(keyword);
        if (line.tokens.size() != 2 || line.tokens[0] != keyword)
            throw ParseError(ParseCode::missing_section, line.number,
                             "expected \"" + keyword + " <name>\"");
        return line.tokens[1];
    }

    void expect_keyword(const std::string& keyword) {
        const Line& line = next(keyword);
        if (line.tokens.size() != 1 || line.tokens[0] != keyword)
            throw ParseError(ParseCode::missing_section, line.number,
                             "expected \"" + keyword + "\"");
    }

    double number_token(const Line& line, std::size_t k) {
        double value = 0.0;
        if (!parse_double(line.tokens[k], value))
            throw ParseError(ParseCode::bad_number, line.number,
                             "malformed number \"" + line.tokens[k] + "\"");
        return value;
    }

    int integer_token(const Line& line, std::size_t k) {
        const double value = number_token(line, k);
        if (value != std::trunc(value) || value < -2147483648.0 || value > 2147483647.0)
            throw ParseError(ParseCode::bad_number, line.number,
                             "expected integer, got \"" + line.tokens[k] + "\"");
        return static_cast<int>(value);
    }

    void read_partitions(BlockInput& block) {
        const Line& line = next("PARTITIONS");
        if (line.tokens.size() != 3 || line.tokens[0] != "PARTITIONS")
            throw ParseError(ParseCode::missing_section, line.number,
                             "expected \"PARTITIONS <xi> <eta>\"");
        block.xi_partitions = integer_token(line, 1);
        block.eta_partitions = integer_token(line, 2);
        if (block.xi_partitions < 1 || block.eta_partitions < 1)
            throw ParseError(ParseCode::bad_partitions, line.number,
                             "partition counts must be >= 1");
    }

    void read_weights(BlockInput& block) {
        const Line& lx = next("WEIGHTS_X");
        if (lx.tokens.size() != 3 || lx.tokens[0] != "WEIGHTS_X")
            throw ParseError(ParseCode::missing_section, lx.number,
                             "expected \"WEIGHTS_X <p13> <p24>\"");
        block.weights.p13_x = number_token(lx, 1);
        block.weights.p24_x = number_token(lx, 2);
        check_weight_pair(lx, block.weights.p13_x, block.weights.p24_x);

        const Line& ly = next("WEIGHTS_Y");
        if (ly.tokens.size() != 3 || ly.tokens[0] != "WEIGHTS_Y")
            throw ParseError(ParseCode::missing_section, ly.number,
                             "expected \"WEIGHTS_Y <p13> <p24>\"");
        block.weights.p13_y = number_token(ly, 1);
        block.weights.p24_y = number_token(ly, 2);
        check_weight_pair(ly, block.weights.p13_y, block.weights.p24_y);
    }

    void check_weight_pair(const Line& line, double p13, double p24) {
        if (!(p13 >= 0.0 && p13 <= 1.0 && p24 >= 0.0 && p24 <= 1.0))
            throw ParseError(ParseCode::weight_range, line.number,
                             "weights must lie in [0, 1]");
        if (std::abs(p13 + p24 - 1.0) > 1e-9)
            throw ParseError(ParseCode::weight_sum, line.number,
                             "weights must sum to 1");
    }

    std::vector<Point2> read_border(const std::string& label) {
        const Line& head = next("BORDER " + label);
        if (head.tokens.size() != 3 || head.tokens[0] != "BORDER" || head.tokens[1] != label)
            throw ParseError(ParseCode::missing_section, head.number,
                             "expected \"BORDER " + label + " <point-count>\"");
        const int count = integer_token(head, 2);
        if (count < 2)
            throw ParseError(ParseCode::border_too_short, head.number,
                             label + " needs at least 2 points");
        if (static_cast<std::size_t>(count) > lines_.size() - pos_)
            throw ParseError(ParseCode::missing_section, head.number,
                             label + " declares more points than the file contains");

        std::vector<Point2> points;
        points.reserve(static_cast<std::size_t>(count));
        for (int k = 0; k < count; ++k) {
            const Line& line = next(label + " point");
            if (line.tokens.size() != 2)
                throw ParseError(ParseCode::bad_number, line.number,
                                 "expected \"<x> <y>\"");
            points.push_back({number_token(line, 0), number_token(line, 1)});
        }

        int distinct = 1;
        for (std::size_t k = 1; k < points.size(); ++k)
            if (!(points[k] == points[k - 1])) ++distinct;
        if (distinct < 2)
            throw ParseError(ParseCode::border_too_short, head.number,
                             label + " needs at least 2 distinct points");
        return points;
    }

    void check_corners(const BlockInput& b) {
        constexpr double tol = 1e-6;
        const auto check = [&](const Point2& p, const Point2& q, const char* which) {
            if (distance(p, q) > tol)
                throw ParseError(ParseCode::corner_mismatch, last_line_number(),
                                 std::string("corner mismatch at ") + which +
                                     ": distance " + format_double(distance(p, q)));
        };
        check(b.gamma1.front(), b.gamma4.front(), "bottom-left (GAMMA1/GAMMA4)");
        check(b.gamma1.back(), b.gamma2.front(), "top-left (GAMMA1/GAMMA2)");
        check(b.gamma4.back(), b.gamma3.front(), "bottom-right (GAMMA4/GAMMA3)");
        check(b.gamma2.back(), b.gamma3.back(), "top-right (GAMMA2/GAMMA3)");
    }

    std::vector<Line> lines_;
    std::size_t pos_ = 0;
};

} // namespace

BlockInput parse_block_file(const std::string& text) {
    return BlockReader(text).read();
}

std::string write_mesh(const StructuredGrid& grid) {
    std::string out = "MESH " + grid.name() + " " + std::to_string(grid.xi_partitions()) +
                      " " + std::to_string(grid.eta_partitions()) + "\n";
    for (int j = 0; j <= grid.eta_partitions(); ++j) {
        for (int i = 0; i <= grid.xi_partitions(); ++i) {
            const Point2& p = grid.at(i, j);
            out += std::to_string(i) + " " + std::to_string(j) + " " +
                   format_double(p.x) + " " + format_double(p.y) + "\n";
        }
    }
    return out;
}

StructuredGrid parse_mesh(const std::string& text) {
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty())
        throw ParseError(ParseCode::missing_section, 1, "missing MESH header");

    const Line& head = lines[0];
    if (head.tokens.size() != 4 || head.tokens[0] != "MESH")
        throw ParseError(ParseCode::missing_section, head.number,
                         "expected \"MESH <name> <xi> <eta>\"");
    double xi_val = 0.0, eta_val = 0.0;
    if (!parse_double(head.tokens[2], xi_val) || !parse_double(head.tokens[3], eta_val) ||
        xi_val != std::trunc(xi_val) || eta_val != std::trunc(eta_val) ||
        xi_val < 0.0 || xi_val > 1e9 || eta_val < 0.0 || eta_val > 1e9)
        throw ParseError(ParseCode::bad_number, head.number, "malformed dimensions");
    const int xi = static_cast<int>(xi_val);
    const int eta = static_cast<int>(eta_val);
    if (xi < 1 || eta < 1)
        throw ParseError(ParseCode::bad_partitions, head.number,
                         "partition counts must be >= 1");

    const std::size_t expected = static_cast<std::size_t>(xi + 1) * (eta + 1);
    if (lines.size() - 1 != expected)
        throw ParseError(ParseCode::dimension_mismatch, lines.back().number,
                         "expected " + std::to_string(expected) + " nodes, got " +
                             std::to_string(lines.size() - 1));

    StructuredGrid grid(head.tokens[1], xi, eta);
    std::size_t k = 1;
    for (int j = 0; j <= eta; ++j) {
        for (int i = 0; i <= xi; ++i, ++k) {
            const Line& line = lines[k];
            if (line.tokens.size() != 4)
                throw ParseError(ParseCode::bad_number, line.number,
                                 "expected \"i j x y\"");
            double fi = 0.0, fj = 0.0;
            Point2 p;
            if (!parse_double(line.tokens[0], fi) || !parse_double(line.tokens[1], fj) ||
                !parse_double(line.tokens[2], p.x) || !parse_double(line.tokens[3], p.y))
                throw ParseError(ParseCode::bad_number, line.number, "malformed number");
            if (fi != i || fj != j)
                throw ParseError(ParseCode::dimension_mismatch, line.number,
                                 "node out of order: expected (" + std::to_string(i) +
                                     ", " + std::to_string(j) + ")");
            grid.at(i, j) = p;
        }
    }
    return grid;
}

std::string write_vtk(const StructuredGrid& grid) {
    const int nx = grid.xi_partitions() + 1;
    const int ny = grid.eta_partitions() + 1;
    std::string out;
    out += "# vtk DataFile Version 3.0\n";
    out += grid.name() + "\n";
    out += "ASCII\n";
    out += "DATASET STRUCTURED_GRID\n";
    out += "DIMENSIONS " + std::to_string(nx) + " " + std::to_string(ny) + " 1\n";
    out += "POINTS " + std::to_string(nx * ny) + " double\n";
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const Point2& p = grid.at(i, j);
            out += format_double(p.x) + " " + format_double(p.y) + " 0\n";
        }
    }
    return out;
}

std::string render_svg(std::span<const StructuredGrid> grids, double stroke_width) {
    if (grids.empty())
        throw Error("render_svg: no grids given");

    double min_x = std::numeric_limits<double>::infinity();
    double max_x = -min_x;
    double min_y = min_x;
    double max_y = -min_x;
    for (const StructuredGrid& g : grids) {
        for (int j = 0; j <= g.eta_partitions(); ++j) {
            for (int i = 0; i <= g.xi_partitions(); ++i) {
                const Point2& p = g.at(i, j);
                min_x = std::min(min_x, p.x);
                max_x = std::max(max_x, p.x);
                min_y = std::min(min_y, p.y);
                max_y = std::max(max_y, p.y);
            }
        }
    }
    const double span = std::max(max_x - min_x, max_y - min_y);
    if (!(span > 0.0))
        throw Error("render_svg: degenerate bounding box");
    const double margin = 0.02 * span;
    if (!(stroke_width > 0.0)) stroke_width = span / 500.0;

    // The y axis is flipped by emitting -y, so +y points up on screen.
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
           format_double(min_x - margin) + " " + format_double(-max_y - margin) + " " +
           format_double(max_x - min_x + 2.0 * margin) + " " +
           format_double(max_y - min_y + 2.0 * margin) + "\">\n";

    const auto polyline = [&](const StructuredGrid& g, bool constant_j, int fixed) {
        out += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"" +
               format_double(stroke_width) + "\" points=\"";
        const int count = constant_j ? g.xi_partitions() : g.eta_partitions();
        for (int k = 0; k <= count; ++k) {
            const Point2& p = constant_j ? g.at(k, fixed) : g.at(fixed, k);
            if (k > 0) out += " ";
            out += format_double(p.x) + "," + format_double(-p.y + 0.0);
        }
        out += "\"/>\n";
    };

    for (const StructuredGrid& g : grids) {
        for (int j = 0; j <= g.eta_partitions(); ++j) polyline(g, true, j);
        for (int i = 0; i <= g.xi_partitions(); ++i) polyline(g, false, i);
    }
    out += "</svg>\n";
    return out;
}

} // namespace meshgen
