#include "meshgen/core.hpp"

#include <charconv>
#include <system_error>

namespace meshgen {

bool is_boundary(const GridIndex& idx, const StructuredGrid& grid) {
    if (!grid.in_bounds(idx.i, idx.j))
        throw Error("is_boundary: index (" + std::to_string(idx.i) + ", " +
                    std::to_string(idx.j) + ") outside grid '" + grid.name() + "'");
    return idx.i == 0 || idx.i == grid.xi_partitions() || idx.j == 0 ||
           idx.j == grid.eta_partitions();
}

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

bool parse_double(const std::string& token, double& out) {
    if (token.empty()) return false;
    const char* first = token.data();
    const char* last = first + token.size();
    double value = 0.0;
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last) return false;
    if (!std::isfinite(value)) return false;
    out = value;
    return true;
}

} // namespace meshgen
