#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace meshgen {

/// A point in the physical (x, y) plane.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2& a, const Point2& b) {
        return a.x == b.x && a.y == b.y;
    }
};

inline bool is_finite(const Point2& p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

inline double distance(const Point2& a, const Point2& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

/// Node address in the computational (xi, eta) lattice.
struct GridIndex {
    int i = 0;
    int j = 0;

    friend bool operator==(const GridIndex& a, const GridIndex& b) {
        return a.i == b.i && a.j == b.j;
    }
};

/// Base error type for this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Solver configuration shared by the relaxation routines.
///
/// tolerance is the maximum nodal displacement per sweep, in physical
/// units. relaxation is the SOR factor (1.0 = plain Gauss-Seidel).
/// source_p / source_q are the constant source terms of the generating
/// equations; zero produces a Laplace grid.
struct SolverConfig {
    double tolerance = 1e-6;
    int max_iterations = 10000;
    double relaxation = 1.0;
    double source_p = 0.0;
    double source_q = 0.0;
    double jacobian_epsilon = 1e-12;

    void validate() const {
        if (!(tolerance > 0.0))
            throw Error("solver config: tolerance must be positive");
        if (max_iterations < 1)
            throw Error("solver config: max_iterations must be at least 1");
        if (!(relaxation > 0.0 && relaxation < 2.0))
            throw Error("solver config: relaxation must lie in (0, 2)");
    }
};

/// Dense (xi+1) x (eta+1) lattice of physical coordinates, indexed [i][j]
/// with i running along xi. Storage is i-fastest so that sweeps and the
/// on-disk node order (j outer, i inner) walk memory contiguously.
class StructuredGrid {
  public:
    StructuredGrid() = default;

    StructuredGrid(std::string name, int xi_partitions, int eta_partitions)
        : name_(std::move(name)), xi_(xi_partitions), eta_(eta_partitions) {
        if (xi_ < 1 || eta_ < 1)
            throw Error("grid '" + name_ + "': partition counts must be >= 1");
        coords_.resize(static_cast<std::size_t>(xi_ + 1) * (eta_ + 1));
    }

    const std::string& name() const { return name_; }
    int xi_partitions() const { return xi_; }
    int eta_partitions() const { return eta_; }
    std::size_t node_count() const { return coords_.size(); }

    Point2& at(int i, int j) { return coords_[index(i, j)]; }
    const Point2& at(int i, int j) const { return coords_[index(i, j)]; }

    bool in_bounds(int i, int j) const {
        return i >= 0 && i <= xi_ && j >= 0 && j <= eta_;
    }

    bool all_finite() const {
        for (const Point2& p : coords_)
            if (!is_finite(p)) return false;
        return true;
    }

    friend bool operator==(const StructuredGrid& a, const StructuredGrid& b) {
        return a.name_ == b.name_ && a.xi_ == b.xi_ && a.eta_ == b.eta_ &&
               a.coords_ == b.coords_;
    }

  private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * (xi_ + 1) + i;
    }

    std::string name_;
    int xi_ = 0;
    int eta_ = 0;
    std::vector<Point2> coords_;
};

/// True iff the node lies on the grid perimeter (the Dirichlet set).
/// Throws on an out-of-bounds index.
bool is_boundary(const GridIndex& idx, const StructuredGrid& grid);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

/// Strict full-token double parse; rejects trailing garbage and non-finite
/// values. Returns false on failure.
bool parse_double(const std::string& token, double& out);

} // namespace meshgen
