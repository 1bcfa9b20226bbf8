#include "coflow/grid.hpp"

namespace coflow {

const char* segment_name(Segment s) {
    switch (s) {
        case Segment::wall: return "wall";
        case Segment::inlet_outer: return "inlet_outer";
        case Segment::inlet_inner: return "inlet_inner";
        case Segment::axis: return "axis";
        case Segment::outlet: return "outlet";
    }
    return "?";
}

Grid make_grid(int n_z, int n_r, Real length_L, Real radius_a) {
    if (n_z <= 0 || n_r <= 0) throw ConfigError("make_grid: cell counts must be positive");
    if (length_L <= 0) throw ConfigError("make_grid: tube length must be positive");
    if (radius_a <= 1.0)
        throw ConfigError("make_grid: outer radius must exceed the inner tube radius (1)");
    Grid g;
    g.nz = n_z;
    g.nr = n_r;
    g.length = length_L;
    g.radius = radius_a;
    g.dz = length_L / n_z;
    g.dr = radius_a / n_r;
    return g;
}

Segment classify_boundary(const Grid& g, Real z, Real r) {
    const Real tol = 1e-12 * std::max(g.length, g.radius);
    const bool west = std::abs(z) <= tol, east = std::abs(z - g.length) <= tol;
    const bool south = std::abs(r) <= tol, north = std::abs(r - g.radius) <= tol;
    if (!west && !east && !south && !north)
        throw std::invalid_argument("classify_boundary: point is not on the boundary");
    if (west) return r < 1.0 ? Segment::inlet_inner : Segment::inlet_outer;
    if (east) return north ? Segment::wall : Segment::outlet;
    if (north) return Segment::wall;
    return Segment::axis;
}

std::vector<BoundaryVertex> boundary_vertices(const Grid& g) {
    std::vector<BoundaryVertex> out;
    auto push = [&](int i, int j) {
        const Real z = i * g.dz, r = j * g.dr;
        out.push_back({z, r, classify_boundary(g, z, r)});
    };
    for (int i = 0; i <= g.nz; ++i) push(i, 0);
    for (int i = 0; i <= g.nz; ++i) push(i, g.nr);
    for (int j = 1; j < g.nr; ++j) push(0, j);
    for (int j = 1; j < g.nr; ++j) push(g.nz, j);
    return out;
}

}  // namespace coflow
