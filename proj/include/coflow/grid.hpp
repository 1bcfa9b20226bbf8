#pragma once

#include <vector>

#include "coflow/types.hpp"

namespace coflow {

/// Boundary segments of the half tube section (z horizontal, r vertical):
/// wall r=a, annular inlet z=0 (r>1), tube inlet z=0 (r<1), symmetry axis
/// r=0, outflow z=L.
enum class Segment { wall, inlet_outer, inlet_inner, axis, outlet };

const char* segment_name(Segment s);

/// Uniform rectangular mesh over [0,L] x [0,a].  Unknowns live at cell
/// centres, r_j = (j+1/2) dr, so the radial weight never vanishes in an
/// assembled coefficient; the axis enters only through zero-area faces.
struct Grid {
    int nz = 0, nr = 0;        // cell counts
    Real length = 0, radius = 0;
    Real dz = 0, dr = 0;

    int cells() const { return nz * nr; }
    int index(int i, int j) const { return i * nr + j; }
    Real zc(int i) const { return (i + 0.5) * dz; }
    Real rc(int j) const { return (j + 0.5) * dr; }
    /// Radius of the r-face below/above cell row j (face index 0..nr).
    Real rface(int fj) const { return fj * dr; }
    Real cell_area() const { return dz * dr; }
};

/// Builds a grid and validates the domain proportions (the inner tube radius
/// is 1 in these units, so the outer radius must exceed it).
Grid make_grid(int n_z, int n_r, Real length_L, Real radius_a);

/// Classifies a boundary point, resolving corners: inlet data wins at z=0,
/// the wall wins at (L,a) and the outlet at (L,0).
Segment classify_boundary(const Grid& g, Real z, Real r);

/// All lattice vertices on the domain perimeter, with their classification.
struct BoundaryVertex {
    Real z, r;
    Segment segment;
};
std::vector<BoundaryVertex> boundary_vertices(const Grid& g);

/// Segment owning an inlet face centred at radius rc.
inline Segment inlet_segment(Real rc) {
    return rc < 1.0 ? Segment::inlet_inner : Segment::inlet_outer;
}

}  // namespace coflow
