#pragma once

#include <functional>
#include <utility>

#include "coflow/grid.hpp"
#include "coflow/params.hpp"

namespace coflow {

enum class BcKind { dirichlet, neumann };

/// One side of the rectangle.  `value` gives Dirichlet data as a function of
/// the tangential coordinate at the face centre; all Neumann data here is
/// homogeneous.
struct SideSpec {
    BcKind kind = BcKind::neumann;
    std::function<Real(Real)> value;  // null means 0

    Real data(Real coord) const { return (kind == BcKind::dirichlet && value) ? value(coord) : 0.0; }
};

enum class Side { west, east, south, north };

struct FieldBc {
    SideSpec west, east, south, north;
    const SideSpec& side(Side s) const {
        switch (s) {
            case Side::west: return west;
            case Side::east: return east;
            case Side::south: return south;
            default: return north;
        }
    }
};

/// Ghost-cell closure: f_ghost = coeff * f_cell + constant.  Dirichlet data g
/// enters as 2g - f_cell so the face value is exactly g.
inline std::pair<Real, Real> ghost_rule(const SideSpec& s, Real face_coord) {
    if (s.kind == BcKind::neumann) return {1.0, 0.0};
    return {-1.0, 2.0 * s.data(face_coord)};
}

struct BcSet {
    FieldBc phi, mu, p, vz, vr;
};

/// Inflow axial velocity at z=0: plug Poiseuille 2(1-r^2) in the tube,
/// annular Poiseuille scaled by 2 Q_r / a^2 outside it.
Real inflow_profile(Real r, const Params& p, Real radius_a);

/// Boundary conditions the time-advanced fields are solved with.
BcSet physical_bcs(const Grid& g, const Params& p);

/// Traces consistent with the quiescent initial data (phi = 1 and u = 0
/// everywhere, including the inlet); used when differencing the t=0 state.
BcSet initial_bcs(const Grid& g, const Params& p);

inline const BcSet& bcs_for_epoch(const BcSet& physical, const BcSet& initial, long step) {
    return step == 0 ? initial : physical;
}

}  // namespace coflow
