#pragma once

#include "coflow/bc.hpp"
#include "coflow/grid.hpp"
#include "coflow/params.hpp"

namespace coflow {

/// Interpolated material property: (1-phi)/2 + ratio (1+phi)/2 with phi
/// clamped to [-1,1] first, so overshoots never produce values outside
/// [min(1,ratio), max(1,ratio)].
inline Real interpolate_material(Real phi, Real ratio) {
    const Real c = std::clamp(phi, -1.0, 1.0);
    return 0.5 * (1.0 - c) + 0.5 * ratio * (1.0 + c);
}

Field interpolate_material(const Field& phi, Real ratio);

/// Complete simulation state at one time level.
struct State {
    Field phi, mu, p, p_prev;
    VecField u;

    Real U = 0;                      // quadratised double-well scalar
    Real Q = 1, R = 1, T = 1;        // stabilised nonlocal scalars (exact value 1)
    Real K = 0;                      // boundary-work scalar
    Real S_accum = 0;                // \int_0^{t_n} (-K_func) dtau + G

    long step = 0;
    Real time = 0;
};

/// Quiescent start: phi=1, u=0, mu=0, p=0, Q=R=T=1, K=sqrt(G), S=G and
/// U = sqrt(\int (r F(phi) - r s phi^2/2) + B) by midpoint quadrature.
/// Throws ConfigError if the U radicand is not positive (advice: raise B).
State initial_state(const Grid& g, const Params& p);

/// F(phi) = (phi^2-1)^2/4 and f = F' = phi^3 - phi.
inline Real double_well(Real phi) {
    const Real t = phi * phi - 1.0;
    return 0.25 * t * t;
}
inline Real double_well_prime(Real phi) { return phi * (phi * phi - 1.0); }

}  // namespace coflow
