#pragma once

#include "coflow/bc.hpp"
#include "coflow/ops.hpp"
#include "coflow/state.hpp"

namespace coflow {

struct EnergyBreakdown {
    Real kinetic = 0;          // Re/2 \int r rho |u|^2
    Real gradient = 0;         // B eps/2 \int r |grad phi|^2
    Real quadratic = 0;        // B s/(2 eps) \int r phi^2
    Real inlet_work = 0;       // 2 dt \int_L r eta vz dz(vz)
    Real viscous_history = 0;  // dt/4 \int r eta |D(u)|^2
    Real q_term = 0, u_term = 0, r_term = 0, t_term = 0, k_term = 0;
    Real pressure_term = 0;    // dt^2/(2 chi Re) \int r |grad p|^2

    Real total() const {
        return kinetic + gradient + quadratic + inlet_work + viscous_history + q_term + u_term +
               r_term + t_term + k_term + pressure_term;
    }
};

/// All terms of the discrete modified energy; gradient terms use the face
/// forms matching the assembled operators so the scheme's telescoping holds.
EnergyBreakdown energy_breakdown(const State& st, const Grid& g, const Params& p,
                                 const BcSet& bc);
Real energy_modified(const State& st, const Grid& g, const Params& p, const BcSet& bc);

/// Trapezoidal accumulator for the time-integrated boundary work of the
/// original energy.
struct BoundaryWorkAudit {
    Real work = 0;
    Real last_rate = 0;
    bool primed = false;

    void push(Real rate, Real dt) {
        if (primed) work += 0.5 * dt * (last_rate + rate);
        last_rate = rate;
        primed = true;
    }
};

/// Instantaneous boundary-work rate (the integrand of E_O's time integral).
Real boundary_work_rate(const State& st, const Grid& g, const Params& p);

/// E_O = kinetic + gradient + (B/eps) \int r F(phi) + accumulated work.
Real energy_original(const State& st, const BoundaryWorkAudit& audit, const Grid& g,
                     const Params& p, const BcSet& bc);

struct DropletMetrics {
    Real radius = 0;
    bool pinch_off = false;
};

/// Inner fluid = {phi < 0}; components by face adjacency.  Radius is the
/// largest radial phi=0 crossing of the component attached to the tube
/// inlet; pinch-off is any detached component.
DropletMetrics droplet_metrics(const Field& phi, const Grid& g);

struct ScalarDrift {
    Real dq = 0, dr = 0, dt = 0;
};
inline ScalarDrift scalar_drift(const State& st) {
    return {std::abs(st.Q - 1.0), std::abs(st.R - 1.0), std::abs(st.T - 1.0)};
}

/// One row per completed time step.
struct DiagnosticsRecord {
    long step = 0;
    Real time = 0;
    Real E_O = 0, E_M = 0;
    Real Q = 1, R = 1, T = 1, U = 0, K = 0, S = 0;
    Real div_norm = 0;
    Real droplet_radius = 0;
    bool pinch_off = false;
};

}  // namespace coflow
