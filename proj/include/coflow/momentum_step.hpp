#pragma once

#include "coflow/ch_step.hpp"

namespace coflow {

/// Boundary-work functional K^n: inlet/outlet momentum, pressure, viscous and
/// density-flux fluxes by boundary midpoint quadrature, with one-sided d/dz
/// at the caps.  Uses rho^{n+1}, eta^{n+1} traced from phi_np1 and the
/// extrapolated traces of the time-n fields.
Real compute_K_functional(const State& st, const Field& phi_np1, const Grid& g, const Params& p);

struct Step2Result {
    VecField u;
    Real K = 0, R = 1;
    Real S_new = 0;
    Real K_func = 0;
    Real den_R = 0;
    VecField u1, u2;
    Real K1 = 0, K2 = 0;
};

/// STEP 2: the two velocity solves, the K split and the R scalar.
Step2Result solve_step2(const State& st, const Step1Result& ch, VelocityBlock& vel,
                        const Grid& g, const Params& p, const BcSet& bc_new,
                        const BcSet& bc_old);

}  // namespace coflow
