#pragma once

#include "coflow/linsys.hpp"

namespace coflow {

struct Step3Result {
    Field p;
    Field p2;
    Real T = 1;
    Real den_T = 0;
    Real div_norm = 0;  // max |div_r u^{n+1}|
};

/// STEP 3, the modified penalty pressure update:
///   lap_r p2 = (chi Re / dt) div(r u^{n+1}),  p2 = 0 at the outlet,
///   T from its scalar ODE, p^{n+1} = p^n + T p2.
Step3Result solve_step3(const State& st, const VecField& u_new, const PressureBlock& pr,
                        const Grid& g, const Params& p, const BcSet& bc);

}  // namespace coflow
