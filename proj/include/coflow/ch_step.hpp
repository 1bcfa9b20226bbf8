#pragma once

#include "coflow/linsys.hpp"

namespace coflow {

/// STEP-1 split: the four sub-system solutions (the second and fourth share
/// one system, solved once), the nonlocal scalars they produce, and the
/// audited denominators.
struct ChSplit {
    Field phi11, mu11;
    Field phi12, mu12;  // also serves as (phi22, mu22)
    Field phi21, mu21;
    Field H_n;
    Real g_n = 0;
    Real U1 = 0, U2 = 0;
    Real den_U1 = 0, den_U2 = 0, den_Q = 0;
};

struct Step1Result {
    Field phi, mu;
    VecField u_tilde;
    Real U = 0, Q = 1;
    ChSplit split;
};

/// H(phi) = (f(phi) - s phi) / sqrt(\int (r F(phi) - r s phi^2/2) + B);
/// phi enters unclipped.  Throws ConfigError when the radicand is not
/// positive (advice: raise radicand_offset_B).
Field compute_H(const Grid& g, const Field& phi, const Params& p);

/// Advances the phase field, chemical potential and intermediate velocity.
/// `bc_new` carries the Dirichlet data imposed on the time-advanced fields,
/// `bc_old` the traces the time-n state was solved with.
Step1Result solve_step1(const State& st, const ChBlock& ch, const Grid& g, const Params& p,
                        const BcSet& bc_new, const BcSet& bc_old);

}  // namespace coflow
