#include "coflow/pressure_step.hpp"

namespace coflow {

Step3Result solve_step3(const State& st, const VecField& u_new, const PressureBlock& pr,
                        const Grid& g, const Params& p, const BcSet& bc) {
    Step3Result out;
    const Field D = div_ru(g, u_new, bc.vz, bc.vr);
    const Real chi = p.penalty_chi();
    out.p2 = pr.solve((chi * p.reynolds / p.dt) * D);

    const Real alpha = p.ode_damping;
    const Real num = st.T / p.dt + alpha * integrate(g, D * st.p);
    out.den_T = 1.0 / p.dt - alpha * integrate(g, D * out.p2);
    if (!(out.den_T > 0))
        throw AuditError("T denominator non-positive: " + std::to_string(out.den_T));
    out.T = num / out.den_T;
    out.p = st.p + out.T * out.p2;

    Real dmax = 0;
    for (int i = 0; i < g.nz; ++i)
        for (int j = 0; j < g.nr; ++j)
            dmax = std::max(dmax, std::abs(D[g.index(i, j)] / g.rc(j)));
    out.div_norm = dmax;
    return out;
}

}  // namespace coflow
