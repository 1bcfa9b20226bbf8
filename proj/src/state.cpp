#include "coflow/state.hpp"

#include "coflow/ops.hpp"

namespace coflow {

Field interpolate_material(const Field& phi, Real ratio) {
    Field out(phi.size());
    for (Eigen::Index k = 0; k < phi.size(); ++k) out[k] = interpolate_material(phi[k], ratio);
    return out;
}

State initial_state(const Grid& g, const Params& p) {
    State st;
    const int n = g.cells();
    st.phi = Field::Constant(n, 1.0);
    st.mu = Field::Zero(n);
    st.p = Field::Zero(n);
    st.p_prev = Field::Zero(n);
    st.u = VecField(n);

    const Real B = std::isnan(p.radicand_offset_B)
                       ? Params::default_radicand_B(p.stabilizer_s, domain_r_integral(g))
                       : p.radicand_offset_B;
    Field integrand(n);
    for (int i = 0; i < g.nz; ++i)
        for (int j = 0; j < g.nr; ++j) {
            const Real r = g.rc(j), phi0 = 1.0;
            integrand[g.index(i, j)] =
                r * double_well(phi0) - 0.5 * r * p.stabilizer_s * phi0 * phi0;
        }
    const Real radicand = integrate(g, integrand) + B;
    if (!(radicand > 0))
        throw ConfigError(
            "initial U radicand is not positive; increase radicand_offset_B above " +
            std::to_string(B - radicand + 1.0));
    st.U = std::sqrt(radicand);
    st.Q = st.R = st.T = 1.0;
    st.K = std::sqrt(p.radicand_offset_G);
    st.S_accum = p.radicand_offset_G;
    st.step = 0;
    st.time = 0.0;
    return st;
}

}  // namespace coflow
