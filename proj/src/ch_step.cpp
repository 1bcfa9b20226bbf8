#include "coflow/ch_step.hpp"

namespace coflow {

Field compute_H(const Grid& g, const Field& phi, const Params& p) {
    const Real B = p.radicand_offset_B;
    Field integrand(phi.size());
    for (int i = 0; i < g.nz; ++i)
        for (int j = 0; j < g.nr; ++j) {
            const int c = g.index(i, j);
            integrand[c] = g.rc(j) * (double_well(phi[c]) -
                                      0.5 * p.stabilizer_s * phi[c] * phi[c]);
        }
    const Real radicand = integrate(g, integrand) + B;
    if (!(radicand > 0))
        throw ConfigError("H radicand non-positive (" + std::to_string(radicand) +
                          "); increase radicand_offset_B");
    const Real inv = 1.0 / std::sqrt(radicand);
    Field H(phi.size());
    for (Eigen::Index c = 0; c < phi.size(); ++c)
        H[c] = (double_well_prime(phi[c]) - p.stabilizer_s * phi[c]) * inv;
    return H;
}

namespace {

FieldBc zero_data(const FieldBc& kinds) {
    FieldBc b = kinds;
    b.west.value = nullptr;
    b.east.value = nullptr;
    b.south.value = nullptr;
    b.north.value = nullptr;
    return b;
}

}  // namespace

Step1Result solve_step1(const State& st, const ChBlock& ch, const Grid& g, const Params& p,
                        const BcSet& bc_new, const BcSet& bc_old) {
    const int n = g.cells();
    Field r_cell(n);
    for (int i = 0; i < g.nz; ++i)
        for (int j = 0; j < g.nr; ++j) r_cell[g.index(i, j)] = g.rc(j);

    Step1Result out;
    ChSplit& sp = out.split;
    sp.H_n = compute_H(g, st.phi, p);

    const Field zero = Field::Zero(n);
    const FieldBc phi0 = zero_data(bc_new.phi), mu0 = zero_data(bc_new.mu);

    // (phi11, mu11): carries the inlet data and the phi^n/dt load
    std::tie(sp.phi11, sp.mu11) =
        ch.solve(r_cell * st.phi / p.dt, zero, bc_new.phi, bc_new.mu);
    // (phi12, mu12) = (phi22, mu22): the H source, homogeneous data
    std::tie(sp.phi12, sp.mu12) = ch.solve(zero, r_cell * sp.H_n / p.cahn, phi0, mu0);
    // (phi21, mu21): the advection source
    const Field adv = advect(g, st.u, st.phi, bc_old.phi);
    std::tie(sp.phi21, sp.mu21) = ch.solve(-r_cell * adv, zero, phi0, mu0);

    auto half_rH = [&](const Field& f) { return 0.5 * integrate_r(g, sp.H_n * f); };
    sp.g_n = st.U - half_rH(st.phi);
    sp.den_U1 = 1.0 - half_rH(sp.phi12);
    sp.den_U2 = sp.den_U1;  // (phi22, mu22) aliases (phi12, mu12)
    if (!(sp.den_U1 > 0))
        throw AuditError("U denominator non-positive: " + std::to_string(sp.den_U1));
    sp.U1 = (half_rH(sp.phi11) + sp.g_n) / sp.den_U1;
    sp.U2 = half_rH(sp.phi21) / sp.den_U2;

    const Field phi1 = sp.phi11 + sp.U1 * sp.phi12;
    const Field mu1 = sp.mu11 + sp.U1 * sp.mu12;
    const Field phi2 = sp.phi21 + sp.U2 * sp.phi12;
    const Field mu2 = sp.mu21 + sp.U2 * sp.mu12;

    // intermediate velocity split: u1 = u^n, u2 = dt B mu^n grad(phi^n)/(Re rho^n)
    const VecField gphi = grad(g, st.phi, bc_old.phi);
    const Field rho_n = interpolate_material(st.phi, p.density_ratio);
    const Real cu = p.dt * p.sigma_coef / p.reynolds;
    VecField u2t(n);
    u2t.z = cu * st.mu * gphi.z / rho_n;
    u2t.r = cu * st.mu * gphi.r / rho_n;

    // Q^{n+1} from the scalar relation; adv = u^n . grad phi^n
    const Real alpha = p.ode_damping;
    const Field u2t_dot_gphi = u2t.z * gphi.z + u2t.r * gphi.r;
    const Real num = st.Q / p.dt +
                     alpha * (integrate_r(g, adv * mu1) - integrate_r(g, adv * st.mu));
    sp.den_Q = 1.0 / p.dt -
               alpha * (integrate_r(g, adv * mu2) - integrate_r(g, u2t_dot_gphi * st.mu));
    if (!(sp.den_Q > 0))
        throw AuditError("Q denominator non-positive: " + std::to_string(sp.den_Q));
    out.Q = num / sp.den_Q;

    out.phi = phi1 + out.Q * phi2;
    out.mu = mu1 + out.Q * mu2;
    out.u_tilde = VecField(n);
    out.u_tilde.z = st.u.z + out.Q * u2t.z;
    out.u_tilde.r = st.u.r + out.Q * u2t.r;
    out.U = sp.U1 + out.Q * sp.U2;
    return out;
}

}  // namespace coflow
