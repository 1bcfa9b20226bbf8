#include "coflow/momentum_step.hpp"

namespace coflow {

Real compute_K_functional(const State& st, const Field& phi_np1, const Grid& g,
                          const Params& p) {
    const CapTrace vz = cap_trace(g, st.u.z);
    const CapTrace pr = cap_trace(g, st.p);
    const CapTrace pp = cap_trace(g, st.p_prev);
    const CapTrace mu = cap_trace(g, st.mu);
    const CapTrace ph = cap_trace(g, phi_np1);

    Field wl(g.nr), wr_(g.nr);
    for (int j = 0; j < g.nr; ++j) {
        const Real r = g.rc(j);
        const Real rho_w = interpolate_material(ph.west[j], p.density_ratio);
        const Real rho_e = interpolate_material(ph.east[j], p.density_ratio);
        const Real eta_w = interpolate_material(ph.west[j], p.viscosity_ratio);
        const Real phat_w = 2.0 * pr.west[j] - pp.west[j];
        const Real phat_e = 2.0 * pr.east[j] - pp.east[j];
        const Real vw = vz.west[j], ve = vz.east[j];
        wl[j] = 0.5 * p.reynolds * r * rho_w * vw * vw * vw + r * phat_w * vw -
                2.0 * r * eta_w * vw * vz.dz_west[j] +
                0.25 * p.diffusion * p.reynolds * (1.0 - p.density_ratio) * mu.dz_west[j] * vw * vw;
        wr_[j] = 0.5 * p.reynolds * r * rho_e * ve * ve * ve + r * phat_e * ve;
    }
    return cap_integral(g, wl) - cap_integral(g, wr_);
}

Step2Result solve_step2(const State& st, const Step1Result& ch, VelocityBlock& vel,
                        const Grid& g, const Params& p, const BcSet& bc_new,
                        const BcSet& bc_old) {
    const int n = g.cells();
    Field r_cell(n);
    for (int i = 0; i < g.nz; ++i)
        for (int j = 0; j < g.nr; ++j) r_cell[g.index(i, j)] = g.rc(j);

    const Field rho_n = interpolate_material(st.phi, p.density_ratio);
    const Field rho_np1 = interpolate_material(ch.phi, p.density_ratio);
    const Field eta_n = interpolate_material(st.phi, p.viscosity_ratio);
    const Field eta_np1 = interpolate_material(ch.phi, p.viscosity_ratio);
    const EtaFaces etaF_n = face_values(g, eta_n);
    const EtaFaces etaF_np1 = face_values(g, eta_np1);
    const EtaFaces etaF_geo = face_geometric_mean(etaF_n, etaF_np1);

    Step2Result out;
    out.K_func = compute_K_functional(st, ch.phi, g, p);
    if (!(st.S_accum > 0))
        throw AuditError("S accumulator non-positive entering STEP 2");
    const Real sqrtS = std::sqrt(st.S_accum);

    const Field mass = p.reynolds * 0.5 * r_cell * (rho_np1 + rho_n) / p.dt;
    vel.assemble(mass, etaF_np1, eta_np1);

    // u1: R-independent part, carries the inflow data and the geometric-mean
    // explicit viscous term (plus the optional body force)
    VecField b1 = viscous_apply(g, etaF_geo, st.u, bc_old.vz, bc_old.vr);
    b1.z += p.reynolds * r_cell * rho_n * ch.u_tilde.z / p.dt;
    b1.r += p.reynolds * r_cell * rho_n * ch.u_tilde.r / p.dt;
    if (p.has_gravity()) b1.z += p.gravity_coefficient() * r_cell * rho_np1;
    {
        const VecField d = vel.data_rhs(etaF_np1, bc_new.vz, bc_new.vr);
        b1.z += d.z;
        b1.r += d.r;
    }

    // u2: everything multiplied by R^{n+1}; homogeneous data
    const VecField conv = advect_vector(g, st.u, st.u, bc_old.vz, bc_old.vr);
    const Field div_rho_u = div_r_qu(g, rho_np1, st.u, bc_old.vz, bc_old.vr);
    const VecField expl_visc = viscous_apply(g, etaF_np1, st.u, bc_old.vz, bc_old.vr);
    Field p_hat = 2.0 * st.p - st.p_prev;
    const VecField grad_p = grad(g, p_hat, bc_new.p);
    const VecField J = j_flux(g, st.mu, bc_new.mu, p.diffusion, p.reynolds, p.density_ratio);
    const Real cj = p.diffusion * p.reynolds * 0.5 * (1.0 - p.density_ratio);
    const Field div_rJ = cj * lap_r(g, st.mu, bc_new.mu);
    const VecField JgradU = advect_vector(g, J, st.u, bc_old.vz, bc_old.vr);

    VecField b2(n);
    b2.z = -p.reynolds * rho_n * r_cell * conv.z - 0.5 * p.reynolds * div_rho_u * st.u.z -
           expl_visc.z - r_cell * grad_p.z - 0.5 * div_rJ * st.u.z - r_cell * JgradU.z;
    b2.r = -p.reynolds * rho_n * r_cell * conv.r - 0.5 * p.reynolds * div_rho_u * st.u.r -
           expl_visc.r - r_cell * grad_p.r - 0.5 * div_rJ * st.u.r - r_cell * JgradU.r;

    out.u1 = vel.solve(b1);
    out.u2 = vel.solve(b2);

    out.K1 = st.K;
    out.K2 = -p.dt * out.K_func / (2.0 * sqrtS);

    const Real dV = g.cell_area();
    Real b2u1 = 0, b2u2 = 0;
    for (int c = 0; c < n; ++c) {
        b2u1 += b2.z[c] * out.u1.z[c] + b2.r[c] * out.u1.r[c];
        b2u2 += b2.z[c] * out.u2.z[c] + b2.r[c] * out.u2.r[c];
    }
    b2u1 *= dV;
    b2u2 *= dV;
    const Real Dn_energy = viscous_energy(g, etaF_np1, st.u, bc_old.vz, bc_old.vr);

    const Real alpha = p.ode_damping;
    const Real num = st.R / p.dt - alpha * b2u1 + alpha * out.K1 * out.K_func / sqrtS;
    out.den_R = 1.0 / p.dt + alpha * b2u2 + 0.5 * alpha * Dn_energy -
                alpha * out.K2 * out.K_func / sqrtS;
    if (!(out.den_R > 0))
        throw AuditError("R denominator non-positive: " + std::to_string(out.den_R));
    out.R = num / out.den_R;

    out.u = VecField(n);
    out.u.z = out.u1.z + out.R * out.u2.z;
    out.u.r = out.u1.r + out.R * out.u2.r;
    out.K = out.K1 + out.R * out.K2;
    out.S_new = st.S_accum - p.dt * out.K_func;
    if (!(out.S_new > 0))
        throw AuditError("S accumulator would become non-positive; increase radicand_offset_G");
    return out;
}

}  // namespace coflow
