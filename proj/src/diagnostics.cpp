#include "coflow/diagnostics.hpp"

#include <queue>

namespace coflow {

EnergyBreakdown energy_breakdown(const State& st, const Grid& g, const Params& p,
                                 const BcSet& bc) {
    EnergyBreakdown e;
    const Real B = p.sigma_coef, eps = p.cahn, alpha = p.ode_damping;

    const Field rho = interpolate_material(st.phi, p.density_ratio);
    const Field eta = interpolate_material(st.phi, p.viscosity_ratio);
    e.kinetic = 0.5 * p.reynolds *
                integrate_r(g, rho * (st.u.z * st.u.z + st.u.r * st.u.r));
    e.gradient = 0.5 * B * eps * grad_sq_form(g, st.phi, bc.phi);
    e.quadratic = 0.5 * B * p.stabilizer_s / eps * integrate_r(g, st.phi * st.phi);

    const CapTrace vz = cap_trace(g, st.u.z);
    const CapTrace ph = cap_trace(g, st.phi);
    Field w(g.nr);
    for (int j = 0; j < g.nr; ++j) {
        const Real eta_w = interpolate_material(ph.west[j], p.viscosity_ratio);
        w[j] = g.rc(j) * eta_w * vz.west[j] * vz.dz_west[j];
    }
    e.inlet_work = 2.0 * p.dt * cap_integral(g, w);

    e.viscous_history =
        0.25 * p.dt * viscous_energy(g, face_values(g, eta), st.u, bc.vz, bc.vr);
    e.q_term = 0.5 * B / alpha * st.Q * st.Q;
    e.u_term = B / eps * st.U * st.U;
    e.r_term = 0.5 / alpha * st.R * st.R;
    e.t_term = 0.5 / alpha * st.T * st.T;
    e.k_term = st.K * st.K;
    e.pressure_term =
        0.5 * p.dt * p.dt / (p.penalty_chi() * p.reynolds) * grad_sq_form(g, st.p, bc.p);
    return e;
}

Real energy_modified(const State& st, const Grid& g, const Params& p, const BcSet& bc) {
    return energy_breakdown(st, g, p, bc).total();
}

Real boundary_work_rate(const State& st, const Grid& g, const Params& p) {
    const CapTrace vz = cap_trace(g, st.u.z);
    const CapTrace pr = cap_trace(g, st.p);
    const CapTrace mu = cap_trace(g, st.mu);
    const CapTrace ph = cap_trace(g, st.phi);
    Field wl(g.nr), we(g.nr);
    for (int j = 0; j < g.nr; ++j) {
        const Real r = g.rc(j);
        const Real rho_w = interpolate_material(ph.west[j], p.density_ratio);
        const Real rho_e = interpolate_material(ph.east[j], p.density_ratio);
        const Real eta_w = interpolate_material(ph.west[j], p.viscosity_ratio);
        const Real vw = vz.west[j], ve = vz.east[j];
        wl[j] = -r * pr.west[j] * vw - 0.5 * p.reynolds * r * rho_w * vw * vw * vw +
                2.0 * r * eta_w * vw * vz.dz_west[j] -
                0.25 * p.diffusion * p.reynolds * (1.0 - p.density_ratio) * mu.dz_west[j] * vw * vw;
        we[j] = r * pr.east[j] * ve + 0.5 * p.reynolds * r * rho_e * ve * ve * ve;
    }
    return cap_integral(g, wl) + cap_integral(g, we);
}

Real energy_original(const State& st, const BoundaryWorkAudit& audit, const Grid& g,
                     const Params& p, const BcSet& bc) {
    const Field rho = interpolate_material(st.phi, p.density_ratio);
    Field F(st.phi.size());
    for (Eigen::Index c = 0; c < st.phi.size(); ++c) F[c] = double_well(st.phi[c]);
    const Real kinetic =
        0.5 * p.reynolds * integrate_r(g, rho * (st.u.z * st.u.z + st.u.r * st.u.r));
    const Real gradient = 0.5 * p.sigma_coef * p.cahn * grad_sq_form(g, st.phi, bc.phi);
    const Real well = p.sigma_coef / p.cahn * integrate_r(g, F);
    return kinetic + gradient + well + audit.work;
}

DropletMetrics droplet_metrics(const Field& phi, const Grid& g) {
    DropletMetrics m;
    std::vector<int> comp(g.cells(), -1);
    int ncomp = 0;
    std::vector<bool> attached;
    for (int start = 0; start < g.cells(); ++start) {
        if (phi[start] >= 0 || comp[start] >= 0) continue;
        const int id = ncomp++;
        attached.push_back(false);
        std::queue<int> q;
        q.push(start);
        comp[start] = id;
        while (!q.empty()) {
            const int c = q.front();
            q.pop();
            const int i = c / g.nr, j = c % g.nr;
            if (i == 0 && g.rc(j) < 1.0) attached[id] = true;
            const int nb[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
            for (auto& [ii, jj] : nb) {
                if (ii < 0 || ii >= g.nz || jj < 0 || jj >= g.nr) continue;
                const int o = g.index(ii, jj);
                if (phi[o] < 0 && comp[o] < 0) {
                    comp[o] = id;
                    q.push(o);
                }
            }
        }
    }
    for (int id = 0; id < ncomp; ++id)
        if (!attached[id]) m.pinch_off = true;

    for (int i = 0; i < g.nz; ++i)
        for (int j = 0; j < g.nr; ++j) {
            const int c = g.index(i, j);
            if (comp[c] < 0 || !attached[comp[c]]) continue;
            Real r = g.rc(j);
            if (j + 1 < g.nr && phi[g.index(i, j + 1)] >= 0) {
                const Real pc = phi[c], pn = phi[g.index(i, j + 1)];
                r += g.dr * pc / (pc - pn);  // pc < 0 <= pn
            } else if (j + 1 == g.nr) {
                r += 0.5 * g.dr;
            }
            m.radius = std::max(m.radius, r);
        }
    return m;
}

}  // namespace coflow
