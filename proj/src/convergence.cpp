#include "coflow/convergence.hpp"

#include <cmath>
#include <sstream>

namespace coflow {

Real fit_order(const std::vector<Real>& levels, const std::vector<Real>& errors) {
    // least-squares slope of log(error) against log(level)
    std::vector<Real> xs, ys;
    for (size_t k = 0; k < levels.size(); ++k)
        if (errors[k] > 0) {
            xs.push_back(std::log(levels[k]));
            ys.push_back(std::log(errors[k]));
        }
    if (xs.size() < 2) return std::nan("");
    Real sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t k = 0; k < xs.size(); ++k) {
        sx += xs[k];
        sy += ys[k];
        sxx += xs[k] * xs[k];
        sxy += xs[k] * ys[k];
    }
    const Real n = static_cast<Real>(xs.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

State run_to(const Scenario& sc) {
    Simulation sim(sc);
    const long n_steps = std::lround(sc.params.end_time / sc.params.dt);
    for (long k = 0; k < n_steps; ++k) sim.step();
    return sim.state();
}

Field restrict_block(const Grid& fine, const Field& f, int factor, const Grid& coarse) {
    Field out(coarse.cells());
    const Real inv = 1.0 / (factor * factor);
    for (int I = 0; I < coarse.nz; ++I)
        for (int J = 0; J < coarse.nr; ++J) {
            Real acc = 0;
            for (int a = 0; a < factor; ++a)
                for (int b = 0; b < factor; ++b)
                    acc += f[fine.index(I * factor + a, J * factor + b)];
            out[coarse.index(I, J)] = acc * inv;
        }
    return out;
}

Real l2_error(const Grid& g, const Field& a, const Field& b) {
    Real acc = 0;
    for (int c = 0; c < g.cells(); ++c) {
        const Real d = a[c] - b[c];
        acc += d * d;
    }
    return std::sqrt(acc * g.cell_area());
}

Scenario quiet(Scenario sc) {
    sc.snapshot_cadence = 0;
    sc.checkpoint_cadence = 0;
    sc.output_cadence = 0;  // droplet bookkeeping off for convergence runs
    sc.stop_after_pinch = 0;
    return sc;
}

}  // namespace

ConvergenceReport converge_space(const Scenario& base, const std::vector<int>& inv_h,
                                 int ref_inv_h, Real dt, Real t_end) {
    ConvergenceReport rep;
    Scenario ref_sc = quiet(base);
    auto grid_for = [&](int ih, Scenario& sc) {
        const Real nzf = base.length_L * ih, nrf = base.radius_a * ih;
        sc.n_z = static_cast<int>(std::lround(nzf));
        sc.n_r = static_cast<int>(std::lround(nrf));
        if (std::abs(sc.n_z - nzf) > 1e-9 || std::abs(sc.n_r - nrf) > 1e-9)
            throw ConfigError("converge_space: 1/h must make L/h and a/h integral");
        sc.params.dt = dt;
        sc.params.end_time = t_end;
    };
    grid_for(ref_inv_h, ref_sc);
    const Grid ref_grid = ref_sc.grid();
    const State ref = run_to(ref_sc);

    const char* names[4] = {"phi", "v_z", "v_r", "p"};
    for (int ih : inv_h) {
        if (ref_inv_h % ih != 0)
            throw ConfigError("converge_space: grids must be nested (1/h divides 1/h_ref)");
        rep.levels.push_back(1.0 / ih);
        if (ih == ref_inv_h) {
            for (auto* n : names) rep.errors[n].push_back(0.0);
            rep.note += "level equals reference: zero error, order undefined; ";
            continue;
        }
        Scenario sc = quiet(base);
        grid_for(ih, sc);
        const Grid coarse = sc.grid();
        const State st = run_to(sc);
        const int factor = ref_inv_h / ih;
        const Field fields[4] = {st.phi, st.u.z, st.u.r, st.p};
        const Field refs[4] = {ref.phi, ref.u.z, ref.u.r, ref.p};
        for (int k = 0; k < 4; ++k)
            rep.errors[names[k]].push_back(
                l2_error(coarse, fields[k], restrict_block(ref_grid, refs[k], factor, coarse)));
    }
    for (auto& [name, errs] : rep.errors) rep.fitted_order[name] = fit_order(rep.levels, errs);
    return rep;
}

ConvergenceReport converge_time(const Scenario& base, const std::vector<Real>& dts, Real ref_dt,
                                Real t_end) {
    for (Real dt : dts)
        if (ref_dt >= dt) throw ConfigError("converge_time: reference dt must be the smallest");
    auto steps_of = [&](Real dt) {
        const Real n = t_end / dt;
        if (std::abs(n - std::lround(n)) > 1e-8)
            throw ConfigError("converge_time: t_end must be a multiple of every dt");
        return std::lround(n);
    };

    ConvergenceReport rep;
    Scenario ref_sc = quiet(base);
    ref_sc.params.dt = ref_dt;
    ref_sc.params.end_time = t_end;
    steps_of(ref_dt);
    const State ref = run_to(ref_sc);
    const Grid g = ref_sc.grid();

    for (Real dt : dts) {
        steps_of(dt);
        rep.levels.push_back(dt);
        Scenario sc = quiet(base);
        sc.params.dt = dt;
        sc.params.end_time = t_end;
        const State st = run_to(sc);
        rep.errors["phi"].push_back(l2_error(g, st.phi, ref.phi));
        rep.errors["v_z"].push_back(l2_error(g, st.u.z, ref.u.z));
        rep.errors["v_r"].push_back(l2_error(g, st.u.r, ref.u.r));
        rep.errors["p"].push_back(l2_error(g, st.p, ref.p));
        rep.errors["U"].push_back(std::abs(st.U - ref.U));
        rep.errors["K"].push_back(std::abs(st.K - ref.K));
        rep.errors["Q"].push_back(std::abs(st.Q - 1.0));
        rep.errors["R"].push_back(std::abs(st.R - 1.0));
        rep.errors["T"].push_back(std::abs(st.T - 1.0));
    }
    for (auto& [name, errs] : rep.errors) rep.fitted_order[name] = fit_order(rep.levels, errs);
    return rep;
}

SweepResult run_sweep(const std::string& parameter, const std::vector<Real>& values,
                      const Scenario& base, const std::map<Real, Real>& alpha_override) {
    SweepResult res;
    res.parameter = parameter;
    for (Real v : values) {
        Scenario sc = base;
        sc.stop_after_pinch = 1;
        std::ostringstream os;
        os.precision(17);
        os << v;
        apply_setting(sc, parameter, os.str());
        if (auto it = alpha_override.find(v); it != alpha_override.end())
            sc.params.ode_damping = it->second;
        Simulation sim(sc);
        run_scenario(sim, std::nullopt, /*keep_diags=*/false);
        SweepRow row;
        row.value = v;
        row.R_d = sim.droplet_radius_max();
        row.pinched = sim.pinch_latched();
        row.pinch_time = sim.first_pinch_time();
        res.rows.push_back(row);
    }
    std::vector<Real> rds;
    for (auto& r : res.rows)
        if (r.pinched) rds.push_back(r.R_d);
    if (rds.size() < 2) {
        res.verdict = "trivial";
        return res;
    }
    bool inc = true, dec = true;
    for (size_t k = 1; k < rds.size(); ++k) {
        inc = inc && rds[k] > rds[k - 1];
        dec = dec && rds[k] < rds[k - 1];
    }
    res.verdict = inc ? "increasing" : dec ? "decreasing" : "non-monotone";
    return res;
}

SweepPreset sweep_preset(const std::string& name, const Scenario& desk) {
    SweepPreset sp;
    sp.base = desk;
    Params& p = sp.base.params;
    p.cahn = 0.1;
    p.flow_ratio = 10.0;
    p.dt = 2.67e-3;
    p.gravity_mode = GravityMode::none;
    p.bond = 0.0;
    if (name == "ca") {
        sp.parameter = "capillary";
        sp.values = {0.01, 0.03, 0.07};
        p.diffusion = 0.05;
        p.density_ratio = 0.1;
        p.viscosity_ratio = 1.0;
        p.reynolds = 0.01;
        p.ode_damping = 1e-4;
        p.dt = 2.67e-4;
    } else if (name == "density") {
        sp.parameter = "density_ratio";
        sp.values = {0.5, 0.8, 1.0};
        p.diffusion = 0.05;
        p.viscosity_ratio = 0.1;
        p.reynolds = 0.1;
        p.set_capillary(0.01);
        p.dt = 2.67e-4;
        sp.alpha_override = {{0.5, 1e-4}, {0.8, 1e-5}, {1.0, 1e-5}};
    } else if (name == "ld") {
        sp.parameter = "diffusion";
        sp.values = {0.001, 0.01, 0.1, 1.0};
        p.density_ratio = 10.0;
        p.viscosity_ratio = 10.0;
        p.reynolds = 1.0;
        p.set_capillary(0.01);
        p.ode_damping = 1e-3;
    } else if (name == "bo") {
        sp.parameter = "bond";
        sp.values = {0.001, 0.01, 0.1, 1.0};
        p.diffusion = 0.05;
        p.density_ratio = 0.1;
        p.viscosity_ratio = 1.0;
        p.reynolds = 1.0;
        p.set_capillary(0.01);
        p.ode_damping = 1e-3;
        p.gravity_mode = GravityMode::bond;
    } else if (name == "re") {
        sp.parameter = "reynolds";
        sp.values = {0.1, 1.0, 40.0};
        p.diffusion = 0.05;
        p.density_ratio = 0.1;
        p.viscosity_ratio = 10.0;
        p.set_capillary(0.01);
        p.ode_damping = 1e-3;
        sp.alpha_override = {{40.0, 1e-4}};
    } else if (name == "viscosity") {
        sp.parameter = "viscosity_ratio";
        sp.values = {0.01, 0.5, 20.0};
        p.diffusion = 0.05;
        p.density_ratio = 0.1;
        p.reynolds = 1.0;
        p.set_capillary(0.01);
        p.ode_damping = 1e-3;
        sp.alpha_override = {{0.5, 1e-4}};
    } else {
        throw ConfigError("unknown sweep preset '" + name + "' (ca|density|ld|bo|re|viscosity)");
    }
    return sp;
}

}  // namespace coflow
