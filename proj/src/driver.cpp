#include "coflow/driver.hpp"

#include <filesystem>
#include <fstream>

#include "coflow/io.hpp"

namespace coflow {

Simulation::Simulation(Scenario sc)
    : sc_((sc.finalize(), sc)),
      grid_(sc_.grid()),
      physical_(physical_bcs(grid_, sc_.params)),
      initial_(initial_bcs(grid_, sc_.params)),
      ch_(grid_, sc_.params, physical_.phi, physical_.mu, sc_.solver),
      vel_(grid_, physical_.vz, physical_.vr, sc_.solver),
      pres_(grid_, physical_.p, sc_.solver),
      st_(initial_state(grid_, sc_.params)) {
    work_.push(boundary_work_rate(st_, grid_, sc_.params), 0.0);  // prime at t=0
    refresh_droplet_metrics();
}

const BcSet& Simulation::epoch_bc() const { return st_.step == 0 ? initial_ : physical_; }

void Simulation::step() {
    const BcSet& bc_old = epoch_bc();
    const Params& p = sc_.params;

    Step1Result s1 = solve_step1(st_, ch_, grid_, p, physical_, bc_old);
    Step2Result s2 = solve_step2(st_, s1, vel_, grid_, p, physical_, bc_old);
    Step3Result s3 = solve_step3(st_, s2.u, pres_, grid_, p, physical_);

    audits_.min_den_U = std::min(audits_.min_den_U, std::min(s1.split.den_U1, s1.split.den_U2));
    audits_.min_den_Q = std::min(audits_.min_den_Q, s1.split.den_Q * p.dt);
    audits_.min_den_R = std::min(audits_.min_den_R, s2.den_R * p.dt);
    audits_.min_den_T = std::min(audits_.min_den_T, s3.den_T * p.dt);
    audits_.min_S = std::min(audits_.min_S, s2.S_new);
    audits_.steps++;

    st_.p_prev = st_.p;
    st_.p = s3.p;
    st_.phi = s1.phi;
    st_.mu = s1.mu;
    st_.u = s2.u;
    st_.U = s1.U;
    st_.Q = s1.Q;
    st_.R = s2.R;
    st_.T = s3.T;
    st_.K = s2.K;
    st_.S_accum = s2.S_new;
    st_.step++;
    st_.time = st_.step * p.dt;
    last_div_norm_ = s3.div_norm;

    require_finite(st_.phi, "phi");
    require_finite(st_.mu, "mu");
    require_finite(st_.p, "p");
    if (!all_finite(st_.u)) throw std::runtime_error("non-finite velocity");

    work_.push(boundary_work_rate(st_, grid_, sc_.params), p.dt);

    if (sc_.output_cadence > 0 && st_.step % sc_.output_cadence == 0) refresh_droplet_metrics();
}

void Simulation::refresh_droplet_metrics() {
    droplet_ = droplet_metrics(st_.phi, grid_);
    if (!droplet_.pinch_off) pinch_seen_ = false;
    if (droplet_.pinch_off && !pinch_seen_) {
        pinch_seen_ = true;
        pinch_events_++;
        if (first_pinch_time_ < 0) first_pinch_time_ = st_.time;
    }
    if (pinch_events_ == 0) rd_max_ = std::max(rd_max_, droplet_.radius);
}

DiagnosticsRecord Simulation::make_record() const {
    DiagnosticsRecord r;
    r.step = st_.step;
    r.time = st_.time;
    const BcSet& bc = epoch_bc();
    r.E_M = energy_modified(st_, grid_, sc_.params, bc);
    r.E_O = energy_original(st_, work_, grid_, sc_.params, bc);
    r.Q = st_.Q;
    r.R = st_.R;
    r.T = st_.T;
    r.U = st_.U;
    r.K = st_.K;
    r.S = st_.S_accum;
    r.div_norm = last_div_norm_;
    r.droplet_radius = droplet_.radius;
    r.pinch_off = pinch_events_ > 0;
    return r;
}

void Simulation::restore(const State& st, const BoundaryWorkAudit& work, int pinch_events,
                         Real first_pinch_time, Real rd_max) {
    st_ = st;
    work_ = work;
    pinch_events_ = pinch_events;
    pinch_seen_ = pinch_events > 0;
    first_pinch_time_ = first_pinch_time;
    rd_max_ = rd_max;
    refresh_droplet_metrics();
}

RunResult run_scenario(Simulation& sim, const std::optional<std::string>& out_dir,
                       bool keep_diags, const std::function<void(const Simulation&)>& on_record) {
    const Scenario& sc = sim.scenario();
    RunResult res;
    std::ofstream csv;
    if (out_dir) {
        std::filesystem::create_directories(*out_dir);
        csv.open(*out_dir + "/diag.csv");
        write_diag_header(csv);
    }
    auto emit = [&](const DiagnosticsRecord& r) {
        if (csv.is_open()) write_diag_row(csv, r);
        if (keep_diags) res.diags.push_back(r);
        if (on_record) on_record(sim);
    };
    emit(sim.make_record());

    const long n_steps = std::lround(sc.params.end_time / sc.params.dt);
    while (sim.state().step < n_steps) {
        sim.step();
        emit(sim.make_record());
        if (out_dir && sc.snapshot_cadence > 0 && sim.state().step % sc.snapshot_cadence == 0)
            write_vtk(*out_dir + "/snap_" + std::to_string(sim.state().step) + ".vtk", sim.grid(),
                      sim.state());
        if (out_dir && sc.checkpoint_cadence > 0 &&
            sim.state().step % sc.checkpoint_cadence == 0)
            save_checkpoint(*out_dir + "/checkpoint.bin", make_checkpoint(sim));
        if (sc.stop_after_pinch > 0 && sim.pinch_events() >= sc.stop_after_pinch) break;
    }
    if (out_dir) save_checkpoint(*out_dir + "/checkpoint.bin", make_checkpoint(sim));

    res.audits = sim.audits();
    res.pinched = sim.pinch_latched();
    res.first_pinch_time = sim.first_pinch_time();
    res.droplet_radius_max = sim.droplet_radius_max();
    return res;
}

}  // namespace coflow
