#pragma once

#include <functional>
#include <optional>

#include "coflow/ch_step.hpp"
#include "coflow/diagnostics.hpp"
#include "coflow/momentum_step.hpp"
#include "coflow/pressure_step.hpp"
#include "coflow/scenario.hpp"

namespace coflow {

/// Smallest values seen across a run for the quantities the scheme proves
/// positive (the step aborts if any ever crosses zero).
struct AuditStats {
    Real min_den_U = 1e300;
    Real min_den_Q = 1e300;
    Real min_den_R = 1e300;
    Real min_den_T = 1e300;
    Real min_S = 1e300;
    long steps = 0;
};

/// Owns the grid, the three cached linear blocks and the state; advances the
/// scheme one STEP1 -> STEP2 -> STEP3 cycle per call.
class Simulation {
  public:
    explicit Simulation(Scenario sc);

    void step();

    const Scenario& scenario() const { return sc_; }
    const Grid& grid() const { return grid_; }
    const Params& params() const { return sc_.params; }
    const State& state() const { return st_; }
    State& mutable_state() { return st_; }
    const AuditStats& audits() const { return audits_; }
    const BoundaryWorkAudit& work_audit() const { return work_; }
    BoundaryWorkAudit& mutable_work_audit() { return work_; }
    const BcSet& physical_bc() const { return physical_; }
    const BcSet& epoch_bc() const;  // traces consistent with the current state

    const ChBlock& ch_block() const { return ch_; }
    const PressureBlock& pressure_block() const { return pres_; }

    DiagnosticsRecord make_record() const;

    bool pinch_latched() const { return pinch_events_ > 0; }
    int pinch_events() const { return pinch_events_; }
    Real first_pinch_time() const { return first_pinch_time_; }
    Real droplet_radius_max() const { return rd_max_; }

    /// Re-evaluate droplet metrics now (normally done at output cadence).
    void refresh_droplet_metrics();

    // checkpoint support
    void restore(const State& st, const BoundaryWorkAudit& work, int pinch_events,
                 Real first_pinch_time, Real rd_max);

  private:
    Scenario sc_;
    Grid grid_;
    BcSet physical_, initial_;
    ChBlock ch_;
    VelocityBlock vel_;
    PressureBlock pres_;
    State st_;
    BoundaryWorkAudit work_;
    AuditStats audits_;
    Real last_div_norm_ = 0;
    DropletMetrics droplet_{};
    int pinch_events_ = 0;
    bool pinch_seen_ = false;
    Real first_pinch_time_ = -1;
    Real rd_max_ = 0;
};

struct RunResult {
    std::vector<DiagnosticsRecord> diags;
    AuditStats audits;
    bool pinched = false;
    Real first_pinch_time = -1;
    Real droplet_radius_max = 0;
};

/// Runs a scenario to its stop condition.  `out_dir`, when set, receives
/// diag.csv, snap_<step>.vtk at the snapshot cadence and checkpoint.bin.
/// `keep_diags` controls whether per-step records are retained in memory.
RunResult run_scenario(Simulation& sim, const std::optional<std::string>& out_dir = {},
                       bool keep_diags = true,
                       const std::function<void(const Simulation&)>& on_record = {});

}  // namespace coflow
