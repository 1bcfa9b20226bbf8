#pragma once

#include <map>

#include "coflow/driver.hpp"

namespace coflow {

struct ConvergenceReport {
    std::vector<Real> levels;  // h (spatial) or dt (temporal)
    std::map<std::string, std::vector<Real>> errors;
    std::map<std::string, Real> fitted_order;
    std::string note;
};

/// Grid-refinement study at fixed dt: runs inverse spacings `inv_h`
/// (n_z = L/h, n_r = a/h) against `ref_inv_h`, restricts the reference by
/// block averaging, and fits observed orders of the dV-weighted L2 errors
/// for phi, v_z, v_r and p.
ConvergenceReport converge_space(const Scenario& base, const std::vector<int>& inv_h,
                                 int ref_inv_h, Real dt, Real t_end);

/// Time-refinement study on a fixed grid: errors at t_end against the
/// smallest-dt reference for phi, v_z, v_r, p, U, K plus |Q-1|, |R-1|,
/// |T-1| (exact solutions are 1).
ConvergenceReport converge_time(const Scenario& base, const std::vector<Real>& dts, Real ref_dt,
                                Real t_end);

struct SweepRow {
    Real value = 0;
    Real R_d = 0;
    bool pinched = false;
    Real pinch_time = -1;
};

struct SweepResult {
    std::string parameter;
    std::vector<SweepRow> rows;
    std::string verdict;  // increasing | decreasing | non-monotone | trivial
};

/// Runs each parameter value to first pinch-off (or end_time, recorded as
/// censored) and reports the R_d trend over the uncensored rows.
SweepResult run_sweep(const std::string& parameter, const std::vector<Real>& values,
                      const Scenario& base,
                      const std::map<Real, Real>& alpha_override = {});

/// Per-figure parameter sets of the published sweeps; returns the base
/// scenario (grid/cadence fields are taken from `desk`) plus values and
/// per-value alpha where the study varied it.
struct SweepPreset {
    std::string parameter;
    std::vector<Real> values;
    Scenario base;
    std::map<Real, Real> alpha_override;
};
SweepPreset sweep_preset(const std::string& name, const Scenario& desk);

Real fit_order(const std::vector<Real>& levels, const std::vector<Real>& errors);

}  // namespace coflow
