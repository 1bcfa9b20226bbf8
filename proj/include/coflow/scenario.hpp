#pragma once

#include <string>
#include <vector>

#include "coflow/linsys.hpp"

namespace coflow {

/// A fully specified run: parameters, grid, cadences and stop conditions.
struct Scenario {
    std::string name = "custom";
    Params params;
    int n_z = 200, n_r = 30;
    Real length_L = 20.0, radius_a = 3.0;
    long output_cadence = 10;    // droplet metrics + snapshot cadence (steps)
    long snapshot_cadence = 0;   // legacy VTK snapshots; 0 disables
    long checkpoint_cadence = 0; // 0 = only on completion
    int stop_after_pinch = 0;    // stop once this many pinch-off events latched
    SolverConfig solver;

    Grid grid() const { return make_grid(n_z, n_r, length_L, radius_a); }

    /// Fills derived defaults (radicand_offset_B) and validates.
    void finalize();
};

/// Named presets reproducing the published parameter sets bit-exactly.
Scenario preset(const std::string& name);
std::vector<std::string> preset_names();

/// key=value application for config files and CLI overrides.
void apply_setting(Scenario& sc, const std::string& key, const std::string& value);
void load_config_file(Scenario& sc, const std::string& path);
std::vector<std::string> setting_keys();

}  // namespace coflow
