// Command-line front end: run a scenario, grid/time refinement studies and
// parameter sweeps.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "coflow/convergence.hpp"
#include "coflow/io.hpp"

using namespace coflow;

namespace {

struct CommonOpts {
    std::string preset_name;
    std::string config_file;
    std::vector<std::string> sets;
    std::string out_dir;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--preset", o.preset_name, "named preset (baseline|gravity-zhang|stability)");
    cmd->add_option("--config", o.config_file, "key=value configuration file");
    cmd->add_option("--set", o.sets, "override key=value (repeatable)")->expected(-1);
    cmd->add_option("--out", o.out_dir, "output directory");
}

Scenario build_scenario(CLI::App* cmd, const CommonOpts& o,
                        const std::map<std::string, std::string>& direct_flags) {
    Scenario sc = o.preset_name.empty() ? preset("baseline") : preset(o.preset_name);
    if (!o.config_file.empty()) load_config_file(sc, o.config_file);
    for (const auto& [key, flag] : direct_flags) {
        if (cmd->count("--" + key)) apply_setting(sc, key, flag);
    }
    for (const auto& kv : o.sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
        apply_setting(sc, kv.substr(0, eq), kv.substr(eq + 1));
    }
    return sc;
}

std::vector<Real> parse_reals(const std::string& csv) {
    std::vector<Real> out;
    std::string token;
    std::stringstream ss(csv);
    while (std::getline(ss, token, ',')) out.push_back(std::stod(token));
    return out;
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    for (Real v : parse_reals(csv)) out.push_back(static_cast<int>(std::lround(v)));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"axisymmetric two-phase coflow droplet-formation solver"};
    app.require_subcommand(1);

    // every configuration key doubles as a direct flag
    auto add_key_flags = [&](CLI::App* cmd, std::map<std::string, std::string>& store) {
        for (const auto& key : setting_keys())
            cmd->add_option("--" + key, store[key], "config key " + key);
    };

    // ---- run
    auto* run_cmd = app.add_subcommand("run", "advance a scenario and write diagnostics");
    CommonOpts run_o;
    std::map<std::string, std::string> run_flags;
    add_common(run_cmd, run_o);
    add_key_flags(run_cmd, run_flags);
    std::string restart_file;
    run_cmd->add_option("--restart", restart_file, "continue from a checkpoint file");

    // ---- converge-space
    auto* cs_cmd = app.add_subcommand("converge-space", "grid-refinement study at fixed dt");
    CommonOpts cs_o;
    std::map<std::string, std::string> cs_flags;
    add_common(cs_cmd, cs_o);
    add_key_flags(cs_cmd, cs_flags);
    std::string cs_levels = "10,20,40";
    int cs_ref = 80;
    double cs_dt = 1e-5, cs_tend = 0.2;
    cs_cmd->add_option("--levels", cs_levels, "comma list of 1/h levels");
    cs_cmd->add_option("--ref", cs_ref, "reference 1/h");
    cs_cmd->add_option("--study-dt", cs_dt, "fixed time step of the study");
    cs_cmd->add_option("--t-end", cs_tend, "comparison time");

    // ---- converge-time
    auto* ct_cmd = app.add_subcommand("converge-time", "time-refinement study on a fixed grid");
    CommonOpts ct_o;
    std::map<std::string, std::string> ct_flags;
    add_common(ct_cmd, ct_o);
    add_key_flags(ct_cmd, ct_flags);
    std::string ct_dts = "4e-4,2e-4,1e-4,5e-5";
    double ct_ref = 1e-5, ct_tend = 0.2;
    ct_cmd->add_option("--dts", ct_dts, "comma list of time steps");
    ct_cmd->add_option("--ref-dt", ct_ref, "reference time step");
    ct_cmd->add_option("--t-end", ct_tend, "comparison time");

    // ---- sweep
    auto* sw_cmd = app.add_subcommand("sweep", "parameter sweep to first pinch-off");
    CommonOpts sw_o;
    std::map<std::string, std::string> sw_flags;
    add_common(sw_cmd, sw_o);
    add_key_flags(sw_cmd, sw_flags);
    std::string sw_param, sw_values, sw_preset;
    sw_cmd->add_option("--param", sw_param, "parameter key to vary");
    sw_cmd->add_option("--values", sw_values, "comma list of values");
    sw_cmd->add_option("--sweep-preset", sw_preset,
                       "published sweep (ca|density|ld|bo|re|viscosity)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            Scenario sc = build_scenario(run_cmd, run_o, run_flags);
            Simulation sim(sc);
            if (!restart_file.empty()) restore_into(sim, load_checkpoint(restart_file));
            std::optional<std::string> out;
            if (!run_o.out_dir.empty()) out = run_o.out_dir;
            const RunResult res = run_scenario(sim, out, /*keep_diags=*/false);
            const DiagnosticsRecord r = sim.make_record();
            std::cout << "steps " << r.step << "  t " << r.time << "  E_M " << r.E_M << "  E_O "
                      << r.E_O << "\n"
                      << "Q " << r.Q << "  R " << r.R << "  T " << r.T << "  U " << r.U << "  K "
                      << r.K << "\n"
                      << "divnorm " << r.div_norm << "  Rd " << res.droplet_radius_max
                      << "  pinch " << (res.pinched ? "yes" : "no");
            if (res.pinched) std::cout << " (t=" << res.first_pinch_time << ")";
            std::cout << std::endl;
        } else if (cs_cmd->parsed()) {
            Scenario sc = build_scenario(cs_cmd, cs_o, cs_flags);
            const auto rep = converge_space(sc, parse_ints(cs_levels), cs_ref, cs_dt, cs_tend);
            std::cout << "h";
            for (auto& [name, _] : rep.errors) std::cout << "  e(" << name << ")";
            std::cout << "\n";
            for (size_t k = 0; k < rep.levels.size(); ++k) {
                std::cout << rep.levels[k];
                for (auto& [_, errs] : rep.errors) std::cout << "  " << errs[k];
                std::cout << "\n";
            }
            for (auto& [name, ord] : rep.fitted_order)
                std::cout << "order(" << name << ") = " << ord << "\n";
            if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
        } else if (ct_cmd->parsed()) {
            Scenario sc = build_scenario(ct_cmd, ct_o, ct_flags);
            const auto rep = converge_time(sc, parse_reals(ct_dts), ct_ref, ct_tend);
            std::cout << "dt";
            for (auto& [name, _] : rep.errors) std::cout << "  e(" << name << ")";
            std::cout << "\n";
            for (size_t k = 0; k < rep.levels.size(); ++k) {
                std::cout << rep.levels[k];
                for (auto& [_, errs] : rep.errors) std::cout << "  " << errs[k];
                std::cout << "\n";
            }
            for (auto& [name, ord] : rep.fitted_order)
                std::cout << "order(" << name << ") = " << ord << "\n";
        } else if (sw_cmd->parsed()) {
            Scenario sc = build_scenario(sw_cmd, sw_o, sw_flags);
            SweepResult res;
            if (!sw_preset.empty()) {
                SweepPreset sp = sweep_preset(sw_preset, sc);
                res = run_sweep(sp.parameter, sp.values, sp.base, sp.alpha_override);
            } else {
                if (sw_param.empty() || sw_values.empty())
                    throw ConfigError("sweep needs --sweep-preset or --param/--values");
                res = run_sweep(sw_param, parse_reals(sw_values), sc);
            }
            std::cout << res.parameter << "  R_d  pinch_time\n";
            for (auto& row : res.rows) {
                std::cout << row.value << "  ";
                if (row.pinched)
                    std::cout << row.R_d << "  " << row.pinch_time << "\n";
                else
                    std::cout << "censored (no pinch-off by end_time)\n";
            }
            std::cout << "verdict: " << res.verdict << std::endl;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}
