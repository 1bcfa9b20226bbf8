#include "coflow/scenario.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace coflow {

void Scenario::finalize() {
    const Grid g = grid();
    if (std::isnan(params.radicand_offset_B))
        params.radicand_offset_B =
            Params::default_radicand_B(params.stabilizer_s, domain_r_integral(g));
    params.validate();
}

Scenario preset(const std::string& name) {
    Scenario sc;
    sc.name = name;
    if (name == "baseline") {
        // coflowing droplet formation reference case
        sc.n_z = 200;
        sc.n_r = 30;
        sc.length_L = 20.0;
        sc.radius_a = 3.0;
        sc.params.cahn = 0.1;
        sc.params.dt = 1.37e-3;
        sc.params.flow_ratio = 10.0;
        sc.params.ode_damping = 1e-3;
        sc.params.diffusion = 0.05;
        sc.params.density_ratio = 10.0;
        sc.params.viscosity_ratio = 1.0;
        sc.params.reynolds = 0.01;
        sc.params.set_capillary(0.04);
        sc.params.end_time = 15.0;
        sc.snapshot_cadence = 0;
        sc.output_cadence = 10;
    } else if (name == "gravity-zhang") {
        // injection against gravity, matched to the bubble-formation study
        sc.n_z = 200;
        sc.n_r = 40;
        sc.length_L = 20.0;
        sc.radius_a = 4.0;
        sc.params.cahn = 0.1;
        sc.params.flow_ratio = 0.0;
        sc.params.diffusion = 0.156;
        sc.params.density_ratio = 1.2048;
        sc.params.viscosity_ratio = 0.1123;
        sc.params.reynolds = 1.5461;
        sc.params.set_capillary(0.006986);
        sc.params.bond = 1.5776;
        sc.params.dt = 2.67e-4;
        sc.params.ode_damping = 1e-5;
        sc.params.gravity_mode = GravityMode::simple;
        sc.params.gravity_accel = 10.0;
        sc.params.end_time = 10.0;
    } else if (name == "stability") {
        // desk-scale energy-stability runs
        sc = preset("baseline");
        sc.name = name;
        sc.n_z = 100;
        sc.n_r = 15;
        sc.params.end_time = 500 * sc.params.dt;
    } else {
        throw ConfigError("unknown preset '" + name + "'");
    }
    return sc;
}

std::vector<std::string> preset_names() { return {"baseline", "gravity-zhang", "stability"}; }

namespace {

using Setter = std::function<void(Scenario&, const std::string&)>;

Real to_real(const std::string& v) {
    size_t pos = 0;
    const Real x = std::stod(v, &pos);
    if (pos != v.size()) throw ConfigError("bad numeric value '" + v + "'");
    return x;
}
long to_long(const std::string& v) {
    size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw ConfigError("bad integer value '" + v + "'");
    return x;
}

const std::map<std::string, Setter>& table() {
    static const std::map<std::string, Setter> t = {
        {"n_z", [](Scenario& s, const std::string& v) { s.n_z = (int)to_long(v); }},
        {"n_r", [](Scenario& s, const std::string& v) { s.n_r = (int)to_long(v); }},
        {"length_L", [](Scenario& s, const std::string& v) { s.length_L = to_real(v); }},
        {"radius_a", [](Scenario& s, const std::string& v) { s.radius_a = to_real(v); }},
        {"reynolds", [](Scenario& s, const std::string& v) { s.params.reynolds = to_real(v); }},
        {"capillary", [](Scenario& s, const std::string& v) { s.params.set_capillary(to_real(v)); }},
        {"sigma_coef", [](Scenario& s, const std::string& v) { s.params.sigma_coef = to_real(v); }},
        {"cahn", [](Scenario& s, const std::string& v) { s.params.cahn = to_real(v); }},
        {"diffusion", [](Scenario& s, const std::string& v) { s.params.diffusion = to_real(v); }},
        {"density_ratio",
         [](Scenario& s, const std::string& v) { s.params.density_ratio = to_real(v); }},
        {"viscosity_ratio",
         [](Scenario& s, const std::string& v) { s.params.viscosity_ratio = to_real(v); }},
        {"flow_ratio", [](Scenario& s, const std::string& v) { s.params.flow_ratio = to_real(v); }},
        {"stabilizer_s",
         [](Scenario& s, const std::string& v) { s.params.stabilizer_s = to_real(v); }},
        {"radicand_offset_B",
         [](Scenario& s, const std::string& v) { s.params.radicand_offset_B = to_real(v); }},
        {"radicand_offset_G",
         [](Scenario& s, const std::string& v) { s.params.radicand_offset_G = to_real(v); }},
        {"ode_damping",
         [](Scenario& s, const std::string& v) { s.params.ode_damping = to_real(v); }},
        {"dt", [](Scenario& s, const std::string& v) { s.params.dt = to_real(v); }},
        {"bond", [](Scenario& s, const std::string& v) { s.params.bond = to_real(v); }},
        {"end_time", [](Scenario& s, const std::string& v) { s.params.end_time = to_real(v); }},
        {"gravity_mode",
         [](Scenario& s, const std::string& v) { s.params.gravity_mode = parse_gravity_mode(v); }},
        {"gravity_accel",
         [](Scenario& s, const std::string& v) { s.params.gravity_accel = to_real(v); }},
        {"output_cadence",
         [](Scenario& s, const std::string& v) { s.output_cadence = to_long(v); }},
        {"snapshot_cadence",
         [](Scenario& s, const std::string& v) { s.snapshot_cadence = to_long(v); }},
        {"checkpoint_cadence",
         [](Scenario& s, const std::string& v) { s.checkpoint_cadence = to_long(v); }},
        {"stop_after_pinch",
         [](Scenario& s, const std::string& v) { s.stop_after_pinch = (int)to_long(v); }},
        {"solver", [](Scenario& s, const std::string& v) {
             if (v != "auto" && v != "direct" && v != "iterative")
                 throw ConfigError("solver must be auto|direct|iterative");
             s.solver.mode = v;
         }},
        {"rtol", [](Scenario& s, const std::string& v) { s.solver.rtol = to_real(v); }},
        {"max_iter", [](Scenario& s, const std::string& v) { s.solver.max_iter = (int)to_long(v); }},
    };
    return t;
}

}  // namespace

void apply_setting(Scenario& sc, const std::string& key, const std::string& value) {
    auto it = table().find(key);
    if (it == table().end()) throw ConfigError("unknown configuration key '" + key + "'");
    it->second(sc, value);
}

std::vector<std::string> setting_keys() {
    std::vector<std::string> out;
    for (auto& [k, _] : table()) out.push_back(k);
    return out;
}

void load_config_file(Scenario& sc, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty()) continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
        apply_setting(sc, trimmed.substr(0, eq), trimmed.substr(eq + 1));
    }
}

}  // namespace coflow
