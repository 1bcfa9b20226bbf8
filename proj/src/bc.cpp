#include "coflow/bc.hpp"

namespace coflow {

const char* gravity_mode_name(GravityMode m) {
    switch (m) {
        case GravityMode::none: return "none";
        case GravityMode::bond: return "bond";
        case GravityMode::simple: return "simple";
    }
    return "?";
}

GravityMode parse_gravity_mode(const std::string& s) {
    if (s == "none") return GravityMode::none;
    if (s == "bond") return GravityMode::bond;
    if (s == "simple") return GravityMode::simple;
    throw ConfigError("unknown gravity_mode '" + s + "' (none|bond|simple)");
}

Real Params::gravity_coefficient() const {
    switch (gravity_mode) {
        case GravityMode::none: return 0.0;
        case GravityMode::bond: return bond / capillary * gravity_accel;
        case GravityMode::simple: return gravity_accel;
    }
    return 0.0;
}

void Params::validate() const {
    auto positive = [](Real v, const char* name) {
        if (!(v > 0)) throw ConfigError(std::string(name) + " must be positive");
    };
    positive(reynolds, "reynolds");
    positive(capillary, "capillary");
    positive(cahn, "cahn");
    positive(diffusion, "diffusion");
    positive(dt, "dt");
    positive(ode_damping, "ode_damping");
    positive(density_ratio, "density_ratio");
    positive(viscosity_ratio, "viscosity_ratio");
    if (stabilizer_s < 0) throw ConfigError("stabilizer_s must be non-negative");
    if (!std::isnan(radicand_offset_B)) positive(radicand_offset_B, "radicand_offset_B");
    positive(radicand_offset_G, "radicand_offset_G");
    if (bond < 0) throw ConfigError("bond must be non-negative");
    if (end_time < 0) throw ConfigError("end_time must be non-negative");
    const Real expected = sigma_from_capillary(capillary);
    if (std::abs(sigma_coef - expected) > 1e-10 * expected)
        throw ConfigError("sigma_coef does not equal 3/(2 sqrt(2) Ca)");
}

Real inflow_profile(Real r, const Params& p, Real radius_a) {
    const Real a = radius_a;
    if (r < 0 || r > a) throw std::invalid_argument("inflow_profile: r outside [0, a]");
    if (r < 1.0) return 2.0 * (1.0 - r * r);
    // annular Poiseuille between r=1 and r=a, normalised to carry flux Q_r
    const Real la = std::log(a);
    const Real one_a2 = 1.0 / (a * a);
    const Real num = 1.0 - (r / a) * (r / a) + (1.0 - one_a2) / la * std::log(r / a);
    const Real den = 1.0 - one_a2 * one_a2 - (1.0 - one_a2) * (1.0 - one_a2) / la;
    return 2.0 * p.flow_ratio / (a * a) * num / den;
}

static FieldBc scalar_neumann() { return {}; }

BcSet physical_bcs(const Grid& g, const Params& p) {
    BcSet b;
    // phase field: Dirichlet +1 on the annular inlet, -1 in the tube
    b.phi = scalar_neumann();
    b.phi.west = {BcKind::dirichlet, [](Real r) { return r < 1.0 ? -1.0 : 1.0; }};
    // chemical potential: Dirichlet 0 at the inlet
    b.mu = scalar_neumann();
    b.mu.west = {BcKind::dirichlet, {}};
    // pressure: Dirichlet 0 at the outlet, natural elsewhere
    b.p = scalar_neumann();
    b.p.east = {BcKind::dirichlet, {}};
    // axial velocity: inflow profile, no-slip wall, symmetric axis, outflow
    const Params params = p;
    const Real a = g.radius;
    b.vz.west = {BcKind::dirichlet, [params, a](Real r) { return inflow_profile(r, params, a); }};
    b.vz.east = {BcKind::neumann, {}};
    b.vz.south = {BcKind::neumann, {}};
    b.vz.north = {BcKind::dirichlet, {}};
    // radial velocity: zero on every side (axis odd symmetry is Dirichlet 0)
    b.vr.west = {BcKind::dirichlet, {}};
    b.vr.east = {BcKind::dirichlet, {}};
    b.vr.south = {BcKind::dirichlet, {}};
    b.vr.north = {BcKind::dirichlet, {}};
    return b;
}

BcSet initial_bcs(const Grid& g, const Params& p) {
    BcSet b = physical_bcs(g, p);
    b.vz.west = {BcKind::dirichlet, {}};                        // quiescent trace
    b.phi.west = {BcKind::dirichlet, [](Real) { return 1.0; }};  // phi == 1 everywhere
    return b;
}

}  // namespace coflow
