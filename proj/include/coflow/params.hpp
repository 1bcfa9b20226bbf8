#pragma once

#include <cmath>

#include "coflow/types.hpp"

namespace coflow {

enum class GravityMode {
    none,    // no body force
    bond,    // (Bo/Ca) * rho * g_accel in +z   (parameter-study form)
    simple,  // rho * g_accel in +z             (dimensional-style form)
};

const char* gravity_mode_name(GravityMode m);
GravityMode parse_gravity_mode(const std::string& s);

/// All dimensionless groups and scheme constants.  radicand_offset_B may be
/// left unset (NaN); it is then derived from the domain at startup so the
/// radicand under U stays positive for any phase field.
struct Params {
    Real reynolds = 0.01;
    Real capillary = 0.04;
    Real sigma_coef = sigma_from_capillary(0.04);  // B = 3/(2 sqrt(2) Ca)
    Real cahn = 0.1;                               // interface thickness eps
    Real diffusion = 0.05;                         // L_d
    Real density_ratio = 10.0;                     // lambda_rho = rho2/rho1
    Real viscosity_ratio = 1.0;                    // lambda_eta = eta2/eta1
    Real flow_ratio = 10.0;                        // Q_r = Q2/Q1
    Real stabilizer_s = 1.0;                       // s in s*phi^2/2
    Real radicand_offset_B = std::nan("");         // B under U's radical
    Real radicand_offset_G = 1e4;                  // G under K's radical
    Real ode_damping = 1e-3;                       // alpha
    Real dt = 1.37e-3;
    Real bond = 0.0;  // Bo; 0 disables gravity regardless of mode
    Real end_time = 13.0;

    GravityMode gravity_mode = GravityMode::none;
    Real gravity_accel = 10.0;  // g constant used by the gravity hooks

    static Real sigma_from_capillary(Real ca) { return 3.0 / (2.0 * std::sqrt(2.0) * ca); }

    /// chi = min(rho1, rho2)/2 in units of rho1.
    Real penalty_chi() const { return 0.5 * std::min(1.0, density_ratio); }

    void set_capillary(Real ca) {
        capillary = ca;
        sigma_coef = sigma_from_capillary(ca);
    }

    bool has_gravity() const { return gravity_mode != GravityMode::none && bond != 0.0; }

    /// Body-force coefficient multiplying rho^{n+1} in the +z momentum source.
    Real gravity_coefficient() const;

    /// Throws ConfigError on violated invariants (positivity, sigma/Ca link).
    void validate() const;

    /// Default B = (3/4) s * \int_Omega r dr dz + 1, which dominates
    /// -min(F - s phi^2/2) * \int r  (the minimum is -(3/4) s^2 ... at s=1
    /// the integrand minimum is -3/4).
    static Real default_radicand_B(Real s, Real domain_r_integral) {
        return 0.75 * s * domain_r_integral + 1.0;
    }
};

}  // namespace coflow
