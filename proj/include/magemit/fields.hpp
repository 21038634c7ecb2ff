#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "magemit/constants.hpp"
#include "magemit/errors.hpp"

namespace magemit {

/// Uniform applied fields: E0 tilted by alpha against the magnetic
/// induction B0. alpha = 0 means collinear fields, alpha = pi/2 means the
/// induction lies in the emitting surface.
struct FieldConfiguration {
    double e_strength;  ///< E0 (V/m), >= 0
    double b_induction; ///< B0 (T),   >= 0
    double alpha;       ///< angle between E0 and B0 (rad), in [0, pi/2]

    FieldConfiguration(double e0, double b0, double angle = 0.0)
        : e_strength(e0), b_induction(b0), alpha(angle) {
        if (!std::isfinite(e0) || e0 < 0.0)
            throw error("field configuration: E0 must be finite and >= 0, got " +
                        std::to_string(e0));
        if (!std::isfinite(b0) || b0 < 0.0)
            throw error("field configuration: B0 must be finite and >= 0, got " +
                        std::to_string(b0));
        if (!std::isfinite(angle) || angle < 0.0 || angle > std::numbers::pi / 2.0)
            throw error("field configuration: alpha must lie in [0, pi/2], got " +
                        std::to_string(angle));
    }
};

/// omega_B = e*B0/m. Zero when B0 is zero.
inline double cyclotron_frequency(const FieldConfiguration& config) {
    return codata2018.electron_charge * config.b_induction / codata2018.electron_mass;
}

/// v_d = (E0/B0)*sin(alpha), the E x B drift of the Larmor orbit centre.
inline double drift_velocity(const FieldConfiguration& config) {
    if (config.b_induction <= 0.0)
        throw zero_field_error("drift velocity undefined at B0 = 0");
    return config.e_strength / config.b_induction * std::sin(config.alpha);
}

/// Equilibrium transverse offset of the oscillator centre,
/// x0 = p_z/(m*omega_B) + e*E0*sin(alpha)/(m*omega_B^2).
inline double guiding_center_offset(const FieldConfiguration& config, double p_z) {
    if (config.b_induction <= 0.0)
        throw zero_field_error("guiding centre undefined at B0 = 0");
    const double w = cyclotron_frequency(config);
    const double m = codata2018.electron_mass;
    return p_z / (m * w) +
           codata2018.electron_charge * config.e_strength * std::sin(config.alpha) /
               (m * w * w);
}

/// Largest induction (T) below which the Lorentz-reduced field is real.
inline double critical_induction(const FieldConfiguration& config) {
    return config.e_strength / codata2018.speed_of_light;
}

/// E* = E0*sqrt(1 - B0^2 c^2 / E0^2), the invariant-preserving effective
/// field. Real only for E0 > c*B0; outside that domain the error reports the
/// critical induction instead of producing a NaN.
inline double lorentz_reduced_field(const FieldConfiguration& config) {
    const double cb = codata2018.speed_of_light * config.b_induction;
    if (cb >= config.e_strength) {
        throw field_domain_error(
            "lorentz_reduced_field undefined: c*B0 >= E0 (critical induction B_crit = " +
                std::to_string(critical_induction(config)) + " T)",
            critical_induction(config));
    }
    const double ratio = cb / config.e_strength;
    return config.e_strength * std::sqrt(1.0 - ratio * ratio);
}

} // namespace magemit
