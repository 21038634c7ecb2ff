#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "magemit/constants.hpp"
#include "magemit/detail/ddreal.hpp"
#include "magemit/errors.hpp"
#include "magemit/fields.hpp"
#include "magemit/specialfn.hpp"

namespace magemit {

/// Quantized transverse motion: Landau index n plus the conserved canonical
/// momentum along the induction axis. Requires B0 > 0.
struct LandauState {
    int n;
    double p_z;                 ///< kg m/s
    FieldConfiguration config;

    LandauState(int index, double momentum, FieldConfiguration cfg)
        : n(index), p_z(momentum), config(cfg) {
        if (index < 0)
            throw domain_error("LandauState: index must be >= 0, got " + std::to_string(index));
        if (!(cfg.b_induction > 0.0))
            throw zero_field_error("LandauState: no quantized transverse motion at B0 = 0");
    }
};

/// Oscillator length a = sqrt(hbar / (m omega_B)).
inline double magnetic_length(const FieldConfiguration& config) {
    if (!(config.b_induction > 0.0))
        throw zero_field_error("magnetic_length undefined at B0 = 0");
    return std::sqrt(codata2018.hbar /
                     (codata2018.electron_mass * cyclotron_frequency(config)));
}

/// Dimensionless oscillator coordinate xi = (x - x0) / a.
inline double xi_of_x(const LandauState& state, double x) {
    const double a = magnetic_length(state.config);
    return (x - guiding_center_offset(state.config, state.p_z)) / a;
}

/// Transverse energy
///   eps_x = (n + 1/2) hbar omega_B + m v_d^2 / 2 - e E0 sin(alpha) x0.
/// The last term is the electrostatic energy at the guiding centre; the
/// field component along the oscillator axis is E0 sin(alpha).
inline double landau_energy(const LandauState& state) {
    const double w = cyclotron_frequency(state.config);
    const double m = codata2018.electron_mass;
    const double sa = std::sin(state.config.alpha);
    const double vd = state.config.e_strength / state.config.b_induction * sa;
    const double x0 = guiding_center_offset(state.config, state.p_z);
    return (state.n + 0.5) * codata2018.hbar * w + 0.5 * m * vd * vd -
           codata2018.electron_charge * state.config.e_strength * sa * x0;
}

/// Residual of the dimensionless eigenvalue identity: builds the scaled
/// energy from eps_x and the field terms and subtracts (2n + 1). Evaluated
/// in double-double arithmetic because at laboratory field strengths the
/// field terms exceed hbar omega_B by up to nine orders of magnitude, which
/// would push the cancellation below double resolution.
inline double dimensionless_energy_check(const LandauState& state) {
    using detail::ddreal;
    if (!(state.config.b_induction > 0.0))
        throw zero_field_error("dimensionless_energy_check undefined at B0 = 0");
    const ddreal e(codata2018.electron_charge);
    const ddreal m(codata2018.electron_mass);
    const ddreal hbar(codata2018.hbar);
    const ddreal e0(state.config.e_strength);
    const ddreal b0(state.config.b_induction);
    const ddreal sa(std::sin(state.config.alpha));
    const ddreal pz(state.p_z);

    const ddreal w = e * b0 / m;
    const ddreal hw = hbar * w;
    const ddreal es = e0 * sa;
    const ddreal vd = es / b0;
    const ddreal x0 = pz / (m * w) + e * es / (m * w * w);

    const ddreal eps_x =
        ddreal(state.n + 0.5) * hw + ddreal(0.5) * m * vd * vd - e * es * x0;
    const ddreal scaled = (ddreal(2.0) * eps_x + e * e * es * es / (m * w * w) +
                           ddreal(2.0) * e * es * pz / (m * w)) /
                          hw;
    return (scaled - ddreal(2.0 * state.n + 1.0)).value();
}

/// Oscillator eigenfunction times the plane wave along z:
///   psi(x, z) = (a sqrt(pi) 2^n n!)^(-1/2) exp(-xi^2/2) H_n(xi) exp(i p_z z / hbar).
/// Normalized so that the integral of |psi|^2 over x is one at fixed z.
inline std::complex<double> transverse_wavefunction(const LandauState& state, double x,
                                                    double z) {
    if (state.n > 50)
        throw domain_error("transverse_wavefunction: index capped at 50, got " +
                           std::to_string(state.n));
    const double a = magnetic_length(state.config);
    const double xi = xi_of_x(state, x);
    const double log_norm = -0.5 * (std::log(a) + 0.5 * std::log(std::numbers::pi) +
                                    state.n * std::numbers::ln2 + std::lgamma(state.n + 1.0));
    const double radial = std::exp(log_norm - 0.5 * xi * xi) * hermite(state.n, xi);
    const double phase = state.p_z * z / codata2018.hbar;
    return radial * std::complex<double>(std::cos(phase), std::sin(phase));
}

/// Longitudinal (field-direction) motion: continuous energy plus the two
/// coefficients of the travelling-wave basis pair.
struct LongitudinalState {
    double energy_y; ///< J
    std::complex<double> coeff_a;
    std::complex<double> coeff_b;

    LongitudinalState(double energy, std::complex<double> a, std::complex<double> b)
        : energy_y(energy), coeff_a(a), coeff_b(b) {
        if (a == std::complex<double>(0.0) && b == std::complex<double>(0.0))
            throw domain_error("LongitudinalState: coefficients must not both vanish");
    }
};

namespace detail {
/// Field component along the ramp direction, E0 cos(alpha). Angles within
/// 1e-12 of the perpendicular limit count as degenerate (free motion), since
/// cos(pi/2) never reaches zero in floating point.
inline double ramp_field(const FieldConfiguration& config) {
    const double ca = std::cos(config.alpha);
    if (!(config.e_strength > 0.0) || ca <= 1e-12)
        throw domain_error("requires E0 cos(alpha) > 0; the motion along the ramp is free");
    return config.e_strength * ca;
}
} // namespace detail

/// Length scale of the linear-ramp (Airy) problem, (hbar^2/(2 m e E0 cos a))^(1/3).
inline double airy_length_scale(const FieldConfiguration& config) {
    const double ec = detail::ramp_field(config);
    return std::cbrt(codata2018.hbar * codata2018.hbar /
                     (2.0 * codata2018.electron_mass * codata2018.electron_charge * ec));
}

/// Affine map from position to the Airy variable,
///   eta = -(2 m e E0 cos(alpha) / hbar^2)^(1/3) (y - eps_y / (e E0 cos(alpha))).
/// The slope is negative and eta = 0 falls on the turning point; the cube
/// root carries hbar^2 so that Y'' = eta Y holds in the mapped variable.
inline double eta_of_y(const FieldConfiguration& config, double energy_y, double y) {
    const double ec = detail::ramp_field(config);
    const double scale = airy_length_scale(config);
    const double turning = energy_y / (codata2018.electron_charge * ec);
    return -(y - turning) / scale;
}

/// Y(eta(y)) = A h1(eta) + B h2(eta) with the travelling basis
/// h1 = Ai - i Bi, h2 = Ai + i Bi (proportional to the two Hankel-1/3
/// branches in the oscillatory region). A = B = 1/2 selects the decaying
/// branch Ai(eta).
inline std::complex<double> longitudinal_wavefunction(const LongitudinalState& state,
                                                      const FieldConfiguration& config,
                                                      double y) {
    const double eta = eta_of_y(config, state.energy_y, y);
    const AiryPair p = airy(eta);
    const std::complex<double> h1(p.ai, -p.bi);
    const std::complex<double> h2(p.ai, p.bi);
    return state.coeff_a * h1 + state.coeff_b * h2;
}

} // namespace magemit
