#pragma once

#include <numbers>

namespace magemit {

/// Fundamental constants in SI units (CODATA 2018). hbar is derived from the
/// exact h so that h == 2*pi*hbar holds to machine precision.
struct PhysicalConstants {
    double electron_charge;    ///< magnitude of the electron charge e (C)
    double electron_mass;      ///< electron rest mass m (kg)
    double planck;             ///< h (J s)
    double hbar;               ///< h / 2pi (J s)
    double vacuum_permittivity;///< epsilon_0 (F/m)
    double speed_of_light;     ///< c (m/s)
};

inline constexpr PhysicalConstants codata2018{
    1.602176634e-19,
    9.1093837015e-31,
    6.62607015e-34,
    6.62607015e-34 / (2.0 * std::numbers::pi),
    8.8541878128e-12,
    299792458.0,
};

constexpr double ev_to_joule(double ev) { return ev * codata2018.electron_charge; }
constexpr double joule_to_ev(double j) { return j / codata2018.electron_charge; }

} // namespace magemit
