#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magemit/constants.hpp"
#include "magemit/errors.hpp"
#include "magemit/fields.hpp"

namespace magemit {

/// Which terms of the surface barrier are active.
///
/// Energy conventions: the bare/schottky/magnetic kinds measure energy from
/// the zero of the applied-field ramp at the surface, so the image-rounded
/// barrier tops out below zero (at -2 e E0 x_m for the schottky kind). The
/// step barrier built by collinear_barrier() instead puts the metal interior
/// at zero and rises to the barrier height C at the surface.
enum class BarrierKind {
    bare_triangular,  ///< -e E0 x only
    schottky,         ///< -e E0 x - e^2/(16 pi eps0 x)
    magnetic_parallel,///< schottky plus the parabolic term m omega_B^2 x^2 / 2
    collinear_step    ///< 0 inside the metal, C + schottky outside
};

struct PotentialSpec {
    BarrierKind kind;
    FieldConfiguration config;
    double barrier_height = 0.0; ///< C (J); used by collinear_step only
};

/// Classical turning points / barrier geometry of one spec at one energy.
struct BarrierAnalysis {
    double energy = 0.0;                  ///< J
    std::vector<double> turning_points;   ///< ascending solutions of V(x) = energy
    double peak_position = 0.0;           ///< m
    double peak_value = 0.0;              ///< J
    std::vector<double> zero_crossings;   ///< ascending solutions of V(x) = 0
    /// Region outside the barrier where V < energy: starts at the barrier
    /// exit (or the search floor when the energy clears the barrier) and ends
    /// where the potential rises back through the energy, +infinity when it
    /// never does within the search range.
    std::optional<std::pair<double, double>> emission_window;
};

/// Root/extremum search controls. The upper bound must comfortably contain
/// the outer parabolic wall (~1e-3 m at 1 T, 1e8 V/m).
struct SearchOptions {
    double x_min = 1e-12;  ///< m; image term is not regularized below this
    double x_max = 1e-1;   ///< m
    int scan_points = 4096;
};

namespace detail {

inline double image_coefficient() {
    return codata2018.electron_charge * codata2018.electron_charge /
           (16.0 * std::numbers::pi * codata2018.vacuum_permittivity);
}

inline bool has_image_term(BarrierKind kind) { return kind != BarrierKind::bare_triangular; }

} // namespace detail

inline double evaluate_potential(const PotentialSpec& spec, double x) {
    if (!std::isfinite(x))
        throw domain_error("evaluate_potential: position must be finite");
    const double e = codata2018.electron_charge;
    const double e0 = spec.config.e_strength;
    switch (spec.kind) {
    case BarrierKind::bare_triangular:
        return -(e * e0) * x;
    case BarrierKind::collinear_step:
        if (x < 0.0) return 0.0;
        [[fallthrough]];
    default:
        break;
    }
    if (x < 1e-12)
        throw domain_error("evaluate_potential: image term rejected below x = 1e-12 m (x = " +
                           std::to_string(x) + ")");
    double v = 0.0;
    if (spec.kind == BarrierKind::magnetic_parallel) {
        const double w = cyclotron_frequency(spec.config);
        v += 0.5 * codata2018.electron_mass * w * w * x * x;
    }
    if (spec.kind == BarrierKind::collinear_step) v += spec.barrier_height;
    v -= e * e0 * x;
    v -= detail::image_coefficient() / x;
    return v;
}

namespace detail {

inline double potential_derivative(const PotentialSpec& spec, double x) {
    const double e = codata2018.electron_charge;
    const double e0 = spec.config.e_strength;
    if (spec.kind == BarrierKind::bare_triangular) return -e * e0;
    if (spec.kind == BarrierKind::collinear_step && x < 0.0) return 0.0;
    double d = -e * e0 + image_coefficient() / (x * x);
    if (spec.kind == BarrierKind::magnetic_parallel) {
        const double w = cyclotron_frequency(spec.config);
        d += codata2018.electron_mass * w * w * x;
    }
    return d;
}

inline std::vector<double> log_grid(const SearchOptions& opts) {
    std::vector<double> xs;
    xs.reserve(opts.scan_points);
    const double ratio = std::log(opts.x_max / opts.x_min) / (opts.scan_points - 1);
    for (int i = 0; i < opts.scan_points; ++i)
        xs.push_back(opts.x_min * std::exp(i * ratio));
    xs.back() = opts.x_max;
    return xs;
}

/// Bisect f down to machine width. f(lo) and f(hi) must have opposite (or
/// zero) signs.
template <typename F>
inline double bisect(F f, double lo, double hi, double flo) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// All ascending solutions of f(x) = 0 over the scan nodes.
template <typename F>
inline std::vector<double> scan_roots(F f, const std::vector<double>& xs) {
    std::vector<double> roots;
    double fprev = f(xs.front());
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double fcur = f(xs[i]);
        if (fprev == 0.0)
            roots.push_back(xs[i - 1]);
        else if (fcur != 0.0 && (fprev < 0.0) != (fcur < 0.0))
            roots.push_back(bisect(f, xs[i - 1], xs[i], fprev));
        fprev = fcur;
    }
    if (fprev == 0.0) roots.push_back(xs.back());
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return b - a <= 8e-12 * b; }),
                roots.end());
    return roots;
}

} // namespace detail

/// Interior maximum of the barrier, by bracketed bisection on the analytic
/// derivative. For the pure image-rounded barrier this lands on the closed
/// form x_m = sqrt(e / (16 pi eps0 E0)).
inline std::pair<double, double> barrier_peak(const PotentialSpec& spec,
                                              const SearchOptions& opts = {}) {
    if (!detail::has_image_term(spec.kind))
        throw no_peak_error("barrier_peak: the bare triangular ramp has no interior maximum");
    const auto xs = detail::log_grid(opts);
    double best_x = 0.0, best_v = -std::numeric_limits<double>::infinity();
    double dprev = detail::potential_derivative(spec, xs.front());
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double dcur = detail::potential_derivative(spec, xs[i]);
        if (dprev > 0.0 && dcur <= 0.0) {
            const double x =
                detail::bisect([&](double t) { return detail::potential_derivative(spec, t); },
                               xs[i - 1], xs[i], dprev);
            const double v = evaluate_potential(spec, x);
            if (v > best_v) { best_v = v; best_x = x; }
        }
        dprev = dcur;
    }
    if (best_x == 0.0)
        throw no_peak_error("barrier_peak: no interior maximum found in the search range");
    return {best_x, best_v};
}

/// Solve V(x) = energy on (x_min, x_max] and assemble the barrier geometry.
inline BarrierAnalysis turning_points(const PotentialSpec& spec, double energy,
                                      const SearchOptions& opts = {}) {
    if (!std::isfinite(energy))
        throw domain_error("turning_points: energy must be finite");
    BarrierAnalysis out;
    out.energy = energy;

    auto xs = detail::log_grid(opts);
    if (detail::has_image_term(spec.kind)) {
        const auto [xp, vp] = barrier_peak(spec, opts);
        out.peak_position = xp;
        out.peak_value = vp;
        xs.insert(std::lower_bound(xs.begin(), xs.end(), xp), xp);
    } else {
        out.peak_position = xs.front();
        out.peak_value = evaluate_potential(spec, xs.front());
    }

    auto fr = [&](double x) { return evaluate_potential(spec, x) - energy; };
    out.turning_points = detail::scan_roots(fr, xs);
    auto fz = [&](double x) { return evaluate_potential(spec, x); };
    out.zero_crossings =
        (energy == 0.0) ? out.turning_points : detail::scan_roots(fz, xs);

    // Emission window: where does the free region outside the barrier start,
    // and where does the potential wall close it again?
    double window_start = 0.0;
    bool have_start = false;
    if (out.peak_value > energy) {
        for (double r : out.turning_points)
            if (r > out.peak_position) { window_start = r; have_start = true; break; }
    } else {
        window_start = opts.x_min;
        have_start = true;
    }
    if (have_start) {
        double window_end = std::numeric_limits<double>::infinity();
        for (double r : out.turning_points) {
            const double probe = r * 1.0000001;
            if (r > window_start && fr(probe) > 0.0) { window_end = r; break; }
        }
        if (evaluate_potential(spec, window_start * (1.0 + 1e-9)) <= energy ||
            out.peak_value <= energy)
            out.emission_window = std::make_pair(window_start, window_end);
    }
    return out;
}

/// Step barrier seen along the field direction when both fields are
/// collinear: zero inside the metal, C + schottky outside. The magnetic
/// induction never enters its evaluation.
inline PotentialSpec collinear_barrier(const FieldConfiguration& config, double barrier_height) {
    if (!(barrier_height > 0.0) || !std::isfinite(barrier_height))
        throw domain_error("collinear_barrier: barrier height must be positive and finite");
    return PotentialSpec{BarrierKind::collinear_step, config, barrier_height};
}

} // namespace magemit
