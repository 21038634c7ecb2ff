#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "magemit/constants.hpp"
#include "magemit/errors.hpp"
#include "magemit/fields.hpp"
#include "magemit/specialfn.hpp"

namespace magemit {

/// Which barrier-correction pair feeds the emission formula. `unity` forces
/// v = t = 1 (uncorrected triangular barrier) and exists for the plot-slope
/// tests.
enum class NordheimMode { exact, approximate, unity };

/// Current density with its natural log carried separately: laboratory-scale
/// fields produce exponents of order -650 that no fixed-width float survives.
struct CurrentDensity {
    double j;        ///< A/m^2 (0.0 when the true value underflows)
    double ln_j;     ///< ln(j / (A/m^2)), always finite
    double y;        ///< Nordheim parameter actually used
    double v;        ///< barrier correction applied in the exponent
    double t;        ///< correction applied in the prefactor
    double exponent; ///< the (negative) argument of the exponential
};

/// Cold field emission current density with image-force corrections:
///   j = e^3 E^2 / (8 pi h phi t(y)^2) * exp(-4 sqrt(2m) phi^(3/2) v(y) / (3 hbar e E)),
///   y = sqrt(e^3 E / (4 pi eps0)) / phi.
inline CurrentDensity fn_current_density(double e_field, double work_function,
                                         NordheimMode mode = NordheimMode::exact) {
    if (!(e_field > 0.0) || !std::isfinite(e_field))
        throw domain_error("fn_current_density: field must be positive and finite");
    if (!(work_function > 0.0) || !std::isfinite(work_function))
        throw domain_error("fn_current_density: work function must be positive and finite");
    const double e = codata2018.electron_charge;
    const double m = codata2018.electron_mass;
    const double y = std::sqrt(e * e * e * e_field /
                               (4.0 * std::numbers::pi * codata2018.vacuum_permittivity)) /
                     work_function;
    if (y > 1.0)
        throw barrier_collapse_error(
            "fn_current_density: Schottky lowering exceeds the work function (y = " +
                std::to_string(y) + ")",
            y);
    double v = 1.0, t = 1.0;
    switch (mode) {
    case NordheimMode::exact:
        v = nordheim_v(y);
        t = nordheim_t(y);
        break;
    case NordheimMode::approximate:
        v = nordheim_v_fast(y);
        t = nordheim_t_fast(y);
        break;
    case NordheimMode::unity:
        break;
    }
    const double exponent = -4.0 * std::sqrt(2.0 * m) * std::pow(work_function, 1.5) * v /
                            (3.0 * codata2018.hbar * e * e_field);
    const double prefactor = e * e * e * e_field * e_field /
                             (8.0 * std::numbers::pi * codata2018.planck * work_function * t * t);
    const double ln_j = std::log(prefactor) + exponent;
    return {prefactor * std::exp(exponent), ln_j, y, v, t, exponent};
}

enum class EmissionStatus { ok, beyond_critical_field };

struct EmissionPoint {
    double e_applied = 0.0;          ///< V/m
    double b_applied = 0.0;          ///< T
    double work_function = 0.0;      ///< J
    double current_density = 0.0;    ///< A/m^2
    double ln_current_density = 0.0; ///< -inf when suppressed
    double e_effective = 0.0;        ///< V/m; 0 when no real value exists
    EmissionStatus status = EmissionStatus::ok;
};

/// Emission against the Lorentz-reduced field E* = E sqrt(1 - B^2 c^2/E^2).
/// For c*B >= E the reduction has no real value; the point is reported as
/// suppressed (j = 0) rather than thrown, so that sweeps can traverse the
/// locked region.
inline EmissionPoint fn_current_with_field_reduction(double e_field, double b_induction,
                                                     double work_function,
                                                     NordheimMode mode = NordheimMode::exact) {
    EmissionPoint point;
    point.e_applied = e_field;
    point.b_applied = b_induction;
    point.work_function = work_function;
    const FieldConfiguration config(e_field, b_induction, 0.0);
    if (codata2018.speed_of_light * b_induction >= e_field) {
        point.status = EmissionStatus::beyond_critical_field;
        point.current_density = 0.0;
        point.ln_current_density = -std::numeric_limits<double>::infinity();
        point.e_effective = 0.0;
        return point;
    }
    point.e_effective = lorentz_reduced_field(config);
    const CurrentDensity cd = fn_current_density(point.e_effective, work_function, mode);
    point.current_density = cd.j;
    point.ln_current_density = cd.ln_j;
    return point;
}

/// Row-major product sweep over applied-field and induction grids.
struct SweepTable {
    std::vector<double> e_grid; ///< V/m, ascending
    std::vector<double> b_grid; ///< T, ascending
    std::vector<EmissionPoint> rows; ///< |e_grid| x |b_grid|, row-major in (E, B)
    double work_function = 0.0;
    std::string tool_version;
    std::string timestamp; ///< empty when suppressed
};

inline SweepTable sweep(std::span<const double> e_grid, std::span<const double> b_grid,
                        double work_function, std::string timestamp = {},
                        NordheimMode mode = NordheimMode::exact) {
    if (e_grid.empty() || b_grid.empty())
        throw grid_error("sweep: grids must be nonempty");
    for (std::size_t i = 0; i < e_grid.size(); ++i) {
        if (e_grid[i] < 1e6 || e_grid[i] > 1e11)
            throw grid_error("sweep: field grid must lie within [1e6, 1e11] V/m");
        if (i > 0 && e_grid[i] <= e_grid[i - 1])
            throw grid_error("sweep: field grid must be strictly ascending");
    }
    for (std::size_t i = 0; i < b_grid.size(); ++i) {
        if (b_grid[i] < 0.0 || b_grid[i] > 10.0)
            throw grid_error("sweep: induction grid must lie within [0, 10] T");
        if (i > 0 && b_grid[i] <= b_grid[i - 1])
            throw grid_error("sweep: induction grid must be strictly ascending");
    }
    SweepTable table;
    table.e_grid.assign(e_grid.begin(), e_grid.end());
    table.b_grid.assign(b_grid.begin(), b_grid.end());
    table.work_function = work_function;
    table.timestamp = std::move(timestamp);
    table.rows.reserve(e_grid.size() * b_grid.size());
    for (double e : e_grid)
        for (double b : b_grid)
            table.rows.push_back(fn_current_with_field_reduction(e, b, work_function, mode));
    return table;
}

} // namespace magemit
