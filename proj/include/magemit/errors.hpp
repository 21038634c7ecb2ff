#pragma once

#include <stdexcept>
#include <string>

namespace magemit {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation that needs B > 0 was called with B = 0.
struct zero_field_error : error {
    using error::error;
};

/// A quantity left its mathematical domain (argument range, branch cut, ...).
struct domain_error : error {
    using error::error;
};

/// The Lorentz field reduction has no real value because c*B >= E.
struct field_domain_error : error {
    field_domain_error(const std::string& msg, double b_crit)
        : error(msg), b_critical(b_crit) {}
    double b_critical; ///< largest induction (T) with a real reduced field
};

/// Schottky lowering exceeds the work function (Nordheim y > 1).
struct barrier_collapse_error : error {
    barrier_collapse_error(const std::string& msg, double y_value)
        : error(msg), y(y_value) {}
    double y;
};

/// The potential has no interior maximum to report.
struct no_peak_error : error {
    using error::error;
};

/// A sampled grid violates the integrator's requirements.
struct grid_error : error {
    using error::error;
};

/// Output file could not be written.
struct io_error : error {
    using error::error;
};

} // namespace magemit
