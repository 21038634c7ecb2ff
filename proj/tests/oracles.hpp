#pragma once

// Test-side reference computations. Everything here is deliberately
// independent of the library's own evaluation paths: its own constants, its
// own quadrature, its own recurrences.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

/// Lanczos approximation (g = 7, 9 terms), ~1e-13 relative for x > 0.
inline double gamma_fn(double z) {
    static const double c[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z < 0.5) return pi / (std::sin(pi * z) * gamma_fn(1.0 - z));
    z -= 1.0;
    double a = c[0];
    const double t = z + 7.5;
    for (int i = 1; i < 9; ++i) a += c[i] / (z + i);
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

/// Ascending series for J_nu(x), small x only.
inline double bessel_j_series(double nu, double x) {
    double sum = 0.0;
    for (int k = 0; k < 40; ++k) {
        const double term = ((k % 2) ? -1.0 : 1.0) * std::pow(0.5 * x, nu + 2.0 * k) /
                            (gamma_fn(k + 1.0) * gamma_fn(nu + k + 1.0));
        sum += term;
        if (std::fabs(term) < 1e-18 * (std::fabs(sum) + 1e-30) && k > 3) break;
    }
    return sum;
}

/// Brute-force Numerov march of Y'' = x Y from x = 0 down to a negative
/// target, started from the closed-form values at the origin.
inline double airy_ai_numerov(double target, int steps = 100000) {
    const double ai0 = 1.0 / (std::pow(3.0, 2.0 / 3.0) * gamma_fn(2.0 / 3.0));
    const double aip0 = -1.0 / (std::pow(3.0, 1.0 / 3.0) * gamma_fn(1.0 / 3.0));
    const double h = target / steps;
    // Taylor start: y'' = x y gives y'''(0) = y(0), y''''(0) = 2 y'(0).
    double y_prev = ai0;
    double y_cur = ai0 + h * aip0 + h * h * h * ai0 / 6.0 + h * h * h * h * aip0 / 12.0;
    double x_prev = 0.0, x_cur = h;
    for (int i = 1; i < steps; ++i) {
        const double x_next = (i + 1) * h;
        const double w_prev = 1.0 - h * h / 12.0 * x_prev;
        const double w_cur = 1.0 - h * h / 12.0 * x_cur;
        const double w_next = 1.0 - h * h / 12.0 * x_next;
        const double y_next = ((12.0 - 10.0 * w_cur) * y_cur - w_prev * y_prev) / w_next;
        y_prev = y_cur;
        y_cur = y_next;
        x_prev = x_cur;
        x_cur = x_next;
    }
    return y_cur;
}

/// Physicists' Hermite polynomials from their explicit coefficients, n <= 8.
inline double hermite_explicit(int n, double x) {
    const double x2 = x * x;
    switch (n) {
    case 0: return 1.0;
    case 1: return 2.0 * x;
    case 2: return 4.0 * x2 - 2.0;
    case 3: return (8.0 * x2 - 12.0) * x;
    case 4: return (16.0 * x2 - 48.0) * x2 + 12.0;
    case 5: return ((32.0 * x2 - 160.0) * x2 + 120.0) * x;
    case 6: return ((64.0 * x2 - 480.0) * x2 + 720.0) * x2 - 120.0;
    case 7: return (((128.0 * x2 - 1344.0) * x2 + 3360.0) * x2 - 1680.0) * x;
    case 8: return (((256.0 * x2 - 3584.0) * x2 + 13440.0) * x2 - 13440.0) * x2 + 1680.0;
    default: return 0.0;
    }
}

template <typename F>
inline double simpson(F f, double a, double b, int n) { // n even
    double s = f(a) + f(b);
    const double w = (b - a) / n;
    for (int i = 1; i < n; ++i) s += f(a + i * w) * ((i & 1) ? 4.0 : 2.0);
    return s * w / 3.0;
}

template <typename F>
inline double trapezoid(F f, double a, double b, int n) {
    const double w = (b - a) / (n - 1);
    double s = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n - 1; ++i) s += f(a + i * w);
    return s * w;
}

/// Barrier-lowering function from its defining scaled integral
///   v(y) = (3/2) Int_{s1}^{s2} sqrt(1 - s - y^2/(4s)) ds,
/// by quadrature after a sin^2 substitution.
inline double nordheim_v_quad(double y, int n = 65536) {
    if (y <= 0.0) return 1.0;
    if (y >= 1.0) return 0.0;
    const double w = std::sqrt(1.0 - y * y);
    const double s1 = 0.5 * (1.0 - w), s2 = 0.5 * (1.0 + w);
    auto g = [&](double t) {
        const double st = std::sin(t), ct = std::cos(t);
        const double s = s1 + (s2 - s1) * st * st;
        return 2.0 * (s2 - s1) * (s2 - s1) * st * st * ct * ct / std::sqrt(s);
    };
    return 1.5 * simpson(g, 0.0, pi / 2.0, n);
}

/// Companion correction t(y) = v + (y^2/4) Int ds / (sqrt(s) sqrt((s-s1)(s2-s))).
inline double nordheim_t_quad(double y, int n = 65536) {
    if (y <= 0.0) return 1.0;
    const double w = std::sqrt(1.0 - y * y);
    const double s1 = 0.5 * (1.0 - w), s2 = 0.5 * (1.0 + w);
    auto g = [&](double t) {
        const double st = std::sin(t);
        const double s = s1 + (s2 - s1) * st * st;
        return 2.0 / std::sqrt(s);
    };
    return nordheim_v_quad(y, n) + 0.25 * y * y * simpson(g, 0.0, pi / 2.0, n);
}

struct MurphyGood {
    double j, ln_j, y, v, t, exponent;
};

/// Straight-line scripted evaluation of the image-corrected emission formula
/// with its own constants and the quadrature-based corrections.
inline MurphyGood murphy_good(double e_field, double phi_ev) {
    const double qe = 1.602176634e-19;
    const double me = 9.1093837015e-31;
    const double hp = 6.62607015e-34;
    const double hbar = hp / (2.0 * pi);
    const double eps0 = 8.8541878128e-12;
    const double phi = phi_ev * qe;
    const double y = std::sqrt(qe * qe * qe * e_field / (4.0 * pi * eps0)) / phi;
    const double v = nordheim_v_quad(y);
    const double t = nordheim_t_quad(y);
    const double expo =
        -4.0 * std::sqrt(2.0 * me) * std::pow(phi, 1.5) * v / (3.0 * hbar * qe * e_field);
    const double pref = qe * qe * qe * e_field * e_field / (8.0 * pi * hp * phi * t * t);
    return {pref * std::exp(expo), std::log(pref) + expo, y, v, t, expo};
}

struct LinFit {
    double intercept, slope, r2;
};

inline LinFit linear_fit(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
        syy += y[i] * y[i];
    }
    const double dn = static_cast<double>(n);
    const double slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / dn;
    double ss_res = 0.0, ss_tot = 0.0;
    const double mean = sy / dn;
    for (std::size_t i = 0; i < n; ++i) {
        const double fit = intercept + slope * x[i];
        ss_res += (y[i] - fit) * (y[i] - fit);
        ss_tot += (y[i] - mean) * (y[i] - mean);
    }
    return {intercept, slope, 1.0 - ss_res / ss_tot};
}

} // namespace oracle
