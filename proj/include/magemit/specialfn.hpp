#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "magemit/detail/ddreal.hpp"
#include "magemit/errors.hpp"

namespace magemit {

/// Ai, Bi and first derivatives at a common argument.
struct AiryPair {
    double ai;
    double ai_prime;
    double bi;
    double bi_prime;
};

namespace detail {

inline constexpr double airy_series_radius = 9.0;
inline constexpr double airy_max_argument = 100.0;

/// Maclaurin evaluation of the Airy pair, summed in double-double arithmetic.
/// The two power series behind Ai cancel each other to ~16 decimal digits
/// near the outer edge of the series region, so plain double accumulation
/// would lose everything; the dd core keeps the final values good to < 1e-13
/// relative across |x| <= airy_series_radius.
inline AiryPair airy_series(double x) {
    static const ddreal c1 = dd_from_decimal("0.3550280538878172392600631860041831764");
    static const ddreal c2 = dd_from_decimal("0.2588194037928067984051835601892039635");
    static const ddreal rt3 = dd_from_decimal("1.7320508075688772935274463415058723669");

    const ddreal x3 = ddreal(x) * ddreal(x) * ddreal(x);

    ddreal tf(1.0);                             // f term
    ddreal tg(x);                               // g term
    ddreal tfp = ddreal(0.5) * ddreal(x) * ddreal(x); // f' term (k = 1; k = 0 is zero)
    ddreal tgp(1.0);                            // g' term
    ddreal f = tf, g = tg, fp(0.0), gp = tgp;

    for (int k = 0; k < 200; ++k) {
        const double a = 3.0 * k;
        tf = tf * x3 / ddreal((a + 2.0) * (a + 3.0));
        tg = tg * x3 / ddreal((a + 3.0) * (a + 4.0));
        tgp = tgp * x3 / ddreal((a + 1.0) * (a + 3.0));
        if (k >= 1) tfp = tfp * x3 / ddreal(a * (a + 2.0));
        f += tf;
        g += tg;
        fp += tfp;
        gp += tgp;
        const double scale = std::fabs(f.hi) + std::fabs(g.hi) + 1.0;
        if (std::fabs(tf.hi) < 1e-36 * scale && std::fabs(tg.hi) < 1e-36 * scale &&
            std::fabs(tfp.hi) < 1e-36 * scale && std::fabs(tgp.hi) < 1e-36 * scale)
            break;
    }

    AiryPair out;
    out.ai = (c1 * f - c2 * g).value();
    out.ai_prime = (c1 * fp - c2 * gp).value();
    out.bi = (rt3 * (c1 * f + c2 * g)).value();
    out.bi_prime = (rt3 * (c1 * fp + c2 * gp)).value();
    return out;
}

/// Coefficients u_k, v_k of the large-argument expansions, generated on the
/// fly; the sums are truncated at the first non-decreasing term.
template <typename Emit>
inline void airy_asymptotic_terms(double zeta, Emit emit) {
    double u = 1.0, v = 1.0;
    double pw = 1.0;
    emit(0, u, v);
    for (int k = 1; k < 60; ++k) {
        const double kk = static_cast<double>(k);
        u *= (6.0 * kk - 5.0) * (6.0 * kk - 3.0) * (6.0 * kk - 1.0) /
             (216.0 * kk * (2.0 * kk - 1.0));
        v = -u * (6.0 * kk + 1.0) / (6.0 * kk - 1.0);
        pw /= zeta;
        if (!emit(k, u * pw, v * pw)) break;
    }
}

inline AiryPair airy_asymptotic_positive(double x) {
    const double zeta = 2.0 / 3.0 * std::pow(x, 1.5);
    double sa = 0.0, sb = 0.0, sap = 0.0, sbp = 0.0;
    double prev = 1e300;
    airy_asymptotic_terms(zeta, [&](int k, double uterm, double vterm) {
        if (std::fabs(uterm) >= prev) return false;
        prev = std::fabs(uterm);
        const double sign = (k & 1) ? -1.0 : 1.0;
        sa += sign * uterm;
        sb += uterm;
        sap += sign * vterm;
        sbp += vterm;
        return std::fabs(uterm) > 1e-18;
    });
    const double root_pi = std::sqrt(std::numbers::pi);
    const double x4 = std::pow(x, 0.25);
    const double em = std::exp(-zeta), ep = std::exp(zeta);
    AiryPair out;
    out.ai = em / (2.0 * root_pi * x4) * sa;
    out.ai_prime = -x4 * em / (2.0 * root_pi) * sap;
    out.bi = ep / (root_pi * x4) * sb;
    out.bi_prime = x4 * ep / root_pi * sbp;
    return out;
}

inline AiryPair airy_asymptotic_negative(double x) {
    const double z = -x;
    const double zeta = 2.0 / 3.0 * std::pow(z, 1.5);
    double p = 0.0, q = 0.0, r = 0.0, s = 0.0;
    double prev = 1e300;
    airy_asymptotic_terms(zeta, [&](int k, double uterm, double vterm) {
        if (std::fabs(uterm) >= prev) return false;
        prev = std::fabs(uterm);
        const double sign = (k & 2) ? -1.0 : 1.0; // (-1)^(k/2) for paired sums
        if (k & 1) {
            q += sign * uterm;
            s += sign * vterm;
        } else {
            p += sign * uterm;
            r += sign * vterm;
        }
        return std::fabs(uterm) > 1e-18;
    });
    const double theta = zeta + std::numbers::pi / 4.0;
    const double sn = std::sin(theta), cs = std::cos(theta);
    const double root_pi = std::sqrt(std::numbers::pi);
    const double z4 = std::pow(z, 0.25);
    AiryPair out;
    out.ai = (sn * p - cs * q) / (root_pi * z4);
    out.bi = (cs * p + sn * q) / (root_pi * z4);
    out.ai_prime = -z4 / root_pi * (cs * r + sn * s);
    out.bi_prime = z4 / root_pi * (sn * r - cs * s);
    return out;
}

} // namespace detail

/// Airy pair at eta, |eta| <= 100. Maclaurin series (double-double core) up
/// to |eta| = 9, large-argument expansions beyond; the two regimes agree to
/// better than 1e-12 relative where they overlap.
inline AiryPair airy(double eta) {
    if (!std::isfinite(eta) || std::fabs(eta) > detail::airy_max_argument)
        throw domain_error("airy: |argument| must be <= 100, got " + std::to_string(eta));
    if (std::fabs(eta) <= detail::airy_series_radius) return detail::airy_series(eta);
    return eta > 0.0 ? detail::airy_asymptotic_positive(eta)
                     : detail::airy_asymptotic_negative(eta);
}

/// Physicists' Hermite polynomial H_n via the three-term recurrence
/// H_{k+1} = 2 xi H_k - 2 k H_{k-1}. Unnormalized; the oscillator
/// normalization lives with the wavefunction assembly.
inline double hermite(int n, double xi) {
    if (n < 0 || n > 200)
        throw domain_error("hermite: order must lie in [0, 200], got " + std::to_string(n));
    if (n == 0) return 1.0;
    double hkm1 = 1.0;
    double hk = 2.0 * xi;
    for (int k = 1; k < n; ++k) {
        const double hkp1 = 2.0 * xi * hk - 2.0 * k * hkm1;
        hkm1 = hk;
        hk = hkp1;
    }
    return hk;
}

/// Hankel function of order 1/3, first or second kind, evaluated at
/// zeta = (2/3) eta^(3/2) through the Airy pair at -eta. The two kinds are
/// complex conjugates for the real arguments accepted here.
inline std::complex<double> hankel_one_third(double eta, int branch) {
    if (!(eta > 0.0))
        throw domain_error("hankel_one_third: argument must be > 0");
    if (branch != 1 && branch != 2)
        throw domain_error("hankel_one_third: branch must be 1 or 2");
    const AiryPair p = airy(-eta);
    const double rt3 = std::sqrt(3.0);
    const double re = (3.0 * p.ai - rt3 * p.bi) / (2.0 * std::sqrt(eta));
    const double im = -(rt3 * p.ai + 3.0 * p.bi) / (2.0 * std::sqrt(eta));
    return branch == 1 ? std::complex<double>(re, im) : std::complex<double>(re, -im);
}

/// Complete elliptic integral K(m) (parameter convention), by the
/// arithmetic-geometric mean.
inline double elliptic_k(double m) {
    if (!(m >= 0.0) || m >= 1.0)
        throw domain_error("elliptic_k: parameter must lie in [0, 1)");
    double a = 1.0, b = std::sqrt(1.0 - m);
    for (int it = 0; it < 40 && (a - b) > 4e-16 * a; ++it) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return std::numbers::pi / (a + b); // = pi / (2 agm)
}

/// Complete elliptic integral E(m), from the same AGM ladder as K(m).
inline double elliptic_e(double m) {
    if (!(m >= 0.0) || m >= 1.0)
        throw domain_error("elliptic_e: parameter must lie in [0, 1)");
    double a = 1.0, b = std::sqrt(1.0 - m);
    double csum = 0.5 * m; // 2^(-1) c_0^2 with c_0^2 = m
    double pow2 = 1.0;
    for (int it = 0; it < 40 && (a - b) > 4e-16 * a; ++it) {
        const double c = 0.5 * (a - b);
        csum += pow2 * c * c;
        pow2 *= 2.0;
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    const double k = std::numbers::pi / (a + b);
    return k * (1.0 - csum);
}

namespace detail {
inline void check_nordheim_domain(double y, const char* name) {
    if (!(y >= 0.0) || y > 1.0)
        throw domain_error(std::string(name) + ": argument must lie in [0, 1], got " +
                           std::to_string(y));
}
} // namespace detail

/// Barrier-lowering correction v(y) of the image-rounded triangular barrier,
/// exact complete-elliptic form. y is the ratio of the Schottky lowering to
/// the work function; v(0) = 1, v(1) = 0, strictly decreasing between.
inline double nordheim_v(double y) {
    detail::check_nordheim_domain(y, "nordheim_v");
    if (y == 0.0) return 1.0;
    if (y == 1.0) return 0.0;
    const double w = std::sqrt(1.0 - y * y);
    const double m = 2.0 * w / (1.0 + w);
    const double pref = std::sqrt(0.5 * (1.0 + w));
    return pref * (elliptic_e(m) - (1.0 - w) * elliptic_k(m));
}

/// Companion correction t(y) entering the emission prefactor,
/// t = v - (2y/3) dv/dy in closed elliptic form. t(0) = 1, t(1) ~ 1.1107.
inline double nordheim_t(double y) {
    detail::check_nordheim_domain(y, "nordheim_t");
    if (y == 0.0) return 1.0;
    const double w = std::sqrt(1.0 - y * y);
    const double m = 2.0 * w / (1.0 + w);
    const double pref = std::sqrt(0.5 * (1.0 + w));
    return nordheim_v(y) + 0.5 * y * y * elliptic_k(m) / pref;
}

/// Fast closed-form approximation v(y) ~ 1 - y^2 + (1/3) y^2 ln y.
/// Differs from the exact elliptic value by at most ~2.4e-3 (near y ~ 0.42).
inline double nordheim_v_fast(double y) {
    detail::check_nordheim_domain(y, "nordheim_v_fast");
    if (y == 0.0) return 1.0;
    return 1.0 - y * y + y * y * std::log(y) / 3.0;
}

/// Fast companion approximation t(y) ~ 1 + y^2/9 - (1/9) y^2 ln y.
inline double nordheim_t_fast(double y) {
    detail::check_nordheim_domain(y, "nordheim_t_fast");
    if (y == 0.0) return 1.0;
    return 1.0 + y * y / 9.0 - y * y * std::log(y) / 9.0;
}

} // namespace magemit
