#pragma once

#include <cmath>
#include <cstdlib>
#include <string_view>

namespace magemit::detail {

/// Unevaluated double-double value (~31 significant digits). Only the
/// operations the library needs are provided: +, -, *, / and decimal parsing.
/// Algorithms follow Dekker/Knuth error-free transformations.
struct ddreal {
    double hi = 0.0;
    double lo = 0.0;

    constexpr ddreal() = default;
    constexpr ddreal(double h) : hi(h), lo(0.0) {}
    constexpr ddreal(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

inline ddreal two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline ddreal quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline ddreal two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline ddreal operator+(ddreal a, ddreal b) {
    ddreal s = two_sum(a.hi, b.hi);
    ddreal t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline ddreal operator-(ddreal a) { return {-a.hi, -a.lo}; }
inline ddreal operator-(ddreal a, ddreal b) { return a + (-b); }

inline ddreal operator*(ddreal a, ddreal b) {
    ddreal p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline ddreal operator/(ddreal a, ddreal b) {
    double q1 = a.hi / b.hi;
    ddreal r = a - ddreal(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - ddreal(q2) * b;
    double q3 = r.hi / b.hi;
    ddreal q = quick_two_sum(q1, q2);
    return q + ddreal(q3);
}

inline ddreal& operator+=(ddreal& a, ddreal b) { a = a + b; return a; }
inline ddreal& operator-=(ddreal& a, ddreal b) { a = a - b; return a; }
inline ddreal& operator*=(ddreal& a, ddreal b) { a = a * b; return a; }
inline ddreal& operator/=(ddreal& a, ddreal b) { a = a / b; return a; }

/// Parse a plain decimal literal ("-0.1234...", no exponent part) into a
/// ddreal. Used for mathematical constants that a double literal would
/// truncate.
inline ddreal dd_from_decimal(std::string_view text) {
    ddreal value(0.0);
    bool negative = false;
    int frac_digits = 0;
    bool in_fraction = false;
    for (char c : text) {
        if (c == '-') { negative = true; continue; }
        if (c == '+' || c == '\'' || c == ' ') continue;
        if (c == '.') { in_fraction = true; continue; }
        value = value * ddreal(10.0) + ddreal(static_cast<double>(c - '0'));
        if (in_fraction) ++frac_digits;
    }
    for (int i = 0; i < frac_digits; ++i) value = value / ddreal(10.0);
    return negative ? -value : value;
}

} // namespace magemit::detail
