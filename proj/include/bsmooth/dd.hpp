#pragma once

// Minimal double-double (~106-bit) arithmetic for phase accumulation.

#include <cmath>
#include <cstdint>

namespace bsmooth::dd {

struct Dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline Dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline Dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline Dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline Dd add(const Dd& a, const Dd& b) {
    Dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, lo);
}

inline Dd sub(const Dd& a, double b) { return add(a, Dd{-b, 0.0}); }

inline Dd mul_u64(const Dd& a, std::uint64_t n) {
    double nd = static_cast<double>(n); // exact for n < 2^53
    Dd p = two_prod(a.hi, nd);
    p.lo = std::fma(a.lo, nd, p.lo);
    return quick_two_sum(p.hi, p.lo);
}

// Reduce into [0, 1).
inline Dd frac(Dd a) {
    double f = std::floor(a.hi);
    a = sub(a, f);
    if (a.hi >= 1.0) a = sub(a, 1.0);
    if (a.hi < 0.0) a = add(a, Dd{1.0, 0.0});
    return a;
}

inline double value(const Dd& a) { return a.hi + a.lo; }

// Distance to the nearest integer, in [0, 1/2].
inline double dist_to_int(const Dd& a) {
    Dd f = frac(a);
    double v = value(f);
    return v <= 0.5 ? v : 1.0 - v;
}

} // namespace bsmooth::dd
