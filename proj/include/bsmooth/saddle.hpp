#pragma once

// The saddle point alpha(x, y): unique positive root of
//     sum_{p <= y} log p / (p^alpha - 1) = log x,
// and the derived scale quantities u, L, M used by the bound evaluator.

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "bsmooth/errors.hpp"
#include "bsmooth/sieve.hpp"

namespace bsmooth {

struct SaddleAlpha {
    double alpha;
    double residual; // value of the defining sum minus log x, at alpha
    double x;
    double y;
};

namespace detail {

inline double saddle_sum(std::span<const std::uint32_t> primes, double alpha) {
    double s = 0.0;
    for (std::uint32_t p : primes) {
        double lp = std::log(static_cast<double>(p));
        s += lp / std::expm1(alpha * lp);
    }
    return s;
}

inline double saddle_sum_deriv(std::span<const std::uint32_t> primes, double alpha) {
    double s = 0.0;
    for (std::uint32_t p : primes) {
        double lp = std::log(static_cast<double>(p));
        double e = std::expm1(alpha * lp);
        s -= lp * lp * (e + 1.0) / (e * e);
    }
    return s;
}

} // namespace detail

// The defining sum is strictly decreasing in alpha, diverges as alpha -> 0+
// and decays to 0 as alpha -> infinity, so the root exists and is unique.
// Bisection to a tight bracket, then Newton refinement on the residual.
inline SaddleAlpha solve_alpha(std::span<const std::uint32_t> primes_upto_y,
                               double x, double y, double tol = 1e-10) {
    if (!(x > 1)) throw std::domain_error("solve_alpha: x must be > 1");
    if (!(y >= 2)) throw std::domain_error("solve_alpha: y must be >= 2");
    if (primes_upto_y.empty()) throw std::domain_error("solve_alpha: empty prime list");
    if (!(tol > 0)) throw std::domain_error("solve_alpha: tol must be positive");

    const double target = std::log(x);
    auto g = [&](double a) { return detail::saddle_sum(primes_upto_y, a) - target; };

    double lo = 1.0, hi = 1.0;
    while (g(lo) <= 0) {
        lo *= 0.5;
        if (lo < 1e-12) throw solver_error("solve_alpha: failed to bracket from below");
    }
    while (g(hi) > 0) {
        hi *= 2.0;
        if (hi > 1e6) throw solver_error("solve_alpha: failed to bracket from above");
    }
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        (g(mid) > 0 ? lo : hi) = mid;
    }
    double a = 0.5 * (lo + hi);
    double res = g(a);
    for (int i = 0; i < 8 && std::fabs(res) > 0.25 * tol; ++i) {
        double next = a - res / detail::saddle_sum_deriv(primes_upto_y, a);
        if (!(next > 0) || !std::isfinite(next)) break;
        double rn = g(next);
        if (std::fabs(rn) >= std::fabs(res)) break;
        a = next;
        res = rn;
    }
    if (!(std::fabs(res) <= tol))
        throw solver_error("solve_alpha: residual above tolerance after refinement");
    return {a, res, x, y};
}

inline SaddleAlpha solve_alpha(const SpfSieve& sieve, double x, double y, double tol = 1e-10) {
    if (!(y >= 2)) throw std::domain_error("solve_alpha: y must be >= 2");
    return solve_alpha(sieve.primes_upto(y), x, y, tol);
}

// u = log x / log y, L = 2(1 + |delta x|), and
// M = u^{3/2} log u log x (log L)^{1/2} (log(q y))^{1/2}.
struct BoundScales {
    double u;
    double L;
    double M;
};

inline BoundScales bound_scales(double x, double y, std::uint64_t q, double delta) {
    if (q < 1) throw std::domain_error("bound_scales: q must be >= 1");
    if (!(y > 1) || !(x > 1)) throw std::domain_error("bound_scales: need x, y > 1");
    if (static_cast<double>(q) * y <= 1) throw std::domain_error("bound_scales: qy must exceed 1");
    double u = std::log(x) / std::log(y);
    if (u < 1)
        throw std::domain_error("bound_scales: u = log x / log y < 1 (x < y not supported)");
    double L = 2.0 * (1.0 + std::fabs(delta * x));
    double M = std::pow(u, 1.5) * std::log(u) * std::log(x) * std::sqrt(std::log(L)) *
               std::sqrt(std::log(static_cast<double>(q) * y));
    return {u, L, M};
}

} // namespace bsmooth
