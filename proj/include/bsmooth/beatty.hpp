#pragma once

// Beatty sequence terms floor(theta*n + psi), the exact membership criterion
//     m is a term  <=>  0 < {(m+1-psi)/theta} <= 1/theta  (and the witness
//     index is >= 1),
// and counting smooth values among the terms.
//
// With quadratic theta and rational psi every comparison here is exact; with
// decimal-literal theta the computation is exact rational arithmetic plus an
// ambiguity guard, since a truncated literal cannot settle a value that sits
// within 1e-30 of a decision boundary.

#include <cstdint>
#include <stdexcept>

#include "bsmooth/errors.hpp"
#include "bsmooth/quadirr.hpp"
#include "bsmooth/rational.hpp"
#include "bsmooth/sieve.hpp"
#include "bsmooth/theta.hpp"

namespace bsmooth {

namespace detail {

inline const BigRat& boundary_guard() {
    static const BigRat eps = make_rat(BigInt(1), pow10(30));
    return eps;
}

// Exact floor of a rational value, rejecting values within 1e-30 of an
// integer: a decimal stand-in for an irrational cannot decide those.
inline BigInt guarded_floor_rat(const BigRat& v, const char* who) {
    BigInt fl = floor_rat(v);
    BigRat f = v - BigRat(fl);
    if (f < boundary_guard() || BigRat(1) - f < boundary_guard())
        throw precision_error(std::string(who) +
                              ": value within 1e-30 of an integer; a decimal theta cannot settle it");
    return fl;
}

} // namespace detail

struct BeattyParams {
    Theta theta;  // > 1, checked exactly
    BigRat psi;   // >= 0 rational shift

    BeattyParams(Theta t, BigRat shift) : theta(std::move(t)), psi(std::move(shift)) {
        if (theta.cmp_int(1) <= 0)
            throw std::domain_error("BeattyParams: theta must exceed 1");
        if (psi < 0) throw std::domain_error("BeattyParams: psi must be >= 0");
    }
};

inline std::int64_t beatty_term(const BeattyParams& params, std::uint64_t n) {
    if (n < 1) throw std::domain_error("beatty_term: n must be >= 1");
    if (params.theta.is_quad()) {
        const QuadIrr& t = params.theta.quad();
        const BigInt& pn = params.psi.get_num();
        const BigInt& pd = params.psi.get_den();
        if (pn.fits_slong_p() && pd.fits_slong_p()) {
            return quad_floor(t, n, pn.get_si(), pd.get_si());
        }
        // Oversized rational shift: same computation with big operands.
        BigInt ns = BigInt(std::to_string(n)) * pd;
        BigInt A = BigInt(static_cast<long>(t.a())) * ns + pn * t.c();
        BigInt B = BigInt(static_cast<long>(t.b())) * ns;
        BigInt C = BigInt(static_cast<long>(t.c())) * pd;
        BigInt fl = detail::floor_surd_big(A, B, C, t.d());
        if (!fl.fits_slong_p()) throw std::overflow_error("beatty_term: term exceeds 64 bits");
        return fl.get_si();
    }
    BigRat v = params.theta.rat() * BigRat(BigInt(std::to_string(n))) + params.psi;
    BigInt fl = detail::guarded_floor_rat(v, "beatty_term");
    if (!fl.fits_slong_p()) throw std::overflow_error("beatty_term: term exceeds 64 bits");
    return fl.get_si();
}

// Membership of m via the fractional-part criterion. The fractional part of
// (m+1-psi)/theta can only land exactly on a boundary when m+1-psi = 0 or
// the witness index is 0; both mean "not a term with index >= 1".
inline bool beatty_contains(const BeattyParams& params, std::uint64_t m) {
    if (m < 1) throw std::domain_error("beatty_contains: m must be >= 1");
    const BigInt& pn = params.psi.get_num();
    const BigInt& pd = params.psi.get_den();
    BigInt rnum = (BigInt(std::to_string(m)) + 1) * pd - pn; // (m+1-psi) * pd
    if (rnum == 0) return false; // psi = m+1: v = 0 regardless of theta

    if (params.theta.is_quad()) {
        const QuadIrr& t = params.theta.quad();
        QuadIrr inv = t.reciprocal(); // (ia + ib*sqrt(d))/ic
        // v = (m+1-psi)/theta = rnum/pd * inv, as a big surd.
        BigInt A = rnum * inv.a();
        BigInt B = rnum * inv.b();
        BigInt C = pd * inv.c();
        if (C < 0) { A = -A; B = -B; C = -C; }
        BigInt fl = detail::floor_surd_big(A, B, C, t.d());
        if (fl < 1) return false; // witness index would be < 1
        // {v} <= 1/theta  <=>  v - fl <= inv: compare exact surds (same d).
        BigInt dA = (A - fl * C) * inv.c() - BigInt(static_cast<long>(inv.a())) * C;
        BigInt dB = B * inv.c() - BigInt(static_cast<long>(inv.b())) * C;
        int s = detail::sign_surd_big(dA, dB, BigInt(static_cast<long>(t.d())));
        // {v} > 0 holds automatically: v is irrational here (rnum != 0).
        return s <= 0;
    }

    const BigRat& th = params.theta.rat();
    BigRat v = make_rat(rnum, pd) / th;
    BigRat f = frac_rat(v);
    BigRat inv_theta = 1 / th;
    const BigRat& eps = detail::boundary_guard();
    if (f < eps || abs(f - inv_theta) < eps)
        throw precision_error("beatty_contains: criterion within 1e-30 of a boundary; "
                              "a decimal theta cannot settle it");
    if (!(f > 0 && f <= inv_theta)) return false;
    return floor_rat(v) >= 1;
}

// |{n <= x : floor(theta n + psi) is y-smooth}|. Terms are strictly
// increasing for theta > 1, so this also counts distinct smooth members.
inline std::uint64_t count_smooth_in_beatty(const BeattyParams& params, double x, double y,
                                            const SpfSieve& sieve) {
    if (!(x >= 1)) throw std::domain_error("count_smooth_in_beatty: x must be >= 1");
    std::uint64_t n_max = static_cast<std::uint64_t>(std::floor(x));
    std::int64_t last = beatty_term(params, n_max);
    if (last < 1 || static_cast<std::uint64_t>(last) > sieve.limit())
        throw std::range_error("count_smooth_in_beatty: last term exceeds sieve limit");
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::int64_t m = beatty_term(params, n);
        if (m >= 1 && is_smooth(sieve, static_cast<std::uint64_t>(m), y)) ++count;
    }
    return count;
}

} // namespace bsmooth
