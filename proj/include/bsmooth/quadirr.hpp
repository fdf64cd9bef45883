#pragma once

// Exact arithmetic on quadratic irrationals (a + b*sqrt(d))/c.
//
// Every comparison reduces to the sign of A + B*sqrt(d) for integers A, B,
// decided by squaring — no floating point is trusted for correctness. A
// __int128 fast path covers the magnitudes that occur in hot loops; anything
// larger falls through to GMP.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bsmooth/rational.hpp"

namespace bsmooth {

namespace detail {

using i128 = __int128;

inline int sign_of(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of A + B*sqrt(d), exact. GMP path.
inline int sign_surd_big(const BigInt& A, const BigInt& B, const BigInt& d) {
    int sa = sgn(A), sb = sgn(B);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare A^2 with B^2 d; the larger magnitude wins.
    BigInt lhs = A * A, rhs = B * B * d;
    if (lhs == rhs) return 0; // only possible when d is a perfect square
    return (lhs > rhs) ? sa : sb;
}

inline BigInt to_big(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    BigInt hi(static_cast<unsigned long>(u >> 64));
    BigInt lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
    BigInt r = (hi << 64) | lo;
    return neg ? BigInt(-r) : r;
}

// Sign of A + B*sqrt(d) with a guarded __int128 fast path.
inline int sign_surd(i128 A, i128 B, std::int64_t d) {
    constexpr i128 kGuard = i128{1} << 47;
    if (A > -kGuard && A < kGuard && B > -kGuard && B < kGuard && d < (std::int64_t{1} << 31)) {
        int sa = sign_of(A), sb = sign_of(B);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        i128 lhs = A * A, rhs = B * B * d; // < 2^94 and < 2^125: no overflow
        if (lhs == rhs) return 0;
        return (lhs > rhs) ? sa : sb;
    }
    return sign_surd_big(to_big(A), to_big(B), BigInt(static_cast<long>(d)));
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("QuadIrr: 64-bit coefficient overflow");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("QuadIrr: 64-bit coefficient overflow");
    return r;
}

// floor((A + B*sqrt(d))/C) for big operands, C > 0, sqrt(d) irrational.
// B*sqrt(d) lies strictly between consecutive integers derived from
// isqrt(B^2 d), so the floor reduces to one exact integer division.
inline BigInt floor_surd_big(const BigInt& A, const BigInt& B, const BigInt& C, std::int64_t d) {
    if (C <= 0) throw std::domain_error("floor_surd_big: C must be positive");
    BigInt s2 = isqrt(B * B * BigInt(static_cast<long>(d)));
    BigInt num = (B >= 0) ? BigInt(A + s2) : BigInt(A - s2 - 1);
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), C.get_mpz_t());
    return q;
}

} // namespace detail

// (a + b*sqrt(d))/c with d >= 2 non-square, b != 0, c > 0, gcd(a, b, c) = 1.
class QuadIrr {
  public:
    QuadIrr(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t c)
        : a_(a), b_(b), d_(d), c_(c) {
        if (b_ == 0) throw std::domain_error("QuadIrr: b must be nonzero (value would be rational)");
        if (c_ == 0) throw std::domain_error("QuadIrr: c must be nonzero");
        if (d_ < 2) throw std::domain_error("QuadIrr: d must be >= 2");
        if (is_perfect_square(BigInt(static_cast<long>(d_))))
            throw std::domain_error("QuadIrr: d must not be a perfect square");
        if (c_ < 0) { a_ = -a_; b_ = -b_; c_ = -c_; }
        std::int64_t g = std::gcd(std::gcd(std::llabs(a_), std::llabs(b_)), c_);
        a_ /= g; b_ /= g; c_ /= g;
    }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t d() const { return d_; }
    std::int64_t c() const { return c_; }

    // Sign of the value.
    int sign() const { return detail::sign_surd(a_, b_, d_); }

    // Sign of value - num/den (den may be of either sign).
    int cmp_rat(std::int64_t num, std::int64_t den) const {
        if (den == 0) throw std::domain_error("QuadIrr::cmp_rat: zero denominator");
        detail::i128 A = detail::i128(a_) * den - detail::i128(num) * c_;
        detail::i128 B = detail::i128(b_) * den;
        int s = detail::sign_surd(A, B, d_);
        return (den > 0) ? s : -s;
    }

    int cmp_int(std::int64_t k) const { return cmp_rat(k, 1); }

    // Sign of value - other.value; requires the same surd base d.
    int cmp(const QuadIrr& o) const {
        if (d_ != o.d_) throw std::domain_error("QuadIrr::cmp: mismatched surd bases");
        detail::i128 A = detail::i128(a_) * o.c_ - detail::i128(o.a_) * c_;
        detail::i128 B = detail::i128(b_) * o.c_ - detail::i128(o.b_) * c_;
        return detail::sign_surd(A, B, d_);
    }

    // 1 / value; same d, exact.
    QuadIrr reciprocal() const {
        // c (a - b sqrt(d)) / (a^2 - b^2 d)
        std::int64_t norm = detail::checked_add(detail::checked_mul(a_, a_),
                                                -detail::checked_mul(detail::checked_mul(b_, b_), d_));
        return QuadIrr(detail::checked_mul(c_, a_), -detail::checked_mul(c_, b_), d_, norm);
    }

    // value * num/den.
    QuadIrr scaled(std::int64_t num, std::int64_t den) const {
        if (num == 0) throw std::domain_error("QuadIrr::scaled: zero multiplier (value would be rational)");
        if (den == 0) throw std::domain_error("QuadIrr::scaled: zero denominator");
        return QuadIrr(detail::checked_mul(a_, num), detail::checked_mul(b_, num), d_,
                       detail::checked_mul(c_, den));
    }

    QuadIrr add_rat(std::int64_t num, std::int64_t den) const {
        if (den == 0) throw std::domain_error("QuadIrr::add_rat: zero denominator");
        return QuadIrr(detail::checked_add(detail::checked_mul(a_, den), detail::checked_mul(num, c_)),
                       detail::checked_mul(b_, den), d_, detail::checked_mul(c_, den));
    }

    QuadIrr add_int(std::int64_t k) const { return add_rat(k, 1); }

    // Enclosing rational interval with width ~ 10^-digits.
    RatInterval interval(unsigned digits) const {
        RatInterval s = sqrt_interval(BigInt(static_cast<long>(d_)), digits);
        RatInterval bs = s.scaled(BigRat(static_cast<long>(b_)));
        BigRat av(static_cast<long>(a_));
        BigRat inv_c = make_rat(BigInt(1), BigInt(static_cast<long>(c_)));
        return (bs + av).scaled(inv_c);
    }

    double to_double() const {
        return (static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(d_))) /
               static_cast<double>(c_);
    }

    std::pair<double, double> to_dd() const { return rat_to_dd(interval(45).mid()); }

    std::string str() const {
        return "quad:" + std::to_string(a_) + "," + std::to_string(b_) + "," +
               std::to_string(d_) + "," + std::to_string(c_);
    }

  private:
    std::int64_t a_, b_, d_, c_;
};

// Exact floor(n*t + p/s), integer arithmetic only. s must be positive.
inline std::int64_t quad_floor(const QuadIrr& t, std::uint64_t n,
                               std::int64_t p = 0, std::int64_t s = 1) {
    if (s <= 0) throw std::domain_error("quad_floor: shift denominator must be positive");
    using detail::i128;
    i128 ns = i128(n) * s;
    i128 A = i128(t.a()) * ns + i128(p) * t.c();
    i128 B = i128(t.b()) * ns;
    i128 C = i128(t.c()) * s; // > 0
    // Float estimate, then exact correction: k <= v  <=>  A - kC + B sqrt(d) >= 0.
    double est = t.to_double() * static_cast<double>(n) +
                 static_cast<double>(p) / static_cast<double>(s);
    i128 k = static_cast<i128>(std::floor(est));
    while (detail::sign_surd(A - k * C, B, t.d()) < 0) --k;
    while (detail::sign_surd(A - (k + 1) * C, B, t.d()) >= 0) ++k;
    if (k > i128(INT64_MAX) || k < i128(INT64_MIN))
        throw std::overflow_error("quad_floor: result exceeds 64 bits");
    return static_cast<std::int64_t>(k);
}

struct FloorSplit {
    std::int64_t floor;
    QuadIrr frac; // exact value - floor, in (0, 1)
};

// floor + exact fractional remainder. The remainder is never 0 or 1 because
// the value is irrational.
inline FloorSplit split_floor(const QuadIrr& t) {
    std::int64_t k = quad_floor(t, 1);
    return {k, t.add_int(-k)};
}

} // namespace bsmooth
