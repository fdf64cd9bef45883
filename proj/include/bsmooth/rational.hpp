#pragma once

// Exact big-integer / big-rational helpers on top of GMP, plus the rational
// interval type used by the guarded high-precision evaluation paths.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "bsmooth/errors.hpp"

namespace bsmooth {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    BigRat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline BigInt pow10(unsigned k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

// Exact parse of a plain decimal literal: [+-]digits[.digits][e[+-]digits].
inline BigRat parse_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_decimal: empty string");
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') { neg = (s[i] == '-'); ++i; }
    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            break;
        } else {
            throw std::invalid_argument("parse_decimal: bad character in \"" + std::string(s) + "\"");
        }
    }
    long exp10 = 0;
    if (i < s.size()) { // exponent part
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) { eneg = (s[i] == '-'); ++i; }
        if (i >= s.size()) throw std::invalid_argument("parse_decimal: dangling exponent");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("parse_decimal: bad exponent digit");
            exp10 = exp10 * 10 + (s[i] - '0');
            if (exp10 > 1000000) throw std::invalid_argument("parse_decimal: exponent too large");
        }
        if (eneg) exp10 = -exp10;
    }
    if (!seen_digit) throw std::invalid_argument("parse_decimal: no digits in \"" + std::string(s) + "\"");
    BigInt num(digits.empty() ? "0" : digits, 10);
    if (neg) num = -num;
    long net = exp10 - frac_digits;
    if (net >= 0) return BigRat(num * pow10(static_cast<unsigned>(net)));
    return make_rat(num, pow10(static_cast<unsigned>(-net)));
}

inline BigInt floor_rat(const BigRat& r) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// Fractional part in [0, 1).
inline BigRat frac_rat(const BigRat& r) { return r - BigRat(floor_rat(r)); }

inline double rat_to_double(const BigRat& r) { return mpq_get_d(r.get_mpq_t()); }

inline BigRat rat_from_double(double x) {
    BigRat r;
    mpq_set_d(r.get_mpq_t(), x); // exact: doubles are dyadic rationals
    return r;
}

// Two-double (hi + lo) decomposition, |r - hi - lo| < 2^-104 * |r| roughly.
inline std::pair<double, double> rat_to_dd(const BigRat& r) {
    double hi = rat_to_double(r);
    BigRat rem = r - rat_from_double(hi);
    double lo = rat_to_double(rem);
    return {hi, lo};
}

inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const BigInt& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Closed rational interval [lo, hi] enclosing an exactly-defined real.
struct RatInterval {
    BigRat lo, hi;

    BigRat width() const { return hi - lo; }
    BigRat mid() const { return (lo + hi) / 2; }

    RatInterval operator+(const BigRat& r) const { return {lo + r, hi + r}; }
    RatInterval operator-(const BigRat& r) const { return {lo - r, hi - r}; }

    // Scaling by a rational of either sign.
    RatInterval scaled(const BigRat& r) const {
        if (r >= 0) return {lo * r, hi * r};
        return {hi * r, lo * r};
    }
};

// Bracket sqrt(d) within 10^-digits for a positive non-square integer d.
inline RatInterval sqrt_interval(const BigInt& d, unsigned digits) {
    if (d <= 0) throw std::domain_error("sqrt_interval: d must be positive");
    BigInt scale = pow10(digits);
    BigInt s = isqrt(d * scale * scale);
    return {make_rat(s, scale), make_rat(s + 1, scale)};
}

// Floor of every point of the interval, if unambiguous.
inline std::optional<BigInt> interval_floor(const RatInterval& iv) {
    BigInt flo = floor_rat(iv.lo);
    BigInt fhi = floor_rat(iv.hi);
    if (flo == fhi) return flo;
    return std::nullopt;
}

} // namespace bsmooth
