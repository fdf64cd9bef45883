#pragma once

// Test-only oracles, independent of the library paths they check.

#include <cstdint>
#include <map>
#include <vector>

#include "bsmooth/rational.hpp"

namespace oracles {

// Trial-division largest prime factor; P(1) = 1.
inline std::uint64_t lpf_trial(std::uint64_t n) {
    std::uint64_t last = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            last = p;
            n /= p;
        }
    }
    if (n > 1) last = n;
    return last;
}

inline bool smooth_trial(std::uint64_t n, double y) {
    return static_cast<double>(lpf_trial(n)) <= y;
}

// Psi(x, y) by trial division of every integer.
inline std::uint64_t psi_brute(std::uint64_t x, double y) {
    std::uint64_t c = 0;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (smooth_trial(n, y)) ++c;
    return c;
}

// Psi via the recursion Psi(x, k primes) = Psi(x, k-1 primes) + Psi(x/p_k, k
// primes): either p_k does not divide n, or divide one factor out. Memoized
// on (x, k); a different shape from the exponent-walking enumeration.
inline std::uint64_t psi_recursive(std::uint64_t x, const std::vector<std::uint64_t>& primes,
                                   std::size_t k,
                                   std::map<std::pair<std::uint64_t, std::size_t>, std::uint64_t>& memo) {
    if (x == 0) return 0;
    if (k == 0) return 1; // only n = 1
    auto key = std::make_pair(x, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::uint64_t r = psi_recursive(x, primes, k - 1, memo) +
                      psi_recursive(x / primes[k - 1], primes, k, memo);
    memo[key] = r;
    return r;
}

inline std::uint64_t psi_recursive(std::uint64_t x, const std::vector<std::uint64_t>& primes) {
    std::map<std::pair<std::uint64_t, std::size_t>, std::uint64_t> memo;
    return psi_recursive(x, primes, primes.size(), memo);
}

// floor(n*(a + b*sqrt(d))/c + pn/pd) via a decimal-scaled sqrt bracket at
// `digits` digits; independent of the sign-comparison floor in the library.
// Returns the floor only when the bracket decides it unambiguously.
inline std::optional<bsmooth::BigInt> floor_hp(std::int64_t a, std::int64_t b, std::int64_t d,
                                               std::int64_t c, std::uint64_t n, std::int64_t pn,
                                               std::int64_t pd, unsigned digits) {
    using namespace bsmooth;
    RatInterval s = sqrt_interval(BigInt(static_cast<long>(d)), digits);
    BigRat nb = BigRat(BigInt(std::to_string(n))) * BigRat(static_cast<long>(b));
    RatInterval bs = s.scaled(nb);
    BigRat rest = BigRat(BigInt(std::to_string(n))) * BigRat(static_cast<long>(a));
    BigRat shift = make_rat(BigInt(static_cast<long>(pn)), BigInt(static_cast<long>(pd)));
    RatInterval v{(bs.lo + rest), (bs.hi + rest)};
    v = v.scaled(make_rat(BigInt(1), BigInt(static_cast<long>(c))));
    v = v + shift;
    return interval_floor(v);
}

} // namespace oracles
