#pragma once

// Smallest-prime-factor sieve and exact smooth-number counting.
//
// All smoothness queries in the project route through SpfSieve. Entries are
// 32 bits, so the hard cap on the sieve limit is 2^32 - 1 (memory is the
// practical cap: 4 bytes per integer, e.g. ~400 MB at limit 10^8).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsmooth {

class SpfSieve {
  public:
    static constexpr std::uint64_t kMaxLimit = 0xFFFFFFFFull;

    explicit SpfSieve(std::uint64_t limit) : limit_(limit) {
        if (limit < 2) throw std::length_error("SpfSieve: limit must be >= 2");
        if (limit > kMaxLimit)
            throw std::length_error("SpfSieve: limit exceeds 32-bit entry cap " +
                                    std::to_string(kMaxLimit));
        spf_.assign(limit + 1, 0);
        // Linear sieve: each composite is crossed off exactly once, by its
        // smallest prime factor.
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (spf_[i] == 0) {
                spf_[i] = static_cast<std::uint32_t>(i);
                primes_.push_back(static_cast<std::uint32_t>(i));
            }
            for (std::uint32_t p : primes_) {
                if (p > spf_[i] || i * p > limit) break;
                spf_[i * p] = p;
            }
        }
    }

    std::uint64_t limit() const { return limit_; }

    std::uint32_t spf(std::uint64_t n) const {
        check_range(n);
        return spf_[n];
    }

    bool is_prime(std::uint64_t n) const {
        if (n < 2 || n > limit_) return false;
        return spf_[n] == n;
    }

    // All primes <= limit, ascending.
    std::span<const std::uint32_t> primes() const { return primes_; }

    // Ascending primes p <= y (empty when y < 2).
    std::span<const std::uint32_t> primes_upto(double y) const {
        if (!(y >= 2)) return {};
        std::uint64_t yk = static_cast<std::uint64_t>(std::floor(y));
        if (yk > limit_)
            throw std::range_error("primes_upto: y exceeds sieve limit");
        auto it = std::upper_bound(primes_.begin(), primes_.end(), yk);
        return {primes_.data(), static_cast<std::size_t>(it - primes_.begin())};
    }

  private:
    void check_range(std::uint64_t n) const {
        if (n < 2 || n > limit_)
            throw std::domain_error("SpfSieve: n out of range 2.." + std::to_string(limit_));
    }

    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

inline SpfSieve build_sieve(std::uint64_t limit) { return SpfSieve(limit); }

// P(n): divide out smallest factors until none remain; the last one is largest.
inline std::uint64_t largest_prime_factor(const SpfSieve& sieve, std::uint64_t n) {
    if (n < 2 || n > sieve.limit())
        throw std::domain_error("largest_prime_factor: n out of range");
    std::uint64_t last = 0;
    while (n > 1) {
        std::uint64_t p = sieve.spf(n);
        last = p;
        n /= p;
    }
    return last;
}

// P(n) <= y, with P(1) = 1 so that 1 is y-smooth for every y >= 1.
inline bool is_smooth(const SpfSieve& sieve, std::uint64_t n, double y) {
    if (n == 0 || n > sieve.limit())
        throw std::domain_error("is_smooth: n out of range");
    if (n == 1) return y >= 1;
    while (n > 1) {
        std::uint64_t p = sieve.spf(n);
        if (static_cast<double>(p) > y) return false;
        n /= p;
    }
    return true;
}

struct SmoothCount {
    double x;
    double y;
    std::uint64_t count;
};

// Exact Psi(x, y) by linear scan of the spf table.
inline SmoothCount psi_exact_sieve(const SpfSieve& sieve, double x, double y) {
    if (!(x >= 1)) throw std::domain_error("psi_exact_sieve: x must be >= 1");
    if (static_cast<double>(sieve.limit()) < x)
        throw std::range_error("psi_exact_sieve: x exceeds sieve limit");
    std::uint64_t xk = static_cast<std::uint64_t>(std::floor(x));
    std::uint64_t count = (y >= 1) ? 1 : 0; // n = 1
    for (std::uint64_t n = 2; n <= xk; ++n)
        if (is_smooth(sieve, n, y)) ++count;
    return {x, y, count};
}

namespace detail {

// Counts products of the primes ps[0..i] with value <= bound; floor division
// walks the exponent of ps[i].
inline std::uint64_t dfs_count(std::span<const std::uint32_t> ps, std::size_t i,
                               std::uint64_t bound) {
    if (i == std::size_t(-1)) return 1;
    std::uint64_t p = ps[i];
    std::uint64_t total = 0;
    std::uint64_t m = bound;
    for (;;) {
        total += dfs_count(ps, i - 1, m);
        if (m < p) break;
        m /= p;
    }
    return total;
}

} // namespace detail

// Exact Psi(x, y) by depth-first enumeration of prime-power products; no
// sieve-size restriction on x. `primes` must be all primes <= y, ascending.
// The recursion consumes primes from the largest down.
inline SmoothCount psi_exact_dfs(double x, double y, std::span<const std::uint32_t> primes) {
    if (!(x >= 1)) throw std::domain_error("psi_exact_dfs: x must be >= 1");
    if (!(y >= 1)) throw std::domain_error("psi_exact_dfs: y must be >= 1");
    if (!primes.empty() && static_cast<double>(primes.back()) > y)
        throw std::domain_error("psi_exact_dfs: prime list contains primes > y");
    std::uint64_t bound = static_cast<std::uint64_t>(std::floor(x));
    return {x, y, detail::dfs_count(primes, primes.size() - 1, bound)};
}

// Calls fn(n) for each y-smooth n <= x in increasing order.
template <typename F>
inline void for_each_smooth(const SpfSieve& sieve, double x, double y, F&& fn) {
    if (!(x >= 1)) throw std::domain_error("for_each_smooth: x must be >= 1");
    if (static_cast<double>(sieve.limit()) < x)
        throw std::range_error("for_each_smooth: x exceeds sieve limit");
    std::uint64_t xk = static_cast<std::uint64_t>(std::floor(x));
    if (y >= 1) fn(std::uint64_t{1});
    for (std::uint64_t n = 2; n <= xk; ++n)
        if (is_smooth(sieve, n, y)) fn(n);
}

inline std::vector<std::uint64_t> enumerate_smooth(const SpfSieve& sieve, double x, double y) {
    std::vector<std::uint64_t> out;
    for_each_smooth(sieve, x, y, [&](std::uint64_t n) { out.push_back(n); });
    return out;
}

} // namespace bsmooth
