#pragma once

// Continued fractions, Dirichlet rational approximation, and empirical
// finite-type profiling of a quadratic irrational.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bsmooth/dd.hpp"
#include "bsmooth/errors.hpp"
#include "bsmooth/quadirr.hpp"
#include "bsmooth/theta.hpp"

namespace bsmooth {

struct CfExpansion {
    std::vector<std::int64_t> quotients;
    // Filled when the surd recurrence revisits a state; informational only,
    // the expansion is still produced term by term.
    std::optional<std::size_t> period_start;
    std::optional<std::size_t> period_len;
};

namespace detail {

// Streams partial quotients of (P0 + sqrt(D)) / Q0 with Q0 | D - P0^2.
class SurdCfStream {
  public:
    explicit SurdCfStream(const QuadIrr& t) {
        BigInt a(static_cast<long>(t.a())), b(static_cast<long>(t.b()));
        BigInt c(static_cast<long>(t.c())), d(static_cast<long>(t.d()));
        if (b > 0) {
            P_ = a; D_ = b * b * d; Q_ = c;
        } else {
            P_ = -a; D_ = b * b * d; Q_ = -c;
        }
        if ((D_ - P_ * P_) % Q_ != 0) {
            BigInt q = abs(Q_);
            P_ *= q; D_ *= q * q; Q_ *= q;
        }
    }

    std::int64_t next() {
        BigInt s = isqrt(D_);
        BigInt a;
        if (Q_ > 0) {
            mpz_fdiv_q(a.get_mpz_t(), BigInt(P_ + s).get_mpz_t(), Q_.get_mpz_t());
        } else {
            mpz_fdiv_q(a.get_mpz_t(), BigInt(-P_ - s - 1).get_mpz_t(), BigInt(-Q_).get_mpz_t());
        }
        BigInt P2 = a * Q_ - P_;
        BigInt Q2 = (D_ - P2 * P2) / Q_;
        P_ = P2;
        Q_ = Q2;
        if (!a.fits_slong_p())
            throw std::overflow_error("cf: partial quotient exceeds 64 bits");
        return static_cast<std::int64_t>(a.get_si());
    }

    std::pair<BigInt, BigInt> state() const { return {P_, Q_}; }

  private:
    BigInt P_, D_, Q_;
};

// Streams the (finite) expansion of a rational by Euclid's algorithm.
class RatCfStream {
  public:
    explicit RatCfStream(const BigRat& r) : num_(r.get_num()), den_(r.get_den()) {}

    std::optional<std::int64_t> next() {
        if (den_ == 0) return std::nullopt;
        BigInt a, rem;
        mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        num_ = den_;
        den_ = rem;
        if (!a.fits_slong_p())
            throw std::overflow_error("cf: partial quotient exceeds 64 bits");
        return static_cast<std::int64_t>(a.get_si());
    }

  private:
    BigInt num_, den_;
};

} // namespace detail

// First k partial quotients of a quadratic irrational, exact.
inline CfExpansion cf_expand(const QuadIrr& t, std::size_t k) {
    if (k == 0) throw std::domain_error("cf_expand: k must be positive");
    CfExpansion out;
    detail::SurdCfStream st(t);
    std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
    for (std::size_t i = 0; i < k; ++i) {
        if (!out.period_start) {
            auto key = st.state();
            auto [it, fresh] = seen.emplace(key, i);
            if (!fresh) {
                out.period_start = it->second;
                out.period_len = i - it->second;
            }
        }
        out.quotients.push_back(st.next());
    }
    return out;
}

// Finite expansion of a rational (at most k terms when k > 0).
inline CfExpansion cf_expand(const BigRat& r, std::size_t k) {
    if (k == 0) throw std::domain_error("cf_expand: k must be positive");
    CfExpansion out;
    detail::RatCfStream st(r);
    for (std::size_t i = 0; i < k; ++i) {
        auto a = st.next();
        if (!a) break;
        out.quotients.push_back(*a);
    }
    return out;
}

// p_k = a_k p_{k-1} + p_{k-2}, likewise q_k; pairs are coprime.
inline std::vector<std::pair<std::int64_t, std::int64_t>>
convergents(const std::vector<std::int64_t>& quotients) {
    if (quotients.empty()) throw std::domain_error("convergents: empty quotient list");
    using detail::i128;
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    i128 pp = 1, qp = 0; // k-1 terms start as the empty convergent pair
    i128 pc = quotients[0], qc = 1;
    out.emplace_back(static_cast<std::int64_t>(pc), 1);
    for (std::size_t i = 1; i < quotients.size(); ++i) {
        i128 a = quotients[i];
        i128 pn = a * pc + pp;
        i128 qn = a * qc + qp;
        if (pn > i128(INT64_MAX) || pn < i128(INT64_MIN) || qn > i128(INT64_MAX))
            throw std::overflow_error("convergents: numerator/denominator exceeds 64 bits");
        pp = pc; qp = qc; pc = pn; qc = qn;
        out.emplace_back(static_cast<std::int64_t>(pc), static_cast<std::int64_t>(qc));
    }
    return out;
}

// Dirichlet approximation: coprime a/q with q <= cap and |t - a/q| <= 1/(q*cap).
struct RationalApprox {
    std::int64_t a = 0;
    std::int64_t q = 1;
    std::int64_t cap = 1;
    BigRat delta_hp; // t - a/q, exact for rationals, width ~1e-40 otherwise
    double delta = 0.0;
};

inline RationalApprox dirichlet_approx(const Theta& t, std::int64_t cap) {
    if (cap < 1) throw std::domain_error("dirichlet_approx: cap must be >= 1");
    using detail::i128;
    i128 pp = 1, qp = 0, pc = 0, qc = 0;
    bool have = false, exhausted = false;

    auto push = [&](std::int64_t a) -> bool { // returns false once q would pass cap
        if (!have) {
            pc = a; qc = 1; have = true;
            return true;
        }
        i128 pn = i128(a) * pc + pp;
        i128 qn = i128(a) * qc + qp;
        if (qn > i128(cap)) return false;
        pp = pc; qp = qc; pc = pn; qc = qn;
        return true;
    };

    if (t.is_quad()) {
        detail::SurdCfStream st(t.quad());
        while (push(st.next())) {}
    } else {
        detail::RatCfStream st(t.rat());
        for (;;) {
            auto a = st.next();
            if (!a) { exhausted = true; break; }
            if (!push(*a)) break;
        }
    }

    RationalApprox out;
    out.cap = cap;
    if (pc > i128(INT64_MAX) || pc < i128(INT64_MIN))
        throw std::overflow_error("dirichlet_approx: numerator exceeds 64 bits");
    out.a = static_cast<std::int64_t>(pc);
    out.q = static_cast<std::int64_t>(qc);
    BigRat aq = make_rat(BigInt(static_cast<long>(out.a)), BigInt(static_cast<long>(out.q)));
    if (exhausted && !t.is_quad()) {
        out.delta_hp = t.rat() - aq;  // exactly 0 when the rational fit within cap
    } else if (t.is_quad()) {
        out.delta_hp = t.quad().interval(40).mid() - aq;
    } else {
        out.delta_hp = t.rat() - aq;
    }
    out.delta = rat_to_double(out.delta_hp);
    return out;
}

// Empirical finite-type profile: for each m, the distance ||m*theta|| and the
// exponent log(1/(m*||m*theta||)) / log m; kappa_sup is their maximum.
struct TypeSample {
    std::uint64_t m;
    double dist;
    double exponent;
};

struct TypeProfile {
    double kappa_sup;
    std::vector<TypeSample> samples; // m = 2..M (exponent undefined at m = 1)
};

inline TypeProfile type_profile(const QuadIrr& t, std::uint64_t M) {
    if (M < 2) throw std::domain_error("type_profile: M must be >= 2");
    TypeProfile out;
    out.kappa_sup = -std::numeric_limits<double>::infinity();
    out.samples.reserve(M - 1);
    auto [thi, tlo] = t.to_dd();
    dd::Dd theta_dd{thi, tlo};
    for (std::uint64_t m = 2; m <= M; ++m) {
        double dist = dd::dist_to_int(dd::mul_u64(theta_dd, m));
        if (dist < 1e-9) {
            // Fast path cannot guarantee the sign this close to an integer;
            // re-derive from exact arithmetic with a widening interval.
            std::int64_t nearest = quad_floor(t, m, 1, 2);
            QuadIrr diff = t.scaled(static_cast<std::int64_t>(m), 1).add_int(-nearest);
            unsigned digits = 64;
            for (;;) {
                RatInterval iv = diff.interval(digits);
                if (sgn(iv.lo) == sgn(iv.hi) && sgn(iv.lo) != 0) {
                    dist = std::fabs(rat_to_double(iv.mid()));
                    break;
                }
                if (digits >= 1024)
                    throw precision_error("type_profile: cannot separate ||m*theta|| from 0");
                digits *= 2;
            }
        }
        double expo = -std::log(static_cast<double>(m) * dist) / std::log(static_cast<double>(m));
        out.samples.push_back({m, dist, expo});
        out.kappa_sup = std::max(out.kappa_sup, expo);
    }
    return out;
}

} // namespace bsmooth
