#pragma once

// The theta parameter: either an exact quadratic irrational ("quad:a,b,d,c",
// meaning (a + b*sqrt(d))/c) or an exact decimal literal ("dec:<digits>").
// Decimal literals are rationals; the exact-arithmetic paths treat them as
// such and guard any floor/threshold decision that a truncated literal
// cannot settle.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "bsmooth/quadirr.hpp"
#include "bsmooth/rational.hpp"

namespace bsmooth {

class Theta {
  public:
    explicit Theta(QuadIrr q) : v_(std::move(q)) {}
    explicit Theta(BigRat r) : v_(std::move(r)) {}

    bool is_quad() const { return std::holds_alternative<QuadIrr>(v_); }
    const QuadIrr& quad() const { return std::get<QuadIrr>(v_); }
    const BigRat& rat() const { return std::get<BigRat>(v_); }

    double to_double() const {
        return is_quad() ? quad().to_double() : rat_to_double(rat());
    }

    std::string str() const {
        if (is_quad()) return quad().str();
        std::string s = rat().get_num().get_str();
        if (rat().get_den() != 1) s += "/" + rat().get_den().get_str();
        return "dec:" + s;
    }

    int cmp_int(std::int64_t k) const {
        if (is_quad()) return quad().cmp_int(k);
        return cmp(rat(), BigRat(static_cast<long>(k)));
    }

    // Enclosing interval (degenerate for the rational case).
    RatInterval interval(unsigned digits) const {
        if (is_quad()) return quad().interval(digits);
        return {rat(), rat()};
    }

    // {n * theta} as an interval of width ~10^-digits (exact when rational).
    RatInterval frac_of_multiple(std::uint64_t n, unsigned digits) const {
        if (is_quad()) {
            const QuadIrr& q = quad();
            // widen working precision so that scaling by n*b/c keeps 10^-digits
            double mag = std::fabs(static_cast<double>(q.b())) * static_cast<double>(n) /
                         static_cast<double>(q.c());
            unsigned extra = mag > 1 ? static_cast<unsigned>(std::log10(mag)) + 2 : 2;
            RatInterval iv = q.interval(digits + extra);
            iv = iv.scaled(BigRat(BigInt(std::to_string(n))));
            BigInt fl = floor_rat(iv.lo);
            return {iv.lo - BigRat(fl), iv.hi - BigRat(fl)};
        }
        BigRat v = rat() * BigRat(BigInt(std::to_string(n)));
        BigRat f = frac_rat(v);
        return {f, f};
    }

    // {theta} and {n*theta} as hi/lo double pairs, good to ~10^-(digits).
    std::pair<double, double> frac_dd(unsigned digits = 60) const {
        return rat_to_dd(frac_of_multiple(1, digits).mid());
    }
    std::pair<double, double> frac_of_multiple_dd(std::uint64_t n, unsigned digits = 60) const {
        return rat_to_dd(frac_of_multiple(n, digits).mid());
    }

    // j / theta, exact in both representations.
    Theta reciprocal_times(std::int64_t j) const {
        if (j == 0) throw std::domain_error("Theta::reciprocal_times: j must be nonzero");
        if (is_quad()) return Theta(quad().reciprocal().scaled(j, 1));
        if (rat() == 0) throw std::domain_error("Theta::reciprocal_times: zero theta");
        return Theta(BigRat(BigRat(static_cast<long>(j)) / rat()));
    }

  private:
    std::variant<QuadIrr, BigRat> v_;
};

namespace detail {

inline std::int64_t parse_i64(std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("theta: bad integer \"" + std::string(s) + "\"");
    return v;
}

} // namespace detail

// Grammar: `quad:a,b,d,c` for (a + b*sqrt(d))/c, or `dec:<decimal literal>`.
inline Theta parse_theta(std::string_view s) {
    if (s.rfind("quad:", 0) == 0) {
        std::string_view body = s.substr(5);
        std::int64_t vals[4];
        for (int i = 0; i < 4; ++i) {
            size_t comma = (i < 3) ? body.find(',') : std::string_view::npos;
            std::string_view tok = (comma == std::string_view::npos) ? body : body.substr(0, comma);
            if (i < 3 && comma == std::string_view::npos)
                throw std::invalid_argument("theta: quad form needs a,b,d,c");
            vals[i] = detail::parse_i64(tok);
            if (i < 3) body = body.substr(comma + 1);
        }
        return Theta(QuadIrr(vals[0], vals[1], vals[2], vals[3]));
    }
    if (s.rfind("dec:", 0) == 0) return Theta(parse_decimal(s.substr(4)));
    throw std::invalid_argument("theta: expected quad:a,b,d,c or dec:<digits>, got \"" +
                                std::string(s) + "\"");
}

} // namespace bsmooth
