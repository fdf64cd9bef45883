#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bsmooth/beatty.hpp"

using namespace bsmooth;

namespace {

BeattyParams golden0() { return {Theta(QuadIrr(1, 1, 5, 2)), BigRat(0)}; }

} // namespace

TEST_CASE("params validation") {
    CHECK_THROWS_AS(BeattyParams(Theta(QuadIrr(1, 1, 5, 4)), BigRat(0)), std::domain_error); // < 1
    CHECK_THROWS_AS(BeattyParams(Theta(QuadIrr(1, 1, 5, 2)), BigRat(-1)), std::domain_error);
    CHECK_THROWS_AS(BeattyParams(Theta(parse_decimal("0.9")), BigRat(0)), std::domain_error);
}

TEST_CASE("terms of classic sequences") {
    BeattyParams g = golden0();
    std::vector<std::int64_t> first;
    for (std::uint64_t n = 1; n <= 5; ++n) first.push_back(beatty_term(g, n));
    CHECK(first == std::vector<std::int64_t>{1, 3, 4, 6, 8});

    BeattyParams t(Theta(QuadIrr(2, 1, 2, 1)), BigRat(0)); // 2 + sqrt(2)
    CHECK(beatty_term(t, 1) == 3);

    // psi shift by 1 increments every term
    BeattyParams shifted(Theta(QuadIrr(1, 1, 5, 2)), BigRat(1));
    for (std::uint64_t n = 1; n <= 200; ++n)
        CHECK(beatty_term(shifted, n) == beatty_term(g, n) + 1);

    // strict monotonicity for theta > 1
    std::int64_t prev = 0;
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        std::int64_t m = beatty_term(g, n);
        CHECK(m > prev);
        prev = m;
    }
}

TEST_CASE("membership criterion equals direct enumeration") {
    struct Fixture {
        Theta theta;
        BigRat psi;
    };
    const Fixture fixtures[] = {
        {Theta(QuadIrr(1, 1, 5, 2)), BigRat(0)},
        {Theta(QuadIrr(1, 1, 5, 2)), make_rat(BigInt(7), BigInt(10))},
        {Theta(QuadIrr(1, 1, 2, 1)), BigRat(0)},
        {Theta(QuadIrr(1, 1, 2, 1)), make_rat(BigInt(3), BigInt(2))},
        {Theta(QuadIrr(2, 1, 2, 1)), make_rat(BigInt(1), BigInt(4))},
    };
    const std::uint64_t m_max = 10000;
    for (const auto& f : fixtures) {
        BeattyParams params(f.theta, f.psi);
        std::set<std::int64_t> terms;
        for (std::uint64_t n = 1;; ++n) {
            std::int64_t t = beatty_term(params, n);
            if (t > static_cast<std::int64_t>(m_max)) break;
            terms.insert(t);
        }
        for (std::uint64_t m = 1; m <= m_max; ++m)
            CHECK(beatty_contains(params, m) == (terms.count(static_cast<std::int64_t>(m)) > 0));
    }
}

TEST_CASE("membership round trip and witness edge") {
    BeattyParams g = golden0();
    CHECK(beatty_contains(g, 8));
    CHECK(!beatty_contains(g, 7));
    for (std::uint64_t n = 1; n <= 500; ++n)
        CHECK(beatty_contains(g, static_cast<std::uint64_t>(beatty_term(g, n))));

    // psi = 3/2: m = 1 satisfies the raw fractional-part test but only with
    // witness index 0, so it is not a term.
    BeattyParams s(Theta(QuadIrr(1, 1, 5, 2)), make_rat(BigInt(3), BigInt(2)));
    CHECK(beatty_term(s, 1) == 3);
    CHECK(!beatty_contains(s, 1));

    // psi = m + 1 boundary: fractional part is exactly 0
    BeattyParams w(Theta(QuadIrr(1, 1, 5, 2)), BigRat(9));
    CHECK(!beatty_contains(w, 8));
}

TEST_CASE("complementary Beatty pair partitions the integers") {
    // 1/(1+sqrt2) + 2/(2+sqrt2) = 1: the pair (1+sqrt2, (2+sqrt2)/2) is complementary.
    BeattyParams r(Theta(QuadIrr(1, 1, 2, 1)), BigRat(0));
    BeattyParams s(Theta(QuadIrr(2, 1, 2, 2)), BigRat(0));
    for (std::uint64_t m = 1; m <= 5000; ++m)
        CHECK((beatty_contains(r, m) ^ beatty_contains(s, m)) == 1);
}

TEST_CASE("decimal theta path agrees with the exact one away from boundaries") {
    BeattyParams exact = golden0();
    BeattyParams dec(Theta(parse_decimal("1.61803398874989484820458683436563811772")), BigRat(0));
    for (std::uint64_t n = 1; n <= 1000; ++n) CHECK(beatty_term(dec, n) == beatty_term(exact, n));
    for (std::uint64_t m = 1; m <= 1000; ++m)
        CHECK(beatty_contains(dec, m) == beatty_contains(exact, m));
}

TEST_CASE("decimal theta ambiguity guard") {
    // theta*1 sits 1e-40 above an integer: no 30-digit guard can accept it
    BeattyParams p(Theta(parse_decimal("2.0000000000000000000000000000000000000001")), BigRat(0));
    CHECK_THROWS_AS(beatty_term(p, 1), precision_error);
}

TEST_CASE("counting smooth members") {
    SpfSieve sieve = build_sieve(250000);
    BeattyParams g = golden0();

    // y above every term: all floor(x) members count
    CHECK(count_smooth_in_beatty(g, 100, 1e9, sieve) == 100);

    // cross-algorithm: membership scan over m vs iteration over n
    double x = 100000, y = 500;
    BeattyParams t(Theta(QuadIrr(1, 1, 2, 1)), BigRat(0));
    std::uint64_t direct = count_smooth_in_beatty(t, x, y, sieve);
    std::uint64_t scan = 0;
    std::uint64_t m_hi = static_cast<std::uint64_t>(beatty_term(t, static_cast<std::uint64_t>(x)));
    for (std::uint64_t m = 1; m <= m_hi; ++m)
        if (is_smooth(sieve, m, y) && beatty_contains(t, m)) ++scan;
    CHECK(direct == scan);

    // golden fixture, small smooth bound
    std::uint64_t c = count_smooth_in_beatty(g, 20, 5, sieve);
    std::uint64_t expect = 0;
    for (std::uint64_t n = 1; n <= 20; ++n)
        if (is_smooth(sieve, static_cast<std::uint64_t>(beatty_term(g, n)), 5)) ++expect;
    CHECK(c == expect);

    SpfSieve tiny = build_sieve(50);
    CHECK_THROWS_AS(count_smooth_in_beatty(g, 1000, 5, tiny), std::range_error);
}
