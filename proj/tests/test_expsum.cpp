#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bsmooth/expsum.hpp"
#include "bsmooth/theta.hpp"

using namespace bsmooth;

namespace {

// Reference evaluation: every phase {n theta} from a fresh >= 50-digit
// interval, no incremental accumulation.
std::complex<double> exp_sum_reference(const SpfSieve& sieve, double x, double y,
                                       const Theta& theta, unsigned digits = 55) {
    double re = 0, im = 0;
    for_each_smooth(sieve, x, y, [&](std::uint64_t n) {
        double ph = rat_to_double(theta.frac_of_multiple(n, digits).mid());
        double ang = 2.0 * std::numbers::pi * ph;
        re += std::cos(ang);
        im += std::sin(ang);
    });
    return {re, im};
}

} // namespace

TEST_CASE("zero phase returns the exact count") {
    SpfSieve sieve = build_sieve(2000);
    ExpSumResult r = exp_sum(sieve, 1500, 7, Theta(BigRat(0)));
    CHECK(r.terms == psi_exact_sieve(sieve, 1500, 7).count);
    CHECK(r.value.real() == static_cast<double>(r.terms));
    CHECK(r.value.imag() == 0.0);
}

TEST_CASE("half-integer phase alternates signs") {
    SpfSieve sieve = build_sieve(100);
    // theta = 1/2: e(n/2) = (-1)^n; over 5-smooth n <= 10 the sum is 1
    ExpSumResult r = exp_sum(sieve, 10, 5, Theta(make_rat(BigInt(1), BigInt(2))));
    CHECK(r.value.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.value.imag() == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    // with y = 10 every n <= 10 is smooth and the alternating sum cancels
    ExpSumResult full = exp_sum(sieve, 10, 10, Theta(make_rat(BigInt(1), BigInt(2))));
    CHECK(full.value.real() == doctest::Approx(0.0).scale(1).epsilon(1e-12));
}

TEST_CASE("conjugate symmetry under theta -> -theta") {
    SpfSieve sieve = build_sieve(5000);
    Theta pos(QuadIrr(0, 1, 2, 1)), neg(QuadIrr(0, -1, 2, 1));
    ExpSumResult a = exp_sum(sieve, 5000, 20, pos);
    ExpSumResult b = exp_sum(sieve, 5000, 20, neg);
    CHECK(a.value.real() == doctest::Approx(b.value.real()).epsilon(1e-9));
    CHECK(a.value.imag() == doctest::Approx(-b.value.imag()).epsilon(1e-9));
}

TEST_CASE("triangle inequality |S| <= terms") {
    SpfSieve sieve = build_sieve(20000);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> xd(10, 20000), yd(2, 100);
    for (int i = 0; i < 20; ++i) {
        ExpSumResult r = exp_sum(sieve, xd(rng), yd(rng), Theta(QuadIrr(1, 1, 5, 2)));
        CHECK(std::abs(r.value) <= static_cast<double>(r.terms) * (1 + 1e-12));
    }
}

TEST_CASE("incremental phase walk matches per-term reference") {
    SpfSieve sieve = build_sieve(100000);
    for (const char* th : {"quad:1,1,5,2", "quad:1,1,2,1", "dec:0.739085133215160641"}) {
        Theta theta = parse_theta(th);
        ExpSumResult fast = exp_sum(sieve, 100000, 100, theta);
        std::complex<double> ref = exp_sum_reference(sieve, 100000, 100, theta);
        CHECK(std::abs(fast.value - ref) <= 1e-8 * static_cast<double>(fast.terms));
    }
}

TEST_CASE("multiplicative twist") {
    SpfSieve sieve = build_sieve(10000);
    MultFn f;
    f.set(2, {-1.0, 0.0});
    f.set(3, std::polar(1.0, 1.0));
    f.set(5, {0.3, 0.4});
    CHECK_THROWS_AS(f.set(7, {1.2, 0.0}), std::domain_error);

    // complete multiplicativity on random smooth pairs
    std::mt19937_64 rng(17);
    auto smooth = enumerate_smooth(sieve, 95, 5);
    std::uniform_int_distribution<std::size_t> pick(0, smooth.size() - 1);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t n1 = smooth[pick(rng)], n2 = smooth[pick(rng)];
        if (n1 * n2 > sieve.limit()) continue;
        std::complex<double> lhs = f.at(n1 * n2, sieve);
        std::complex<double> rhs = f.at(n1, sieve) * f.at(n2, sieve);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }

    // f = -1 on every prime <= y: sum of lambda(n) e(0) = sum lambda(n)
    MultFn liouville;
    for (std::uint32_t p : sieve.primes_upto(10)) liouville.set(p, {-1.0, 0.0});
    ExpSumResult r = exp_sum(sieve, 100, 10, Theta(BigRat(0)), liouville);
    double expect = 0;
    for_each_smooth(sieve, 100, 10, [&](std::uint64_t n) {
        int bits = 0;
        std::uint64_t m = n;
        while (m > 1) { m /= sieve.spf(m); ++bits; }
        expect += (bits % 2 == 0) ? 1.0 : -1.0;
    });
    CHECK(r.value.real() == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("bound report transcription and edge cases") {
    SpfSieve sieve = build_sieve(2000);
    SaddleAlpha alpha = solve_alpha(sieve, 1e6, 1e3);
    std::uint64_t psi = 123456; // any positive count: the formula is algebraic in it

    double x = 1e6, y = 1e3, delta = 1e-9;
    std::uint64_t q = 611;
    BoundReport r = bound_rhs(x, y, q, delta, psi, alpha, 42.0);

    // independent transcription of the two displayed terms
    double u = std::log(x) / std::log(y);
    double L = 2.0 * (1.0 + std::fabs(delta * x));
    double M = std::pow(u, 1.5) * std::log(u) * std::log(x) * std::sqrt(std::log(L)) *
               std::sqrt(std::log(double(q) * y));
    double main_t = double(psi) *
                    std::pow(double(q) * L, -0.5 + 1.5 * (1 - alpha.alpha)) * M;
    double tail_t = double(psi) * std::pow(x, alpha.alpha / 2) *
                    std::sqrt(double(q) * L * y * y * y) * std::sqrt(std::log(y) * std::log(double(q)));
    CHECK(r.term_main == doctest::Approx(main_t).epsilon(1e-12));
    CHECK(r.term_tail == doctest::Approx(tail_t).epsilon(1e-12));
    CHECK(r.rhs_total == doctest::Approx(main_t + tail_t).epsilon(1e-12));
    CHECK(r.ratio == doctest::Approx(42.0 / r.rhs_total).epsilon(1e-12));
    CHECK(r.term_main > 0);
    CHECK(r.term_tail > 0);

    // delta = 0, q = 2: L = 2 and the main-term base is exactly 2q
    BoundReport flat = bound_rhs(1e4, 100, 2, 0.0, 1000, solve_alpha(sieve, 1e4, 100));
    CHECK(flat.L == 2.0);
    double base = std::pow(4.0, -0.5 + 1.5 * (1 - flat.alpha));
    CHECK(flat.term_main == doctest::Approx(1000 * base * flat.M).epsilon(1e-12));

    CHECK_THROWS_AS(bound_rhs(1e6, 1e3, 1, 0.0, 10, alpha), std::domain_error);
}

TEST_CASE("erdos-turan inequality") {
    // constant sequence on the full interval: lhs = 0
    std::vector<double> zeros(50, 0.0);
    ErdosTuranResult z = erdos_turan(zeros, 5, 0.0, 1.0);
    CHECK(z.count == 50);
    CHECK(z.lhs == 0.0);
    CHECK(z.lhs <= z.rhs);

    // golden-ratio rotation, the classic low-discrepancy sequence
    std::vector<double> golden;
    double g = (std::sqrt(5.0) - 1) / 2;
    for (int n = 1; n <= 1000; ++n) golden.push_back(std::fmod(n * g, 1.0));
    ErdosTuranResult e = erdos_turan(golden, 20, 0.0, 0.5);
    CHECK(e.lhs <= e.rhs);
    std::uint64_t direct = 0;
    for (double v : golden)
        if (v <= 0.5) ++direct;
    CHECK(e.count == direct);

    // randomized sequences: the inequality is a theorem
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unif(0, 1), len(0, 1);
    std::uniform_int_distribution<int> Nd(1, 400), Jd(1, 40);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> u(Nd(rng));
        for (double& v : u) v = unif(rng) * 50 - 25;
        double rho = unif(rng) * 4 - 2, sigma = rho + len(rng);
        ErdosTuranResult r = erdos_turan(u, Jd(rng), rho, sigma);
        CHECK(r.lhs <= r.rhs);
    }

    CHECK_THROWS_AS(erdos_turan(zeros, 5, 0.0, 1.5), std::domain_error);
    CHECK_THROWS_AS(erdos_turan(zeros, 0, 0.0, 0.5), std::domain_error);
}

TEST_CASE("discrepancy sum probes") {
    SpfSieve sieve = build_sieve(20000);
    Theta golden(QuadIrr(1, 1, 5, 2));
    // j = 0 degenerates to the count
    std::uint64_t tx = floor_theta_times(golden, 10000);
    std::complex<double> s0 = smooth_discrepancy_sum(sieve, 10000, 50, golden, 0);
    CHECK(s0.real() == static_cast<double>(psi_exact_sieve(sieve, double(tx), 50).count));
    CHECK(s0.imag() == 0.0);

    // j = 1 against a 50-digit per-term reference
    std::complex<double> s1 = smooth_discrepancy_sum(sieve, 1000, 50, golden, 1);
    Theta inv = golden.reciprocal_times(1);
    std::uint64_t txs = floor_theta_times(golden, 1000);
    std::complex<double> ref = exp_sum_reference(sieve, double(txs), 50, inv);
    CHECK(std::abs(s1 - ref) < 1e-9 * double(psi_exact_sieve(sieve, double(txs), 50).count));

    // triangle inequality
    CHECK(std::abs(s1) <= double(psi_exact_sieve(sieve, double(txs), 50).count) * (1 + 1e-12));

    // coherence: 233/golden = 143.0029..., so phases crawl and |S| stays
    // close to the term count while theta*x keeps n*0.0029 small
    std::complex<double> sc = smooth_discrepancy_sum(sieve, 50, 20, golden, 233);
    std::uint64_t tc = floor_theta_times(golden, 50);
    double psi_c = double(psi_exact_sieve(sieve, double(tc), 20).count);
    CHECK(std::abs(sc) > 0.7 * psi_c);
}

TEST_CASE("discrepancy sum at the sweep scale matches the 50-digit reference") {
    SpfSieve sieve = build_sieve(170000);
    Theta golden(QuadIrr(1, 1, 5, 2));
    std::complex<double> s1 = smooth_discrepancy_sum(sieve, 100000, 500, golden, 1);
    std::uint64_t txs = floor_theta_times(golden, 100000);
    std::complex<double> ref = exp_sum_reference(sieve, double(txs), 500, golden.reciprocal_times(1));
    double psi = double(psi_exact_sieve(sieve, double(txs), 500).count);
    CHECK(std::isfinite(std::abs(s1)));
    CHECK(std::abs(s1 - ref) < 1e-8 * psi);
}

TEST_CASE("floor of theta*x") {
    Theta golden(QuadIrr(1, 1, 5, 2));
    CHECK(floor_theta_times(golden, 5) == 8);
    CHECK(floor_theta_times(golden, 1e6) == 1618033);
    Theta r(parse_decimal("2.5"));
    CHECK(floor_theta_times(r, 4) == 10); // exactly integral product counts itself
    CHECK(floor_theta_times(r, 4.2) == 10);
}
