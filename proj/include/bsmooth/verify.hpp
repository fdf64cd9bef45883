#pragma once

// Desk-scale experiment harness: the smooth-members-of-a-Beatty-sequence
// ratio sweep, the scaled-density check Psi(x/d,y) vs d^-alpha Psi(x,y), and
// the observed-vs-bound sweep for the discrepancy sums.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "bsmooth/beatty.hpp"
#include "bsmooth/diophantine.hpp"
#include "bsmooth/expsum.hpp"
#include "bsmooth/report.hpp"
#include "bsmooth/saddle.hpp"
#include "bsmooth/sieve.hpp"
#include "bsmooth/theta.hpp"

namespace bsmooth {

// ratio = theta * lhs / Psi(theta x, y); the quantity expected to drift
// toward 1 as x grows.
struct Theorem1Record {
    double x;
    double y;
    std::string theta;
    std::string psi;
    std::uint64_t lhs;      // smooth members of the Beatty sequence up to x
    std::uint64_t psi_tx_y; // Psi(theta x, y)
    double ratio;
};

struct Theorem1Point {
    double x;
    double y;
    Theta theta;
    BigRat psi;
};

using PointErrorFn = std::function<void(std::size_t, const std::string&)>;

inline std::vector<Theorem1Record> run_theorem1(const std::vector<Theorem1Point>& grid,
                                                const SpfSieve& sieve,
                                                const PointErrorFn& on_error = {}) {
    std::vector<Theorem1Record> out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& pt = grid[i];
        try {
            BeattyParams params(pt.theta, pt.psi);
            std::uint64_t lhs = count_smooth_in_beatty(params, pt.x, pt.y, sieve);
            std::uint64_t tx = floor_theta_times(pt.theta, pt.x);
            std::uint64_t psi_tx = psi_exact_sieve(sieve, static_cast<double>(tx), pt.y).count;
            double ratio = pt.theta.to_double() * static_cast<double>(lhs) /
                           static_cast<double>(psi_tx);
            std::string psi_text = pt.psi.get_num().get_str();
            if (pt.psi.get_den() != 1) psi_text += "/" + pt.psi.get_den().get_str();
            out.push_back({pt.x, pt.y, pt.theta.str(), psi_text, lhs, psi_tx, ratio});
        } catch (const std::exception& e) {
            if (on_error) on_error(i, e.what());
        }
    }
    return out;
}

// Defaults keep theta*x <= 2.5e6 so the whole sweep runs in seconds.
inline std::vector<Theorem1Point> default_theorem1_grid() {
    std::vector<Theorem1Point> grid;
    const Theta thetas[] = {Theta(QuadIrr(1, 1, 5, 2)), Theta(QuadIrr(1, 1, 2, 1))};
    const BigRat psis[] = {BigRat(0), make_rat(BigInt(7), BigInt(10))};
    for (double x : {1e4, 1e5, 1e6}) {
        double l3 = std::pow(std::log(x), 3.0);
        for (double y : {l3, 10.0 * l3, std::cbrt(x)})
            for (const Theta& th : thetas)
                for (const BigRat& ps : psis) grid.push_back({x, y, th, ps});
    }
    return grid;
}

inline Table to_table(const std::vector<Theorem1Record>& records) {
    Table t;
    t.header = {"x", "y", "theta", "psi", "lhs", "psi_tx_y", "ratio"};
    for (const auto& r : records)
        t.rows.push_back({r.x, r.y, r.theta, r.psi, r.lhs, r.psi_tx_y, r.ratio});
    return t;
}

// scaled = d^alpha(x,y) * Psi(x/d, y) / Psi(x, y); bounded by a modest
// constant across the grid.
struct Lemma21Record {
    double x;
    double y;
    double d;
    std::uint64_t lhs; // Psi(x/d, y)
    double scaled;
};

struct Lemma21Point {
    double x;
    double y;
    double d;
};

inline std::vector<Lemma21Record> run_lemma21(const std::vector<Lemma21Point>& grid,
                                              const SpfSieve& sieve,
                                              const PointErrorFn& on_error = {}) {
    std::vector<Lemma21Record> out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& pt = grid[i];
        try {
            if (!(pt.d >= 1)) throw std::domain_error("run_lemma21: d must be >= 1");
            SaddleAlpha alpha = solve_alpha(sieve, pt.x, pt.y);
            std::uint64_t psi_full = psi_exact_sieve(sieve, pt.x, pt.y).count;
            double xd = pt.x / pt.d;
            std::uint64_t psi_div = (xd >= 1) ? psi_exact_sieve(sieve, xd, pt.y).count : 0;
            double scaled = std::pow(pt.d, alpha.alpha) * static_cast<double>(psi_div) /
                            static_cast<double>(psi_full);
            out.push_back({pt.x, pt.y, pt.d, psi_div, scaled});
        } catch (const std::exception& e) {
            if (on_error) on_error(i, e.what());
        }
    }
    return out;
}

inline std::vector<Lemma21Point> default_lemma21_grid() {
    std::vector<Lemma21Point> grid;
    for (double y : {100.0, 1000.0})
        for (double d : {1.0, 2.0, 10.0, 100.0, 1000.0}) grid.push_back({1e6, y, d});
    return grid;
}

inline Table to_table(const std::vector<Lemma21Record>& records) {
    Table t;
    t.header = {"x", "y", "d", "lhs", "scaled"};
    for (const auto& r : records) t.rows.push_back({r.x, r.y, r.d, r.lhs, r.scaled});
    return t;
}

// One row per phase multiple j: the Dirichlet data for j/theta, the observed
// |S|, and the evaluated bound. Rows with q = 1 are kept but marked skipped,
// since the bound is undefined there.
struct BoundSweepRow {
    std::int64_t j;
    std::int64_t a;
    std::int64_t q;
    double delta;
    bool skipped;
    std::string reason;
    BoundReport report; // valid when !skipped
};

inline std::vector<BoundSweepRow> run_bound_sweep(double x, double y, const Theta& theta,
                                                  std::int64_t j_max, const SpfSieve& sieve) {
    if (j_max < 1) throw std::domain_error("run_bound_sweep: j_max must be >= 1");
    std::vector<BoundSweepRow> out;
    std::uint64_t tx = floor_theta_times(theta, x);
    if (tx > sieve.limit()) throw std::range_error("run_bound_sweep: theta*x exceeds sieve limit");
    double txd = static_cast<double>(tx);
    std::uint64_t psi_tx = psi_exact_sieve(sieve, txd, y).count;
    SaddleAlpha alpha = solve_alpha(sieve, txd, y);
    std::int64_t cap = static_cast<std::int64_t>(std::floor(std::sqrt(x)));

    for (std::int64_t j = 1; j <= j_max; ++j) {
        Theta phase = theta.reciprocal_times(j);
        RationalApprox ap = dirichlet_approx(phase, cap);
        BoundSweepRow row;
        row.j = j;
        row.a = ap.a;
        row.q = ap.q;
        row.delta = ap.delta;
        if (ap.q < 2) {
            row.skipped = true;
            row.reason = "q = 1: bound undefined";
            row.report = {};
            out.push_back(std::move(row));
            continue;
        }
        std::complex<double> S = smooth_discrepancy_sum(sieve, x, y, theta, j);
        row.skipped = false;
        row.report = bound_rhs(txd, y, static_cast<std::uint64_t>(ap.q), ap.delta, psi_tx, alpha,
                               std::abs(S));
        out.push_back(std::move(row));
    }
    return out;
}

inline Table to_table(const std::vector<BoundSweepRow>& rows) {
    Table t;
    t.header = {"j",         "a",        "q",         "delta",   "skipped", "reason",
                "alpha",     "u",        "L",         "M",       "term_main",
                "term_tail", "rhs_total", "observed", "ratio"};
    for (const auto& r : rows)
        t.rows.push_back({r.j, r.a, r.q, r.delta, std::string(r.skipped ? "true" : "false"),
                          r.reason, r.report.alpha, r.report.u, r.report.L, r.report.M,
                          r.report.term_main, r.report.term_tail, r.report.rhs_total,
                          r.report.observed, r.report.ratio});
    return t;
}

} // namespace bsmooth
