// Command-line front end. One subcommand per library operation; numerics are
// decimal strings, theta uses the quad:a,b,d,c / dec:<digits> grammar.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bsmooth/beatty.hpp"
#include "bsmooth/diophantine.hpp"
#include "bsmooth/expsum.hpp"
#include "bsmooth/quadirr.hpp"
#include "bsmooth/report.hpp"
#include "bsmooth/saddle.hpp"
#include "bsmooth/sieve.hpp"
#include "bsmooth/theta.hpp"
#include "bsmooth/verify.hpp"

namespace {

using namespace bsmooth;

constexpr std::uint64_t kDefaultSieveLimit = 20000000; // 2e7

std::uint64_t sieve_cap() {
    if (const char* env = std::getenv("SMOOTH_SIEVE_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 2) return v;
        throw std::invalid_argument("SMOOTH_SIEVE_LIMIT must be an integer >= 2");
    }
    return kDefaultSieveLimit;
}

// Builds a sieve large enough for `need`, within the configured cap.
SpfSieve sieve_for(double need) {
    std::uint64_t cap = sieve_cap();
    if (!(need >= 2)) need = 2;
    std::uint64_t n = static_cast<std::uint64_t>(std::floor(need));
    if (n > cap)
        throw std::range_error("needed sieve limit " + std::to_string(n) +
                               " exceeds cap " + std::to_string(cap) +
                               " (raise SMOOTH_SIEVE_LIMIT)");
    return build_sieve(std::max<std::uint64_t>(n, 2));
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::complex<double> parse_complex(const std::string& s) {
    // forms: "0.5", "-1", "0.6+0.8i", "0.6-0.8i", "0.8i", "-i"
    std::string t = s;
    if (t.empty()) throw std::invalid_argument("empty f value");
    if (t.back() != 'i') return {std::stod(t), 0.0};
    t.pop_back();
    // split at the last +/- that is not the leading sign or part of an exponent
    for (std::size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            double re = std::stod(t.substr(0, i));
            std::string im = t.substr(i);
            if (im == "+") im = "1";
            if (im == "-") im = "-1";
            return {re, std::stod(im)};
        }
    }
    if (t.empty() || t == "+") return {0.0, 1.0};
    if (t == "-") return {0.0, -1.0};
    return {0.0, std::stod(t)};
}

MultFn parse_multfn(const std::string& spec) {
    MultFn f;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--f items must look like p=value");
        std::uint64_t p = std::stoull(item.substr(0, eq));
        f.set(p, parse_complex(item.substr(eq + 1)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return f;
}

std::string timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y%m%d-%H%M%S", &tm);
    return buf;
}

std::string default_out(const std::string& experiment, ReportFormat fmt) {
    return experiment + "_" + timestamp() + (fmt == ReportFormat::csv ? ".csv" : ".json");
}

// Grid rows come back from the CSV reader; a quad theta may span four cells
// when unquoted, so middle cells are rejoined.
std::vector<std::vector<std::string>> read_grid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open grid file \"" + path + "\"");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    Table t = csv_to_table(text);
    std::vector<std::vector<std::string>> rows;
    auto is_numeric = [](const std::string& s) {
        return !s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-' ||
                              s[0] == '+' || s[0] == '.');
    };
    // csv_to_table treats the first line as a header; if it was already data,
    // recover it.
    if (!t.header.empty() && is_numeric(t.header[0])) {
        std::vector<std::string> first;
        for (auto& h : t.header) first.push_back(h);
        rows.push_back(std::move(first));
    }
    for (auto& row : t.rows) {
        std::vector<std::string> r;
        for (auto& c : row) r.push_back(std::get<std::string>(c));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string join_range(const std::vector<std::string>& v, std::size_t from, std::size_t to) {
    std::string out;
    for (std::size_t i = from; i < to; ++i) {
        if (i > from) out += ',';
        out += v[i];
    }
    return out;
}

void write_and_announce(const Table& t, ReportFormat fmt, const std::string& path) {
    write_report(t, fmt, path);
    std::cout << "wrote " << path << " (" << t.rows.size() << " rows)\n";
}

const char* kThetaGrammar =
    "theta grammar: quad:a,b,d,c for (a+b*sqrt(d))/c (exact), or dec:<decimal literal>. "
    "Logs are natural throughout.";

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smooth numbers in Beatty sequences: exact counting, saddle points, "
                 "exponential sums, and experiment sweeps"};
    app.footer(kThetaGrammar);
    app.require_subcommand(1);

    std::string theta_text, psi_text = "0", f_text, grid_path, format_text = "csv", out_path;
    double x = 0, y = 0, tol = 1e-10, delta = 0;
    std::uint64_t q = 0, count_n = 0, contains_m = 0, max_m = 0;
    std::int64_t cap = 0, j_max = 10;
    std::size_t cf_k = 0;
    std::string alg = "sieve";

    // psi
    auto* c_psi = app.add_subcommand("psi", "Exact count of y-smooth integers <= x");
    c_psi->add_option("--x", x, "upper bound (real)")->required();
    c_psi->add_option("--y", y, "smoothness bound (real, natural-log scale free)")->required();
    c_psi->add_option("--alg", alg, "sieve (default; needs x within sieve cap) or dfs");

    // alpha
    auto* c_alpha = app.add_subcommand("alpha", "Saddle point: root of sum_{p<=y} log p/(p^a - 1) = log x");
    c_alpha->add_option("--x", x)->required();
    c_alpha->add_option("--y", y)->required();
    c_alpha->add_option("--tol", tol, "residual tolerance (default 1e-10)");

    // beatty
    auto* c_beatty = app.add_subcommand("beatty", "Beatty sequence floor(theta n + psi) queries");
    c_beatty->add_option("--theta", theta_text, "quad:a,b,d,c or dec:<digits>, value > 1")->required();
    c_beatty->add_option("--psi", psi_text, "nonnegative rational shift as a decimal literal");
    auto* opt_count = c_beatty->add_option("--count", count_n, "print terms n = 1..count");
    auto* opt_contains = c_beatty->add_option("--contains", contains_m, "membership of m (true/false)");
    auto* opt_smooth = c_beatty->add_flag("--smooth-count", "count terms with smooth value (needs --x, --y)");
    c_beatty->add_option("--x", x, "index bound for --smooth-count");
    c_beatty->add_option("--y", y, "smoothness bound for --smooth-count");

    // cf
    auto* c_cf = app.add_subcommand("cf", "Partial quotients of the continued fraction of theta");
    c_cf->add_option("--theta", theta_text)->required();
    c_cf->add_option("--k", cf_k, "number of quotients")->required();

    // approx
    auto* c_approx = app.add_subcommand("approx", "Dirichlet approximation a/q with q <= cap, |theta - a/q| <= 1/(q cap)");
    c_approx->add_option("--theta", theta_text)->required();
    c_approx->add_option("--cap", cap, "denominator cap Q >= 1")->required();

    // type
    auto* c_type = app.add_subcommand("type", "Empirical finite-type profile of ||m theta|| for m <= max-m");
    c_type->add_option("--theta", theta_text, "must be quad: (the profile needs exact irrational arithmetic)")->required();
    c_type->add_option("--max-m", max_m)->required();

    // expsum
    auto* c_expsum = app.add_subcommand("expsum", "sum f(n) e(n theta) over y-smooth n <= x");
    c_expsum->add_option("--x", x)->required();
    c_expsum->add_option("--y", y)->required();
    c_expsum->add_option("--theta", theta_text)->required();
    c_expsum->add_option("--f", f_text, "prime values p=v,... with |v| <= 1; v real or a+bi");

    // bound
    auto* c_bound = app.add_subcommand("bound", "Evaluate the two-term exponential-sum bound at (x, y, q, delta)");
    c_bound->add_option("--x", x)->required();
    c_bound->add_option("--y", y)->required();
    c_bound->add_option("--q", q, "denominator, q >= 2")->required();
    c_bound->add_option("--delta", delta, "phase offset delta")->required();

    // verify
    auto* c_verify = app.add_subcommand("verify", "Experiment sweeps writing CSV/JSON reports");
    c_verify->require_subcommand(1);
    auto* v_t1 = c_verify->add_subcommand("theorem1", "ratio theta*count/Psi(theta x, y) over a grid (rows: x,y,theta,psi)");
    auto* v_l21 = c_verify->add_subcommand("lemma21", "scaled ratio d^alpha Psi(x/d,y)/Psi(x,y) over a grid (rows: x,y,d)");
    auto* v_bounds = c_verify->add_subcommand("bounds", "observed-vs-bound sweep over j (rows: x,y,theta,j_max)");
    for (CLI::App* v : {v_t1, v_l21, v_bounds}) {
        v->add_option("--grid", grid_path, "grid CSV (header optional; quad theta may stay unquoted)");
        v->add_option("--format", format_text, "csv (default) or json");
        v->add_option("--out", out_path, "output path (default <experiment>_<timestamp>.<ext>)");
    }

    for (CLI::App* sub : {c_psi, c_alpha, c_beatty, c_cf, c_approx, c_type, c_expsum, c_bound,
                          v_t1, v_l21, v_bounds})
        sub->footer(kThetaGrammar);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*c_psi) {
            if (alg == "sieve") {
                SpfSieve sieve = sieve_for(x);
                std::cout << psi_exact_sieve(sieve, x, y).count << "\n";
            } else if (alg == "dfs") {
                SpfSieve sieve = sieve_for(std::min(y, x));
                std::cout << psi_exact_dfs(x, y, sieve.primes_upto(y)).count << "\n";
            } else {
                std::cerr << "error: --alg must be sieve or dfs\n";
                return 2;
            }
        } else if (*c_alpha) {
            SpfSieve sieve = sieve_for(y);
            SaddleAlpha a = solve_alpha(sieve, x, y, tol);
            std::cout << "alpha = " << fmt17(a.alpha) << "\n";
            std::cout << "residual = " << fmt17(a.residual) << "\n";
        } else if (*c_beatty) {
            BeattyParams params(parse_theta(theta_text), parse_decimal(psi_text));
            int modes = (opt_count->count() > 0) + (opt_contains->count() > 0) +
                        (opt_smooth->count() > 0);
            if (modes != 1) {
                std::cerr << "error: choose exactly one of --count, --contains, --smooth-count\n";
                return 2;
            }
            if (opt_count->count()) {
                for (std::uint64_t n = 1; n <= count_n; ++n)
                    std::cout << beatty_term(params, n) << "\n";
            } else if (opt_contains->count()) {
                std::cout << (beatty_contains(params, contains_m) ? "true" : "false") << "\n";
            } else {
                if (x < 1 || y < 1) {
                    std::cerr << "error: --smooth-count needs --x and --y\n";
                    return 2;
                }
                double last = params.theta.to_double() * x + rat_to_double(params.psi) + 1;
                SpfSieve sieve = sieve_for(last);
                std::cout << count_smooth_in_beatty(params, x, y, sieve) << "\n";
            }
        } else if (*c_cf) {
            Theta t = parse_theta(theta_text);
            CfExpansion cf = t.is_quad() ? cf_expand(t.quad(), cf_k) : cf_expand(t.rat(), cf_k);
            for (std::size_t i = 0; i < cf.quotients.size(); ++i)
                std::cout << (i ? " " : "") << cf.quotients[i];
            std::cout << "\n";
            if (cf.period_start)
                std::cout << "period: start " << *cf.period_start << " length "
                          << *cf.period_len << "\n";
        } else if (*c_approx) {
            RationalApprox ap = dirichlet_approx(parse_theta(theta_text), cap);
            std::cout << "a=" << ap.a << " q=" << ap.q << " delta=" << fmt17(ap.delta) << "\n";
        } else if (*c_type) {
            Theta t = parse_theta(theta_text);
            if (!t.is_quad())
                throw std::domain_error("type: theta must be quad:a,b,d,c (a decimal literal is "
                                        "rational, so ||m theta|| hits 0)");
            TypeProfile prof = type_profile(t.quad(), max_m);
            const TypeSample* worst = &prof.samples.front();
            for (const auto& s : prof.samples)
                if (s.exponent > worst->exponent) worst = &s;
            std::cout << "kappa_sup = " << fmt17(prof.kappa_sup) << "\n";
            std::cout << "samples = " << prof.samples.size() << "\n";
            std::cout << "argmax: m=" << worst->m << " dist=" << fmt17(worst->dist) << "\n";
        } else if (*c_expsum) {
            SpfSieve sieve = sieve_for(x);
            MultFn f = f_text.empty() ? MultFn{} : parse_multfn(f_text);
            ExpSumResult r = exp_sum(sieve, x, y, parse_theta(theta_text), f);
            std::cout << "re = " << fmt17(r.value.real()) << "\n";
            std::cout << "im = " << fmt17(r.value.imag()) << "\n";
            std::cout << "abs = " << fmt17(std::abs(r.value)) << "\n";
            std::cout << "terms = " << r.terms << "\n";
        } else if (*c_bound) {
            SpfSieve sieve = sieve_for(x);
            SaddleAlpha a = solve_alpha(sieve, x, y);
            std::uint64_t psi = psi_exact_sieve(sieve, x, y).count;
            BoundReport r = bound_rhs(x, y, q, delta, psi, a);
            std::cout << "alpha = " << fmt17(r.alpha) << "\n"
                      << "u = " << fmt17(r.u) << "\n"
                      << "L = " << fmt17(r.L) << "\n"
                      << "M = " << fmt17(r.M) << "\n"
                      << "term_main = " << fmt17(r.term_main) << "\n"
                      << "term_tail = " << fmt17(r.term_tail) << "\n"
                      << "rhs_total = " << fmt17(r.rhs_total) << "\n"
                      << "psi_xy = " << psi << "\n";
        } else if (*c_verify) {
            ReportFormat fmt = parse_format(format_text);
            auto on_error = [](std::size_t i, const std::string& what) {
                std::cerr << "point " << i << " skipped: " << what << "\n";
            };
            if (*v_t1) {
                std::vector<Theorem1Point> grid;
                if (grid_path.empty()) {
                    grid = default_theorem1_grid();
                } else {
                    for (auto& row : read_grid(grid_path)) {
                        if (row.size() < 4) throw std::invalid_argument("theorem1 grid rows need x,y,theta,psi");
                        grid.push_back({std::stod(row[0]), std::stod(row[1]),
                                        parse_theta(join_range(row, 2, row.size() - 1)),
                                        parse_decimal(row.back())});
                    }
                }
                double need = 2;
                for (const auto& pt : grid)
                    need = std::max(need, pt.theta.to_double() * pt.x + 2);
                SpfSieve sieve = sieve_for(std::min<double>(need, static_cast<double>(sieve_cap())));
                auto records = run_theorem1(grid, sieve, on_error);
                std::string path = out_path.empty() ? default_out("theorem1", fmt) : out_path;
                write_and_announce(to_table(records), fmt, path);
            } else if (*v_l21) {
                std::vector<Lemma21Point> grid;
                if (grid_path.empty()) {
                    grid = default_lemma21_grid();
                } else {
                    for (auto& row : read_grid(grid_path)) {
                        if (row.size() != 3) throw std::invalid_argument("lemma21 grid rows need x,y,d");
                        grid.push_back({std::stod(row[0]), std::stod(row[1]), std::stod(row[2])});
                    }
                }
                double need = 2;
                for (const auto& pt : grid) need = std::max(need, pt.x);
                SpfSieve sieve = sieve_for(std::min<double>(need, static_cast<double>(sieve_cap())));
                auto records = run_lemma21(grid, sieve, on_error);
                std::string path = out_path.empty() ? default_out("lemma21", fmt) : out_path;
                write_and_announce(to_table(records), fmt, path);
            } else {
                struct BoundsCfg { double x, y; Theta theta; std::int64_t jm; };
                std::vector<BoundsCfg> cfgs;
                if (grid_path.empty()) {
                    cfgs.push_back({1e5, 500, Theta(QuadIrr(1, 1, 5, 2)), j_max});
                } else {
                    for (auto& row : read_grid(grid_path)) {
                        if (row.size() < 4) throw std::invalid_argument("bounds grid rows need x,y,theta,j_max");
                        cfgs.push_back({std::stod(row[0]), std::stod(row[1]),
                                        parse_theta(join_range(row, 2, row.size() - 1)),
                                        std::stoll(row.back())});
                    }
                }
                double need = 2;
                for (const auto& c : cfgs) need = std::max(need, c.theta.to_double() * c.x + 2);
                SpfSieve sieve = sieve_for(std::min<double>(need, static_cast<double>(sieve_cap())));
                Table t;
                t.header = {"x", "y", "theta", "j", "a", "q", "delta", "skipped", "reason",
                            "alpha", "u", "L", "M", "term_main", "term_tail", "rhs_total",
                            "observed", "ratio"};
                for (const auto& c : cfgs) {
                    auto rows = run_bound_sweep(c.x, c.y, c.theta, c.jm, sieve);
                    for (const auto& r : rows)
                        t.rows.push_back({c.x, c.y, c.theta.str(), r.j, r.a, r.q, r.delta,
                                          std::string(r.skipped ? "true" : "false"), r.reason,
                                          r.report.alpha, r.report.u, r.report.L, r.report.M,
                                          r.report.term_main, r.report.term_tail,
                                          r.report.rhs_total, r.report.observed, r.report.ratio});
                }
                std::string path = out_path.empty() ? default_out("bounds", fmt) : out_path;
                write_and_announce(t, fmt, path);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
