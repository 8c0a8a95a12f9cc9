// Acceptance harness: one criterion per positive argv[1], all when absent.
// Prints indented evidence lines, then exactly one CRITERION <i> PASS/FAIL line.

#include "gnpx/binomial.hpp"
#include "gnpx/extremes.hpp"
#include "gnpx/graph.hpp"
#include "gnpx/limits.hpp"
#include "gnpx/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Reporter {
    explicit Reporter(int c) : criterion(c) {}

    int criterion;
    bool ok = true;
    std::string failures;

    void detail(const char* fmt, ...) {
        std::printf("  [%d] ", criterion);
        va_list ap;
        va_start(ap, fmt);
        std::vprintf(fmt, ap);
        va_end(ap);
        std::printf("\n");
    }

    void check(bool pass, const std::string& label, const std::string& evidence) {
        detail("%s: %s (%s)", label.c_str(), pass ? "ok" : "FAILED", evidence.c_str());
        if (!pass) {
            if (!failures.empty()) failures += "; ";
            failures += label;
            ok = false;
        }
    }

    bool finish(Clock::time_point t0, double budget_s) {
        const double elapsed = seconds_since(t0);
        if (budget_s > 0.0) {
            char ev[64];
            std::snprintf(ev, sizeof ev, "%.2f s of %.0f s", elapsed, budget_s);
            check(elapsed < budget_s, "runtime within budget", ev);
        } else {
            detail("runtime %.2f s", elapsed);
        }
        if (ok) std::printf("CRITERION %d PASS\n", criterion);
        else std::printf("CRITERION %d FAIL: %s\n", criterion, failures.c_str());
        std::fflush(stdout);
        return ok;
    }
};

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// 1. pruned search agrees with exhaustive enumeration on 200 random configs
bool criterion1() {
    Reporter r(1);
    const auto t0 = Clock::now();
    std::mt19937 cfg_rng(424242);
    const double ps[] = {0.2, 0.5, 0.8};
    std::size_t agreed = 0;
    const std::size_t total = 200;
    for (std::size_t i = 0; i < total; ++i) {
        const std::uint32_t n = 4 + cfg_rng() % 9; // 4..12
        const double p = ps[cfg_rng() % 3];
        const std::uint32_t k = 1 + cfg_rng() % 3;
        const std::uint32_t m = 1 + cfg_rng() % 3;
        const std::uint64_t seed = (static_cast<std::uint64_t>(cfg_rng()) << 32) | cfg_rng();
        const gnpx::Graph g = gnpx::sample_gnp(n, p, seed);
        const gnpx::TopM fast = gnpx::top_m_common_neighbors(g, k, m);
        const gnpx::TopM slow = gnpx::brute_force_top_m(g, k, m);
        if (fast.values == slow.values && fast.witnesses == slow.witnesses) {
            ++agreed;
        } else {
            r.detail("mismatch at config %zu: n=%u p=%.1f k=%u m=%u seed=%llu", i, n, p, k,
                     m, static_cast<unsigned long long>(seed));
        }
    }
    r.check(agreed == total, "search equals brute force on values and witnesses",
            fmt("%zu/%zu configs agree", agreed, total));
    return r.finish(t0, 10.0);
}

// 2. k=1 normalization reproduces the degree-sequence constants
bool criterion2() {
    Reporter r(2);
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (std::uint64_t n : {100ULL, 1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
        for (double p : {0.1, 0.5, 0.9}) {
            const gnpx::NormalizationParams lhs = gnpx::normalization(n, p, 1);
            const gnpx::NormalizationParams rhs = gnpx::bollobas_normalization(n, p);
            worst = std::max(worst, std::abs(lhs.a - rhs.a) / std::abs(rhs.a));
            worst = std::max(worst, std::abs(lhs.sigma - rhs.sigma) / std::abs(rhs.sigma));
        }
    }
    r.check(worst <= 1e-12, "identity holds to 1e-12 over 15 (n, p) pairs",
            fmt("worst relative error %.3g", worst));
    return r.finish(t0, 0.0);
}

// 3. asymptotic tail formula vs exact binomial tail; Chernoff domination
bool criterion3() {
    Reporter r(3);
    const auto t0 = Clock::now();
    const double q = 0.5;
    const double x = std::sqrt(2.0);
    std::vector<double> rel;
    for (std::uint64_t n : {10000ULL, 100000ULL, 1000000ULL}) {
        const gnpx::BinomialParams bp{n, q};
        const double mean = static_cast<double>(n) * q;
        const double thr =
            mean + x * std::sqrt(static_cast<double>(n) * std::log(static_cast<double>(n)) *
                                 q * (1.0 - q));
        const double exact = gnpx::binom_tail(bp, thr);
        const double approx = gnpx::tail_approx(x, n);
        rel.push_back(std::abs(approx - exact) / exact);
        r.detail("n=%llu: exact %.6e approx %.6e rel error %.6f",
                 static_cast<unsigned long long>(n), exact, approx, rel.back());
    }
    r.check(rel[2] < 0.2, "relative error below 0.2 at n=10^6", fmt("%.6f", rel[2]));
    r.check(rel[0] > rel[1] && rel[1] > rel[2],
            "relative error strictly decreasing over n in {10^4, 10^5, 10^6}",
            fmt("%.6f -> %.6f -> %.6f", rel[0], rel[1], rel[2]));

    const gnpx::BinomialParams small{100, 0.5};
    bool dominated = true;
    double worst_ratio = 0.0;
    for (int t = 5; t <= 50; t += 5) {
        const double upper = gnpx::binom_tail(small, 50.0 + t - 0.5);
        const double lower = 1.0 - gnpx::binom_tail(small, 50.0 - t);
        const double two_sided = upper + lower;
        const double bound = gnpx::chernoff_tail_bound(small, static_cast<double>(t));
        if (bound < two_sided) dominated = false;
        if (two_sided > 0.0) worst_ratio = std::max(worst_ratio, two_sided / bound);
    }
    r.check(dominated, "Chernoff bound dominates the exact two-sided tail at 10 t values",
            fmt("max exact/bound ratio %.4f", worst_ratio));
    return r.finish(t0, 30.0);
}

// 4. expected exceedance count approaches e^{-y}
bool criterion4() {
    Reporter r(4);
    const auto t0 = Clock::now();
    for (double y : {-1.0, 0.0, 1.0}) {
        const double target = std::exp(-y);
        std::vector<double> gap;
        for (std::uint64_t n : {1000ULL, 10000ULL, 100000ULL}) {
            const double lambda = gnpx::lambda_exact(n, 0.3, 2, y).lambda;
            gap.push_back(std::abs(lambda - target));
            r.detail("y=%+.0f n=%llu: lambda %.6f target %.6f gap %.6f", y,
                     static_cast<unsigned long long>(n), lambda, target, gap.back());
        }
        r.check(gap[0] > gap[1] && gap[1] > gap[2],
                fmt("|lambda - e^-y| decreasing over n at y=%+.0f", y),
                fmt("%.4f -> %.4f -> %.4f", gap[0], gap[1], gap[2]));
        r.check(gap[2] < 0.15, fmt("|lambda - e^-y| below 0.15 at n=10^5, y=%+.0f", y),
                fmt("%.4f", gap[2]));
    }
    return r.finish(t0, 60.0);
}

// 5. distributional agreement at n=1000 against both references
bool criterion5() {
    Reporter r(5);
    const auto t0 = Clock::now();
    gnpx::ExperimentConfig cfg;
    cfg.n = 1000;
    cfg.p = 0.3;
    cfg.k = 2;
    cfg.m = 1;
    cfg.trials = 1000;
    cfg.y_grid = gnpx::default_y_grid();
    cfg.master_seed = 1;
    cfg.threads = 0;
    const gnpx::ExperimentSummary one = gnpx::run_experiment(cfg);
    r.check(one.ks_vs_janson.has_value() && *one.ks_vs_janson <= 0.10,
            "ks_vs_janson <= 0.10 (m=1)",
            one.ks_vs_janson ? fmt("%.4f", *one.ks_vs_janson) : "missing");
    r.check(one.ks_vs_gumbel <= 0.20, "ks_vs_gumbel <= 0.20 (m=1)",
            fmt("%.4f", one.ks_vs_gumbel));
    const bool have_fit = one.gumbel_fit.has_value();
    const double loc = have_fit ? one.gumbel_fit->location : 0.0;
    const double scale = have_fit ? one.gumbel_fit->scale : 0.0;
    r.check(have_fit && loc >= -0.5 && loc <= 0.5, "fitted location in [-0.5, 0.5]",
            have_fit ? fmt("%.4f", loc) : "missing");
    r.check(have_fit && scale >= 0.7 && scale <= 1.3, "fitted scale in [0.7, 1.3]",
            have_fit ? fmt("%.4f", scale) : "missing");

    cfg.m = 2;
    const gnpx::ExperimentSummary two = gnpx::run_experiment(cfg);
    r.check(two.ks_vs_gumbel <= 0.25, "ks_vs_gumbel <= 0.25 (m=2)",
            fmt("%.4f", two.ks_vs_gumbel));
    return r.finish(t0, 0.0);
}

// 6. second-order exceedances above Gamma_1 thin out as n grows
bool criterion6() {
    Reporter r(6);
    const auto t0 = Clock::now();
    std::vector<double> rate;
    for (std::uint64_t n : {200ULL, 500ULL, 1000ULL}) {
        gnpx::ExperimentConfig cfg;
        cfg.n = n;
        cfg.p = 0.5;
        cfg.k = 2;
        cfg.m = 1;
        cfg.trials = 200;
        cfg.y_grid = gnpx::default_y_grid();
        cfg.master_seed = 1;
        cfg.threads = 0;
        const gnpx::ExperimentSummary s = gnpx::run_experiment(cfg);
        rate.push_back(s.gamma_exceedance_rate);
        r.detail("n=%llu: fraction of trials with a vertex above Gamma_1 = %.4f",
                 static_cast<unsigned long long>(n), rate.back());
    }
    r.check(rate[0] > rate[1] && rate[1] > rate[2],
            "exceedance fraction decreasing over n in {200, 500, 1000}",
            fmt("%.4f -> %.4f -> %.4f", rate[0], rate[1], rate[2]));
    r.check(rate[2] <= 0.25, "exceedance fraction <= 0.25 at n=1000", fmt("%.4f", rate[2]));
    return r.finish(t0, 120.0);
}

// 7. summaries are bit-identical across repeats and thread counts
bool criterion7() {
    Reporter r(7);
    const auto t0 = Clock::now();
    gnpx::ExperimentConfig cfg;
    cfg.n = 300;
    cfg.p = 0.4;
    cfg.k = 2;
    cfg.m = 2;
    cfg.trials = 40;
    cfg.y_grid = gnpx::default_y_grid();
    cfg.master_seed = 3;
    cfg.threads = 1;
    const std::string first = gnpx::summary_to_json(gnpx::run_experiment(cfg));
    const std::string second = gnpx::summary_to_json(gnpx::run_experiment(cfg));
    cfg.threads = 4;
    const std::string threaded = gnpx::summary_to_json(gnpx::run_experiment(cfg));
    r.check(first == second, "two identical runs produce identical summaries",
            fmt("%zu bytes each", first.size()));
    r.check(first == threaded, "threads=1 and threads=4 produce identical summaries",
            first == threaded ? "byte-equal" : "diverged");
    return r.finish(t0, 60.0);
}

} // namespace

int main(int argc, char** argv) {
    int which = 0;
    if (argc > 1) {
        which = std::atoi(argv[1]);
        if (which < 1 || which > 7) {
            std::fprintf(stderr, "usage: %s [criterion 1..7]\n", argv[0]);
            return 2;
        }
    }
    bool (*const criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                                  criterion5, criterion6, criterion7};
    bool all_ok = true;
    for (int i = 1; i <= 7; ++i) {
        if (which != 0 && which != i) continue;
        if (!criteria[i - 1]()) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
