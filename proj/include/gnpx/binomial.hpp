#pragma once

#include <cstdint>

namespace gnpx {

// Bin(trials, q) with q strictly inside (0,1).
struct BinomialParams {
    std::uint64_t trials = 0;
    double q = 0.0;
};

struct TailComparison {
    double exact = 0.0;
    double approx = 0.0;
    double rel_error = 0.0; // |approx - exact| / exact
    bool rel_error_defined = false; // false when exact == 0
};

// ln P(xi = a) via log-gamma.
double log_binom_pmf(const BinomialParams& bp, std::uint64_t a);

// ln P(xi > threshold); -inf for an empty tail. Summed from the extreme end
// inward in log-space, complemented through the lower tail when that side is
// shorter, so no catastrophic cancellation either way.
double log_binom_tail(const BinomialParams& bp, double threshold);

// P(xi > threshold), strict; 0 when threshold >= trials, 1 when threshold < 0.
double binom_tail(const BinomialParams& bp, double threshold);

// Gaussian pointwise pmf approximation (local limit form).
double demoivre_pmf_approx(const BinomialParams& bp, std::uint64_t a);

// exp(-x^2 ln n / 2) / (x sqrt(2 pi ln n)): the upper-tail asymptotic at
// threshold nq + x sqrt(n ln n q(1-q)); by symmetry also the lower tail at the
// mirrored threshold. Evaluated unconditionally; see tail_approx_conditions.
double tail_approx(double x, std::uint64_t n_for_log);

// diagnostics for the asymptotic's hypotheses: t = x sqrt(ln n) should be
// large, eps = x^3 sqrt(ln^3 n / (n q (1-q))) should be small
struct TailApproxConditions {
    double t = 0.0;
    double eps = 0.0;
};
TailApproxConditions tail_approx_conditions(const BinomialParams& bp, double x,
                                            std::uint64_t n_for_log);

// 2 exp(-t^2 / (2 (trials q + t/3))): upper bound on P(|xi - trials q| > t).
double chernoff_tail_bound(const BinomialParams& bp, double t);

// Phi via erfc; absolute error well under 1e-12
double normal_cdf(double t);

// e^{-t^2/2} / (t sqrt(2 pi)), t > 0: the Mills-ratio tail equivalent
double mills_tail(double t);

// exact vs tail_approx at threshold trials*q + x sqrt(trials ln(n_for_log) q(1-q))
TailComparison compare_tail_approx(const BinomialParams& bp, double x,
                                   std::uint64_t n_for_log);

} // namespace gnpx
