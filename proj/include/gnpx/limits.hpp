#pragma once

#include <cstdint>

namespace gnpx {

// Centering and scaling constants making (Delta^m - a)/sigma converge to the
// extreme-value limit.
struct NormalizationParams {
    std::uint64_t n = 0;
    double p = 0.0;
    std::uint32_t k = 0;
    double a = 0.0;     // a_{k;n}
    double sigma = 0.0; // sigma_{k;n} > 0
};

// Diagnostics for the regime hypotheses: p^k n / ln^3 n should be large,
// (1-p) sqrt(ln n / ln ln n) should be large. Flags are advisory only.
struct ConditionReport {
    double ratio1 = 0.0;
    double ratio2 = 0.0;
    bool ratio1_ok = false;
    bool ratio2_ok = false;
};

inline constexpr double kDefaultRatio1Threshold = 10.0;
inline constexpr double kDefaultRatio2Threshold = 3.0;

// lambda = C(n,k) P(Bin(n-k, p^k) > b), the expected number of exceeding
// k-sets, plus exp(-lambda): the finite-n lower bound on P(no exceedance)
// that also approximates it (lambda -> e^{-y}).
struct JansonReport {
    double y = 0.0;
    double b = 0.0;          // a + y sigma
    double lambda = 0.0;
    double lower_bound = 0.0; // exp(-lambda)
    double gumbel_ref = 0.0;  // e^{-e^{-y}}
};

// n >= 3, p in (0,1), k >= 1. Throws if the bracketed correction factor fails
// to be positive (only possible for degenerate k >> ln-scale of n).
NormalizationParams normalization(std::uint64_t n, double p, std::uint32_t k);

// The degree-sequence constants; equals normalization(n, p, 1) analytically,
// kept separate so the identity is a cross-check rather than a definition.
NormalizationParams bollobas_normalization(std::uint64_t n, double p);

double threshold_b(const NormalizationParams& np, double y);

// e^{-e^{-y}} sum_{i<m} e^{-yi}/i!, evaluated in log space.
double gumbel_limit_cdf(double y, std::uint32_t m);

// n p^ell + sqrt(2 ell) sqrt(n p^ell (1-p^ell) ln n)
double gamma_ell(std::uint64_t n, double p, std::uint32_t ell);

ConditionReport check_conditions(std::uint64_t n, double p, std::uint32_t k,
                                 double ratio1_threshold = kDefaultRatio1Threshold,
                                 double ratio2_threshold = kDefaultRatio2Threshold);

JansonReport lambda_exact(std::uint64_t n, double p, std::uint32_t k, double y);

} // namespace gnpx
