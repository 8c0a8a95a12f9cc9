#include "gnpx/limits.hpp"

#include "gnpx/binomial.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gnpx {

namespace {

void require_npk(std::uint64_t n, double p, std::uint32_t k, std::uint64_t n_min) {
    if (n < n_min) throw std::invalid_argument("n too small");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
    if (k < 1) throw std::invalid_argument("k must be at least 1");
}

// p^k and 1-p^k; the complement via expm1 stays accurate as p -> 1
void pow_pair(double p, std::uint32_t k, double& pk, double& one_minus_pk) {
    const double klogp = static_cast<double>(k) * std::log(p);
    pk = std::exp(klogp);
    one_minus_pk = -std::expm1(klogp);
}

double pow_k(double p, std::uint32_t k) {
    return std::exp(static_cast<double>(k) * std::log(p));
}

double lchoose(std::uint64_t n, std::uint32_t k) {
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
}

} // namespace

NormalizationParams normalization(std::uint64_t n, double p, std::uint32_t k) {
    require_npk(n, p, k, 3);
    const double ln_n = std::log(static_cast<double>(n));
    const double kd = static_cast<double>(k);
    double pk, qk;
    pow_pair(p, k, pk, qk);
    const double correction = 1.0 - std::lgamma(kd + 1.0) / (2.0 * kd * ln_n) -
                              std::log(4.0 * M_PI * kd * ln_n) / (4.0 * kd * ln_n);
    if (!(correction > 0.0))
        throw std::invalid_argument("normalization correction factor not positive");
    NormalizationParams out;
    out.n = n;
    out.p = p;
    out.k = k;
    out.a = static_cast<double>(n) * pk +
            std::sqrt(2.0 * kd * pk * qk * static_cast<double>(n) * ln_n) * correction;
    out.sigma = std::sqrt(pk * qk * static_cast<double>(n) / (2.0 * kd * ln_n));
    return out;
}

NormalizationParams bollobas_normalization(std::uint64_t n, double p) {
    require_npk(n, p, 1, 3);
    const double nd = static_cast<double>(n);
    const double ln_n = std::log(nd);
    const double ln_ln_n = std::log(ln_n);
    NormalizationParams out;
    out.n = n;
    out.p = p;
    out.k = 1;
    out.a = p * nd + std::sqrt(2.0 * p * (1.0 - p) * nd * ln_n) *
                         (1.0 - ln_ln_n / (4.0 * ln_n) -
                          std::log(2.0 * std::sqrt(M_PI)) / (2.0 * ln_n));
    out.sigma = std::sqrt(p * (1.0 - p) * nd / (2.0 * ln_n));
    return out;
}

double threshold_b(const NormalizationParams& np, double y) { return np.a + y * np.sigma; }

double gumbel_limit_cdf(double y, std::uint32_t m) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    // log of sum_{i<m} e^{-yi}/i!, accumulated with log-sum-exp
    double log_sum = 0.0; // i = 0 term
    for (std::uint32_t i = 1; i < m; ++i) {
        const double term = -y * i - std::lgamma(static_cast<double>(i) + 1.0);
        const double hi = log_sum > term ? log_sum : term;
        const double lo = log_sum > term ? term : log_sum;
        log_sum = hi + std::log1p(std::exp(lo - hi));
    }
    return std::exp(-std::exp(-y) + log_sum);
}

double gamma_ell(std::uint64_t n, double p, std::uint32_t ell) {
    require_npk(n, p, ell, 3);
    double pl, ql;
    pow_pair(p, ell, pl, ql);
    const double nd = static_cast<double>(n);
    return nd * pl + std::sqrt(2.0 * static_cast<double>(ell)) *
                         std::sqrt(nd * pl * ql * std::log(nd));
}

ConditionReport check_conditions(std::uint64_t n, double p, std::uint32_t k,
                                 double ratio1_threshold, double ratio2_threshold) {
    require_npk(n, p, k, 16);
    const double ln_n = std::log(static_cast<double>(n));
    ConditionReport out;
    out.ratio1 = pow_k(p, k) * static_cast<double>(n) / (ln_n * ln_n * ln_n);
    out.ratio2 = (1.0 - p) * std::sqrt(ln_n / std::log(ln_n));
    out.ratio1_ok = out.ratio1 >= ratio1_threshold;
    out.ratio2_ok = out.ratio2 >= ratio2_threshold;
    return out;
}

JansonReport lambda_exact(std::uint64_t n, double p, std::uint32_t k, double y) {
    const NormalizationParams np = normalization(n, p, k);
    if (k >= n) throw std::invalid_argument("need k < n");
    JansonReport out;
    out.y = y;
    out.b = threshold_b(np, y);
    out.gumbel_ref = std::exp(-std::exp(-y));
    BinomialParams bp{n - k, pow_k(p, k)};
    const double log_tail = log_binom_tail(bp, out.b);
    if (log_tail == -std::numeric_limits<double>::infinity()) {
        out.lambda = 0.0;
        out.lower_bound = 1.0;
        return out;
    }
    out.lambda = std::exp(lchoose(n, k) + log_tail);
    out.lower_bound = std::exp(-out.lambda);
    return out;
}

} // namespace gnpx
