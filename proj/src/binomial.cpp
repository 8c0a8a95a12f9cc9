#include "gnpx/binomial.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gnpx {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_params(const BinomialParams& bp) {
    if (!(bp.q > 0.0 && bp.q < 1.0)) throw std::invalid_argument("q must lie in (0,1)");
}

double logaddexp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    double hi = a > b ? a : b;
    double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

} // namespace

double log_binom_pmf(const BinomialParams& bp, std::uint64_t a) {
    require_params(bp);
    if (a > bp.trials) throw std::invalid_argument("a out of range");
    const double n = static_cast<double>(bp.trials);
    const double ad = static_cast<double>(a);
    return std::lgamma(n + 1.0) - std::lgamma(ad + 1.0) - std::lgamma(n - ad + 1.0) +
           ad * std::log(bp.q) + (n - ad) * std::log1p(-bp.q);
}

double log_binom_tail(const BinomialParams& bp, double threshold) {
    require_params(bp);
    if (threshold < 0.0) return 0.0;
    if (threshold >= static_cast<double>(bp.trials)) return kNegInf;
    // first index strictly above the threshold
    const std::uint64_t lo = static_cast<std::uint64_t>(std::floor(threshold)) + 1;
    if (lo > bp.trials) return kNegInf;

    const double mean = static_cast<double>(bp.trials) * bp.q;
    if (static_cast<double>(lo) >= mean) {
        // the upper tail is the small side: sum it directly, tiniest terms first
        double s = kNegInf;
        for (std::uint64_t a = bp.trials;; --a) {
            s = logaddexp(s, log_binom_pmf(bp, a));
            if (a == lo) break;
        }
        return s < 0.0 ? s : 0.0;
    }
    // otherwise sum the small lower side and complement
    double s = kNegInf;
    for (std::uint64_t a = 0; a < lo; ++a) s = logaddexp(s, log_binom_pmf(bp, a));
    if (s >= 0.0) return kNegInf; // lower side rounded up to all of the mass
    return std::log(-std::expm1(s));
}

double binom_tail(const BinomialParams& bp, double threshold) {
    double lt = log_binom_tail(bp, threshold);
    return lt == kNegInf ? 0.0 : std::exp(lt);
}

double demoivre_pmf_approx(const BinomialParams& bp, std::uint64_t a) {
    require_params(bp);
    const double var = static_cast<double>(bp.trials) * bp.q * (1.0 - bp.q);
    const double d = static_cast<double>(a) - static_cast<double>(bp.trials) * bp.q;
    return std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * M_PI * var);
}

double tail_approx(double x, std::uint64_t n_for_log) {
    if (!(x > 0.0)) throw std::invalid_argument("x must be positive");
    if (n_for_log < 2) throw std::invalid_argument("n_for_log must be at least 2");
    const double ln_n = std::log(static_cast<double>(n_for_log));
    return std::exp(-x * x * ln_n / 2.0) / (x * std::sqrt(2.0 * M_PI * ln_n));
}

TailApproxConditions tail_approx_conditions(const BinomialParams& bp, double x,
                                            std::uint64_t n_for_log) {
    require_params(bp);
    if (!(x > 0.0)) throw std::invalid_argument("x must be positive");
    if (n_for_log < 2) throw std::invalid_argument("n_for_log must be at least 2");
    const double ln_n = std::log(static_cast<double>(n_for_log));
    const double var = static_cast<double>(bp.trials) * bp.q * (1.0 - bp.q);
    return {x * std::sqrt(ln_n), x * x * x * std::sqrt(ln_n * ln_n * ln_n / var)};
}

double chernoff_tail_bound(const BinomialParams& bp, double t) {
    require_params(bp);
    if (t < 0.0) throw std::invalid_argument("t must be nonnegative");
    const double nq = static_cast<double>(bp.trials) * bp.q;
    return 2.0 * std::exp(-t * t / (2.0 * (nq + t / 3.0)));
}

double normal_cdf(double t) { return 0.5 * std::erfc(-t * M_SQRT1_2); }

double mills_tail(double t) {
    if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
    return std::exp(-t * t / 2.0) / (t * std::sqrt(2.0 * M_PI));
}

TailComparison compare_tail_approx(const BinomialParams& bp, double x,
                                   std::uint64_t n_for_log) {
    require_params(bp);
    const double ln_n = std::log(static_cast<double>(n_for_log));
    const double var = static_cast<double>(bp.trials) * bp.q * (1.0 - bp.q);
    const double threshold = static_cast<double>(bp.trials) * bp.q + x * std::sqrt(var * ln_n);
    TailComparison out;
    out.exact = binom_tail(bp, threshold);
    out.approx = tail_approx(x, n_for_log);
    if (out.exact > 0.0) {
        out.rel_error = std::abs(out.approx - out.exact) / out.exact;
        out.rel_error_defined = true;
    }
    return out;
}

} // namespace gnpx
