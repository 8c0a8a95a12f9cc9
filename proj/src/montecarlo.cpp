#include "gnpx/montecarlo.hpp"

#include "gnpx/extremes.hpp"
#include "gnpx/graph.hpp"
#include "gnpx/json_writer.hpp"
#include "gnpx/limits.hpp"
#include "gnpx/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>

namespace gnpx {

std::vector<double> default_y_grid() {
    std::vector<double> g;
    for (int i = 0; i <= 24; ++i) g.push_back(-2.0 + 0.25 * i);
    return g;
}

double ks_distance(const std::vector<double>& empirical,
                   const std::vector<double>& reference) {
    if (empirical.empty() || empirical.size() != reference.size())
        throw std::invalid_argument("ks_distance needs matching nonempty tables");
    double d = 0.0;
    for (std::size_t i = 0; i < empirical.size(); ++i)
        d = std::max(d, std::abs(empirical[i] - reference[i]));
    return d;
}

GumbelFit fit_gumbel(const std::vector<double>& samples) {
    if (samples.size() < 10) throw std::invalid_argument("fit_gumbel needs >= 10 samples");
    for (double s : samples)
        if (!std::isfinite(s)) throw std::invalid_argument("fit_gumbel needs finite samples");
    const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
    if (*mn == *mx) throw std::invalid_argument("fit_gumbel needs nonzero variance");
    double mean = 0.0;
    for (double s : samples) mean += s;
    mean /= static_cast<double>(samples.size());
    double ss = 0.0;
    for (double s : samples) ss += (s - mean) * (s - mean);
    const double var = ss / static_cast<double>(samples.size() - 1);
    if (!(var > 0.0)) throw std::invalid_argument("fit_gumbel needs nonzero variance");
    constexpr double kEulerGamma = 0.5772156649015329;
    GumbelFit fit;
    fit.scale = std::sqrt(6.0 * var) / M_PI;
    fit.location = mean - kEulerGamma * fit.scale;
    return fit;
}

namespace {

void validate(const ExperimentConfig& cfg) {
    if (cfg.n < 3) throw std::invalid_argument("n must be at least 3");
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
    if (cfg.k < 1 || cfg.k >= cfg.n) throw std::invalid_argument("need 1 <= k < n");
    if (cfg.m < 1) throw std::invalid_argument("need m >= 1");
    if (cfg.trials < 1) throw std::invalid_argument("need trials >= 1");
    if (cfg.y_grid.empty()) throw std::invalid_argument("y_grid must be nonempty");
    for (std::size_t i = 1; i < cfg.y_grid.size(); ++i)
        if (!(cfg.y_grid[i] > cfg.y_grid[i - 1]))
            throw std::invalid_argument("y_grid must be strictly increasing");
    if (binomial_coefficient_capped(cfg.n, cfg.k, cfg.m) < cfg.m)
        throw std::invalid_argument("m exceeds the number of k-sets");
}

} // namespace

ExperimentSummary run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    ExperimentSummary s;
    s.config = cfg;
    s.degenerate = cfg.p == 0.0 || cfg.p == 1.0;
    if (s.degenerate) {
        s.a = cfg.p == 0.0 ? 0.0 : static_cast<double>(cfg.n);
        s.sigma = 0.0;
    } else {
        const NormalizationParams np = normalization(cfg.n, cfg.p, cfg.k);
        s.a = np.a;
        s.sigma = np.sigma;
    }

    std::vector<double> gammas; // cutoff per ell in 1..k-1
    for (std::uint32_t ell = 1; ell < cfg.k; ++ell) {
        if (s.degenerate)
            gammas.push_back(cfg.p == 0.0 ? 0.0
                                          : static_cast<double>(cfg.n));
        else
            gammas.push_back(gamma_ell(cfg.n, cfg.p, ell));
    }

    const std::uint32_t n32 = static_cast<std::uint32_t>(cfg.n);
    s.trial_records.resize(cfg.trials);

    std::uint32_t threads = cfg.threads;
    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
        if (threads == 0) threads = 1;
    }
    threads = static_cast<std::uint32_t>(
        std::min<std::uint64_t>(threads, cfg.trials));

    const std::uint64_t progress_step = std::max<std::uint64_t>(1, cfg.trials / 10);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> done{0};

    auto work = [&]() {
        for (std::uint64_t t; (t = next.fetch_add(1)) < cfg.trials;) {
            TrialRecord rec;
            rec.trial_index = t;
            rec.seed_used = mix_seed(cfg.master_seed, t);
            const Graph g = sample_gnp(n32, cfg.p, rec.seed_used);
            TopM top = top_m_common_neighbors(g, cfg.k, cfg.m);
            rec.delta_values = std::move(top.values);
            for (std::uint32_t d : rec.delta_values) {
                double z;
                if (s.degenerate)
                    z = d == s.a ? 0.0
                                 : std::copysign(std::numeric_limits<double>::infinity(),
                                                 d - s.a);
                else
                    z = (d - s.a) / s.sigma;
                rec.normalized.push_back(z);
            }
            for (std::size_t i = 0; i < gammas.size(); ++i)
                rec.gamma_exceedances.push_back(
                    count_ell_exceedances(g, static_cast<std::uint32_t>(i + 1), gammas[i])
                        .count);
            s.trial_records[t] = std::move(rec);
            const std::uint64_t c = done.fetch_add(1) + 1;
            if (c % progress_step == 0 || c == cfg.trials)
                std::fprintf(stderr, "trials %llu/%llu\n",
                             static_cast<unsigned long long>(c),
                             static_cast<unsigned long long>(cfg.trials));
        }
    };

    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::uint32_t i = 0; i < threads; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    // aggregation runs single-threaded in trial-index order, so the summary is
    // a pure function of the config
    const double inv_trials = 1.0 / static_cast<double>(cfg.trials);
    for (double y : cfg.y_grid) {
        std::uint64_t cnt = 0;
        for (const TrialRecord& rec : s.trial_records)
            if (rec.normalized[cfg.m - 1] <= y) ++cnt;
        s.empirical.push_back(static_cast<double>(cnt) * inv_trials);
        s.gumbel.push_back(gumbel_limit_cdf(y, cfg.m));
    }
    if (cfg.m == 1 && !s.degenerate)
        for (double y : cfg.y_grid)
            s.janson.push_back(lambda_exact(cfg.n, cfg.p, cfg.k, y).lower_bound);

    s.ks_vs_gumbel = ks_distance(s.empirical, s.gumbel);
    if (!s.janson.empty()) s.ks_vs_janson = ks_distance(s.empirical, s.janson);

    if (cfg.m == 1 && cfg.trials >= 10) {
        std::vector<double> samples;
        samples.reserve(cfg.trials);
        for (const TrialRecord& rec : s.trial_records) samples.push_back(rec.normalized[0]);
        try {
            s.gumbel_fit = fit_gumbel(samples);
        } catch (const std::invalid_argument&) {
            // zero variance or non-finite samples: leave the fit empty
        }
    }

    std::uint64_t exceeding = 0;
    for (const TrialRecord& rec : s.trial_records)
        for (std::uint64_t c : rec.gamma_exceedances)
            if (c > 0) {
                ++exceeding;
                break;
            }
    s.gamma_exceedance_rate = static_cast<double>(exceeding) * inv_trials;
    return s;
}

std::string summary_to_json(const ExperimentSummary& s) {
    JsonWriter w;
    w.begin_object();
    w.key("config").begin_object();
    w.key("n").value(s.config.n);
    w.key("p").value(s.config.p);
    w.key("k").value(s.config.k);
    w.key("m").value(s.config.m);
    w.key("trials").value(s.config.trials);
    w.key("y_grid").begin_array();
    for (double y : s.config.y_grid) w.value(y);
    w.end_array();
    w.key("master_seed").value(s.config.master_seed);
    w.key("sampler").value(gnp_uses_skip_sampling(s.config.p) ? "geometric_skip"
                                                              : "per_pair");
    w.end_object();
    w.key("a").value(s.a);
    w.key("sigma").value(s.sigma);
    w.key("degenerate").value(s.degenerate);
    w.key("table").begin_object();
    w.key("y").begin_array();
    for (double y : s.config.y_grid) w.value(y);
    w.end_array();
    w.key("empirical").begin_array();
    for (double v : s.empirical) w.value(v);
    w.end_array();
    w.key("gumbel").begin_array();
    for (double v : s.gumbel) w.value(v);
    w.end_array();
    w.key("janson");
    if (s.janson.empty()) {
        w.null();
    } else {
        w.begin_array();
        for (double v : s.janson) w.value(v);
        w.end_array();
    }
    w.end_object();
    w.key("ks_vs_gumbel").value(s.ks_vs_gumbel);
    w.key("ks_vs_janson");
    if (s.ks_vs_janson) w.value(*s.ks_vs_janson); else w.null();
    w.key("gumbel_fit");
    if (s.gumbel_fit) {
        w.begin_object();
        w.key("location").value(s.gumbel_fit->location);
        w.key("scale").value(s.gumbel_fit->scale);
        w.end_object();
    } else {
        w.null();
    }
    w.key("gamma_exceedance_rate").value(s.gamma_exceedance_rate);
    w.end_object();
    std::string out = w.take();
    out += '\n';
    return out;
}

std::string summary_table_to_csv(const ExperimentSummary& s) {
    std::string out = "y,empirical,gumbel,janson\n";
    for (std::size_t i = 0; i < s.config.y_grid.size(); ++i) {
        out += format_double(s.config.y_grid[i]);
        out += ',';
        out += format_double(s.empirical[i]);
        out += ',';
        out += format_double(s.gumbel[i]);
        out += ',';
        if (!s.janson.empty()) out += format_double(s.janson[i]);
        out += '\n';
    }
    return out;
}

std::string trials_to_csv(const ExperimentSummary& s) {
    std::string out = "trial,seed";
    for (std::uint32_t j = 1; j <= s.config.m; ++j)
        out += ",delta_" + std::to_string(j);
    for (std::uint32_t j = 1; j <= s.config.m; ++j)
        out += ",normalized_" + std::to_string(j);
    out += '\n';
    for (const TrialRecord& rec : s.trial_records) {
        out += std::to_string(rec.trial_index);
        out += ',';
        out += std::to_string(rec.seed_used);
        for (std::uint32_t d : rec.delta_values) {
            out += ',';
            out += std::to_string(d);
        }
        for (double z : rec.normalized) {
            out += ',';
            out += format_double(z);
        }
        out += '\n';
    }
    return out;
}

} // namespace gnpx
