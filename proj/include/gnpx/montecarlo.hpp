#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gnpx {

// threads = 0 means auto (hardware concurrency)
struct ExperimentConfig {
    std::uint64_t n = 0;
    double p = 0.0;
    std::uint32_t k = 1;
    std::uint32_t m = 1;
    std::uint64_t trials = 0;
    std::vector<double> y_grid;
    std::uint64_t master_seed = 0;
    std::uint32_t threads = 0;
};

std::vector<double> default_y_grid(); // -2 .. 4 step 0.25

struct TrialRecord {
    std::uint64_t trial_index = 0;
    std::uint64_t seed_used = 0;
    std::vector<std::uint32_t> delta_values; // Delta^1..Delta^m, non-increasing
    std::vector<double> normalized;          // (delta - a) / sigma
    std::vector<std::uint64_t> gamma_exceedances; // per ell in 1..k-1
};

struct GumbelFit {
    double location = 0.0;
    double scale = 0.0;
};

struct ExperimentSummary {
    ExperimentConfig config; // echoed; threads excluded from serialized form
    double a = 0.0;
    double sigma = 0.0;
    bool degenerate = false; // p in {0,1}: sigma = 0, references skipped
    std::vector<double> empirical; // P(normalized Delta^m <= y) per grid point
    std::vector<double> gumbel;    // limit CDF per grid point
    std::vector<double> janson;    // exp(-lambda(y)); empty unless m = 1 and 0<p<1
    double ks_vs_gumbel = 0.0;
    std::optional<double> ks_vs_janson;
    std::optional<GumbelFit> gumbel_fit; // m = 1, >= 10 trials, nonzero variance
    double gamma_exceedance_rate = 0.0;  // fraction of trials with any exceedance
    std::vector<TrialRecord> trial_records;
};

ExperimentSummary run_experiment(const ExperimentConfig& cfg);

// max over the grid of |empirical - reference|
double ks_distance(const std::vector<double>& empirical,
                   const std::vector<double>& reference);

// method of moments: scale = sqrt(6) sd / pi, location = mean - gamma_E scale;
// needs >= 10 samples with nonzero variance
GumbelFit fit_gumbel(const std::vector<double>& samples);

// serialization; byte-deterministic for a given summary
std::string summary_to_json(const ExperimentSummary& s);
std::string summary_table_to_csv(const ExperimentSummary& s); // y,empirical,gumbel,janson
std::string trials_to_csv(const ExperimentSummary& s);

} // namespace gnpx
