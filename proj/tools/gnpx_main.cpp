#include "CLI11.hpp"
#include "json.hpp"

#include "gnpx/binomial.hpp"
#include "gnpx/extremes.hpp"
#include "gnpx/graph.hpp"
#include "gnpx/json_writer.hpp"
#include "gnpx/limits.hpp"
#include "gnpx/montecarlo.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using gnpx::JsonWriter;

struct GraphSource {
    std::string in_path;
    std::uint32_t n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
};

void add_graph_source(CLI::App* cmd, GraphSource& src) {
    auto* in = cmd->add_option("--in", src.in_path, "read graph from an edge-list file");
    auto* n = cmd->add_option("--n", src.n, "vertex count for sampling");
    cmd->add_option("--p", src.p, "edge probability")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", src.seed, "sampler seed");
    in->excludes(n);
    n->excludes(in);
}

gnpx::Graph resolve_graph(const GraphSource& src) {
    if (!src.in_path.empty()) return gnpx::load_edge_list_file(src.in_path);
    if (src.n == 0)
        throw std::invalid_argument("need either --in or --n (with --p, --seed)");
    return gnpx::sample_gnp(src.n, src.p, src.seed);
}

void echo_graph_source(JsonWriter& w, const GraphSource& src) {
    w.key("source").begin_object();
    if (!src.in_path.empty()) {
        w.key("in").value(src.in_path);
    } else {
        w.key("n").value(src.n);
        w.key("p").value(src.p);
        w.key("seed").value(src.seed);
        w.key("sampler").value(gnpx::gnp_uses_skip_sampling(src.p) ? "geometric_skip"
                                                                   : "per_pair");
    }
    w.end_object();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

int run_sample(const GraphSource& src, const std::string& out_path) {
    if (src.in_path.empty() && src.n == 0)
        throw std::invalid_argument("sample needs --n");
    gnpx::Graph g = gnpx::sample_gnp(src.n, src.p, src.seed);
    gnpx::save_edge_list_file(g, out_path);
    JsonWriter w;
    w.begin_object();
    w.key("command").value("sample");
    echo_graph_source(w, src);
    w.key("out").value(out_path);
    w.key("edges").value(g.edge_count());
    w.end_object();
    std::cout << w.str() << '\n';
    return 0;
}

int run_max(const GraphSource& src, std::uint32_t k, std::uint32_t m) {
    gnpx::Graph g = resolve_graph(src);
    gnpx::TopM top = gnpx::top_m_common_neighbors(g, k, m);
    JsonWriter w;
    w.begin_object();
    w.key("command").value("max");
    echo_graph_source(w, src);
    w.key("k").value(k);
    w.key("m").value(m);
    w.key("values").begin_array();
    for (std::uint32_t v : top.values) w.value(v);
    w.end_array();
    w.key("witnesses").begin_array();
    for (const auto& wit : top.witnesses) {
        w.begin_array();
        for (std::uint32_t v : wit) w.value(v);
        w.end_array();
    }
    w.end_array();
    w.key("truncated").value(top.truncated);
    w.end_object();
    std::cout << w.str() << '\n';
    return 0;
}

int run_exceed(const GraphSource& src, std::uint32_t k, double threshold) {
    gnpx::Graph g = resolve_graph(src);
    gnpx::ExceedanceCount c = gnpx::count_exceedances(g, k, threshold);
    JsonWriter w;
    w.begin_object();
    w.key("command").value("exceed");
    echo_graph_source(w, src);
    w.key("k").value(c.k);
    w.key("threshold").value(c.threshold);
    w.key("count").value(c.count);
    w.end_object();
    std::cout << w.str() << '\n';
    return 0;
}

int run_limits(std::uint64_t n, double p, std::uint32_t k, double y) {
    const gnpx::NormalizationParams np = gnpx::normalization(n, p, k);
    const gnpx::JansonReport jr = gnpx::lambda_exact(n, p, k, y);
    JsonWriter w;
    w.begin_object();
    w.key("command").value("limits");
    w.key("normalization").begin_object();
    w.key("n").value(np.n);
    w.key("p").value(np.p);
    w.key("k").value(np.k);
    w.key("a").value(np.a);
    w.key("sigma").value(np.sigma);
    w.end_object();
    w.key("conditions");
    if (n >= 16) {
        const gnpx::ConditionReport cr = gnpx::check_conditions(n, p, k);
        w.begin_object();
        w.key("ratio1").value(cr.ratio1);
        w.key("ratio2").value(cr.ratio2);
        w.key("ratio1_ok").value(cr.ratio1_ok);
        w.key("ratio2_ok").value(cr.ratio2_ok);
        w.end_object();
    } else {
        w.null();
    }
    w.key("janson").begin_object();
    w.key("y").value(jr.y);
    w.key("b").value(jr.b);
    w.key("lambda").value(jr.lambda);
    w.key("lower_bound").value(jr.lower_bound);
    w.key("gumbel_ref").value(jr.gumbel_ref);
    w.end_object();
    w.end_object();
    std::cout << w.str() << '\n';
    return 0;
}

int run_tail(std::uint64_t trials, double q, std::optional<double> threshold,
             std::optional<double> x, std::optional<std::uint64_t> nlog) {
    if (!threshold && !x)
        throw std::invalid_argument("tail needs --threshold or --x");
    const std::uint64_t n_for_log = nlog ? *nlog : trials;
    const gnpx::BinomialParams bp{trials, q};
    const double mean = static_cast<double>(trials) * q;
    const double spread =
        std::sqrt(static_cast<double>(trials) * q * (1.0 - q) *
                  std::log(static_cast<double>(n_for_log)));
    double thr;
    double xval = 0.0;
    bool have_x = false;
    if (x) {
        xval = *x;
        have_x = true;
        thr = mean + xval * spread;
    } else {
        thr = *threshold;
        xval = (thr - mean) / spread;
        have_x = xval > 0.0;
    }
    const double exact = gnpx::binom_tail(bp, thr);
    const double chernoff =
        gnpx::chernoff_tail_bound(bp, std::abs(thr - mean));
    JsonWriter w;
    w.begin_object();
    w.key("command").value("tail");
    w.key("trials").value(trials);
    w.key("q").value(q);
    w.key("threshold").value(thr);
    w.key("nlog").value(n_for_log);
    w.key("x");
    if (have_x) w.value(xval); else w.null();
    w.key("exact").value(exact);
    w.key("approx");
    double approx = 0.0;
    bool have_approx = false;
    if (have_x && xval > 0.0) {
        approx = gnpx::tail_approx(xval, n_for_log);
        have_approx = true;
        w.value(approx);
    } else {
        w.null();
    }
    w.key("chernoff").value(chernoff);
    w.key("rel_error");
    if (have_approx && exact > 0.0) w.value(std::abs(approx - exact) / exact);
    else w.null();
    w.key("conditions");
    if (have_approx) {
        const gnpx::TailApproxConditions tc =
            gnpx::tail_approx_conditions(bp, xval, n_for_log);
        w.begin_object();
        w.key("t").value(tc.t);
        w.key("eps").value(tc.eps);
        w.end_object();
    } else {
        w.null();
    }
    w.end_object();
    std::cout << w.str() << '\n';
    return 0;
}

std::uint32_t parse_threads_word(const std::string& word) {
    if (word == "auto") return 0;
    std::size_t pos = 0;
    unsigned long v = std::stoul(word, &pos);
    if (pos != word.size()) throw std::invalid_argument("bad thread count: " + word);
    return static_cast<std::uint32_t>(v);
}

gnpx::ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("bad config JSON: " + std::string(e.what()));
    }
    gnpx::ExperimentConfig cfg;
    cfg.y_grid = gnpx::default_y_grid();
    try {
        for (auto& [key, val] : j.items()) {
            if (key == "n") cfg.n = val.get<std::uint64_t>();
            else if (key == "p") cfg.p = val.get<double>();
            else if (key == "k") cfg.k = val.get<std::uint32_t>();
            else if (key == "m") cfg.m = val.get<std::uint32_t>();
            else if (key == "trials") cfg.trials = val.get<std::uint64_t>();
            else if (key == "master_seed") cfg.master_seed = val.get<std::uint64_t>();
            else if (key == "y_grid") cfg.y_grid = val.get<std::vector<double>>();
            else if (key == "threads")
                cfg.threads = val.is_string() ? parse_threads_word(val.get<std::string>())
                                              : val.get<std::uint32_t>();
            else throw std::invalid_argument("unknown config key: " + key);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("bad config value: " + std::string(e.what()));
    }
    return cfg;
}

int run_experiment_cmd(const gnpx::ExperimentConfig& cfg, const std::string& out_path,
                       const std::string& csv_path, const std::string& trials_path) {
    const gnpx::ExperimentSummary summary = gnpx::run_experiment(cfg);
    const std::string json = gnpx::summary_to_json(summary);
    if (out_path.empty()) std::cout << json;
    else write_file(out_path, json);
    if (!csv_path.empty()) write_file(csv_path, gnpx::summary_table_to_csv(summary));
    if (!trials_path.empty()) write_file(trials_path, gnpx::trials_to_csv(summary));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"extreme common-neighbor statistics of G(n,p) graphs"};
    app.require_subcommand(1);

    GraphSource sample_src;
    std::string sample_out;
    auto* sample = app.add_subcommand("sample", "sample a graph and write its edge list");
    sample->add_option("--n", sample_src.n, "vertex count")->required();
    sample->add_option("--p", sample_src.p, "edge probability")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    sample->add_option("--seed", sample_src.seed, "sampler seed");
    sample->add_option("--out", sample_out, "output path")->required();

    GraphSource max_src;
    std::uint32_t max_k = 1, max_m = 1;
    auto* maxc = app.add_subcommand("max", "top-m common-neighbor counts over k-sets");
    add_graph_source(maxc, max_src);
    maxc->add_option("--k", max_k, "subset size")->required();
    maxc->add_option("--m", max_m, "number of order statistics");

    GraphSource exc_src;
    std::uint32_t exc_k = 1;
    double exc_threshold = 0.0;
    auto* exceed = app.add_subcommand("exceed", "count k-sets above a threshold");
    add_graph_source(exceed, exc_src);
    exceed->add_option("--k", exc_k, "subset size")->required();
    exceed->add_option("--threshold", exc_threshold, "strict cutoff")->required();

    std::uint64_t lim_n = 0;
    double lim_p = 0.5, lim_y = 0.0;
    std::uint32_t lim_k = 1;
    auto* limits = app.add_subcommand("limits", "normalization constants and finite-n references");
    limits->add_option("--n", lim_n, "vertex count")->required();
    limits->add_option("--p", lim_p, "edge probability")->required();
    limits->add_option("--k", lim_k, "subset size");
    limits->add_option("--y", lim_y, "evaluation point");

    std::uint64_t tail_trials = 0;
    double tail_q = 0.5;
    std::optional<double> tail_threshold, tail_x;
    std::optional<std::uint64_t> tail_nlog;
    auto* tail = app.add_subcommand("tail", "exact binomial tail vs asymptotic approximation");
    tail->add_option("--trials", tail_trials, "number of Bernoulli trials")->required();
    tail->add_option("--q", tail_q, "success probability")->required();
    auto* thr_opt = tail->add_option("--threshold", tail_threshold, "strict cutoff");
    auto* x_opt = tail->add_option("--x", tail_x, "threshold offset in the paper parametrization");
    tail->add_option("--nlog", tail_nlog, "n used inside the logarithms (default: trials)");
    thr_opt->excludes(x_opt);
    x_opt->excludes(thr_opt);

    gnpx::ExperimentConfig flags_cfg;
    std::string config_path, exp_out, exp_csv, exp_trials_csv, threads_word;
    double ymin = -2.0, ymax = 4.0, ystep = 0.25;
    auto* experiment = app.add_subcommand("experiment", "Monte Carlo convergence experiment");
    experiment->add_option("--config", config_path, "JSON config file");
    auto* exp_n = experiment->add_option("--n", flags_cfg.n, "vertex count");
    auto* exp_p = experiment->add_option("--p", flags_cfg.p, "edge probability");
    auto* exp_k = experiment->add_option("--k", flags_cfg.k, "subset size");
    auto* exp_m = experiment->add_option("--m", flags_cfg.m, "order statistic");
    auto* exp_t = experiment->add_option("--trials", flags_cfg.trials, "trial count");
    auto* exp_seed = experiment->add_option("--master-seed", flags_cfg.master_seed, "master seed");
    auto* exp_threads = experiment->add_option("--threads", threads_word, "worker count or: auto");
    auto* exp_ymin = experiment->add_option("--ymin", ymin, "grid start");
    auto* exp_ymax = experiment->add_option("--ymax", ymax, "grid end");
    auto* exp_ystep = experiment->add_option("--ystep", ystep, "grid step");
    experiment->add_option("--out", exp_out, "summary JSON path (default: stdout)");
    experiment->add_option("--csv", exp_csv, "CDF table CSV path");
    experiment->add_option("--trials-csv", exp_trials_csv, "per-trial CSV path");

    try {
        app.parse(argc, argv);

        if (sample->parsed()) return run_sample(sample_src, sample_out);
        if (maxc->parsed()) return run_max(max_src, max_k, max_m);
        if (exceed->parsed()) return run_exceed(exc_src, exc_k, exc_threshold);
        if (limits->parsed()) return run_limits(lim_n, lim_p, lim_k, lim_y);
        if (tail->parsed())
            return run_tail(tail_trials, tail_q, tail_threshold, tail_x, tail_nlog);
        if (experiment->parsed()) {
            gnpx::ExperimentConfig cfg;
            if (!config_path.empty()) {
                cfg = load_config_file(config_path);
            } else {
                cfg.p = 0.5;
                cfg.trials = 100;
                cfg.y_grid = gnpx::default_y_grid();
            }
            if (exp_n->count()) cfg.n = flags_cfg.n;
            if (exp_p->count()) cfg.p = flags_cfg.p;
            if (exp_k->count()) cfg.k = flags_cfg.k;
            if (exp_m->count()) cfg.m = flags_cfg.m;
            if (exp_t->count()) cfg.trials = flags_cfg.trials;
            if (exp_seed->count()) cfg.master_seed = flags_cfg.master_seed;
            if (exp_ymin->count() || exp_ymax->count() || exp_ystep->count()) {
                if (!(ystep > 0.0)) throw std::invalid_argument("--ystep must be positive");
                cfg.y_grid.clear();
                for (int i = 0;; ++i) {
                    const double y = ymin + ystep * i;
                    if (y > ymax + ystep * 1e-9) break;
                    cfg.y_grid.push_back(y);
                }
            }
            if (exp_threads->count()) {
                cfg.threads = parse_threads_word(threads_word);
            } else if (const char* env = std::getenv("GNPX_THREADS")) {
                cfg.threads = parse_threads_word(env);
            }
            return run_experiment_cmd(cfg, exp_out, exp_csv, exp_trials_csv);
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
