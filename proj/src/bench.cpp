#include "binclust/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace binclust {

std::string to_string(Method m) {
    switch (m) {
        case Method::SA: return "SA";
        case Method::TA: return "TA";
        case Method::TS: return "TS";
        case Method::GA: return "GA";
        case Method::AC: return "AC";
        case Method::PAM: return "PAM";
        case Method::KMED: return "KMED";
        case Method::HC: return "HC";
    }
    return "?";
}

Method method_from_string(const std::string& name) {
    std::string up;
    for (char c : name) up.push_back(char(std::toupper(static_cast<unsigned char>(c))));
    if (up == "SA") return Method::SA;
    if (up == "TA") return Method::TA;
    if (up == "TS") return Method::TS;
    if (up == "GA") return Method::GA;
    if (up == "AC") return Method::AC;
    if (up == "PAM") return Method::PAM;
    if (up == "KMED") return Method::KMED;
    if (up == "HC") return Method::HC;
    throw std::invalid_argument("unknown method: " + name);
}

std::vector<Method> parse_method_list(const std::string& csv) {
    std::vector<Method> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(method_from_string(item));
    }
    if (out.empty()) throw std::invalid_argument("empty method list");
    return out;
}

double attraction_rate(const std::vector<double>& ws, double w_star, double tol) {
    if (ws.empty()) throw std::invalid_argument("attraction_rate: empty run list");
    if (tol <= 0.0) throw std::invalid_argument("attraction_rate: tol must be > 0");
    int hits = 0;
    for (double w : ws) {
        if (w_star == 0.0 ? w == 0.0 : w <= w_star * (1.0 + tol)) ++hits;
    }
    return double(hits) / double(ws.size());
}

ResolvedDataset resolve_dataset(const ExperimentConfig& config) {
    ResolvedDataset out;
    if (!config.data_path.empty()) {
        out.data = read_dataset_csv(config.data_path);
        out.label = config.data_path;
        out.k = config.k;
        if (out.k == 0)
            throw std::invalid_argument("k must be given for file datasets");
    } else if (config.builtin_id >= 1 && config.builtin_id <= 16) {
        auto specs = builtin_specs(config.p);
        GeneratorSpec spec = specs[config.builtin_id - 1];
        if (config.dataset_seed != 0) spec.seed = config.dataset_seed;
        auto planted = generate(spec);
        out.data = std::move(planted.dataset);
        out.truth = std::move(planted.truth);
        out.label = "builtin:" + std::to_string(config.builtin_id);
        out.k = config.k > 0 ? config.k : spec.k;
    } else {
        throw std::invalid_argument("config needs a data path or builtin id 1..16");
    }
    return out;
}

namespace {

int worker_budget(const ExperimentConfig& config) {
    if (config.workers > 0) return config.workers;
    if (const char* env = std::getenv("BINCLUST_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(std::min(hw, 16u));
}

RunResult run_method_once(const ExperimentConfig& config, Method method,
                          const CriterionContext& ctx, int k, std::uint64_t seed) {
    Rng rng(seed);
    RunResult result;
    switch (method) {
        case Method::SA:
            result = simulated_annealing(ctx, k, config.sa, rng);
            break;
        case Method::TA:
            result = threshold_accepting(ctx, k, config.ta, rng);
            break;
        case Method::TS:
            result = tabu_search(ctx, k, config.ts, rng);
            break;
        case Method::GA:
            result = genetic_algorithm(ctx, k, config.ga, rng);
            break;
        case Method::AC:
            result = ant_colony(ctx, k, config.ac, rng);
            break;
        case Method::PAM:
            result = pam_medians(ctx, k, rng);
            break;
        case Method::KMED:
            result = kmedoids_binary(ctx, k, rng);
            break;
        case Method::HC: {
            auto tree = hierarchical_average_linkage(*ctx.diss);
            result.best_partition = cut_dendrogram(tree, k);
            result.best_w = within_inertia(result.best_partition, ctx);
            result.iterations = std::uint64_t(tree.merges.size());
            break;
        }
    }
    result.seed = seed;
    return result;
}

}  // namespace

std::vector<RunResult> multistart(const ExperimentConfig& config, Method method,
                                  const CriterionContext& ctx, int k,
                                  std::vector<double>* run_ms) {
    if (config.multistart < 1)
        throw std::invalid_argument("multistart: m must be >= 1");
    const int m = method == Method::HC ? 1 : config.multistart;

    std::vector<RunResult> results(m);
    std::vector<double> ms(m, 0.0);
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= m) return;
            const auto t0 = std::chrono::steady_clock::now();
            try {
                results[i] = run_method_once(config, method, ctx, k,
                                             config.base_seed + std::uint64_t(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
            const auto t1 = std::chrono::steady_clock::now();
            ms[i] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
    };

    const int budget = std::min(worker_budget(config), m);
    if (budget <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(budget);
        for (int t = 0; t < budget; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) {
        try {
            std::rethrow_exception(first_error);
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string("multistart(") + to_string(method) +
                                     "): " + e.what());
        }
    }
    if (run_ms) *run_ms = std::move(ms);
    return results;
}

BenchReport run_experiment(const ExperimentConfig& config) {
    auto resolved = resolve_dataset(config);
    const auto diss = compute_dissimilarity_matrix(resolved.data, config.dissimilarity);
    CriterionContext ctx{&resolved.data, &diss, config.criterion};

    BenchReport report;
    report.dataset_label = resolved.label;
    report.n = resolved.data.n();
    report.p = resolved.data.p();
    report.k = resolved.k;
    report.config_hash = config_hash(config);

    std::vector<std::vector<double>> per_method_ws;
    double w_star = std::numeric_limits<double>::infinity();
    for (Method method : config.methods) {
        std::vector<double> ms;
        auto results = multistart(config, method, ctx, resolved.k, &ms);
        std::vector<double> ws;
        ws.reserve(results.size());
        for (const auto& r : results) ws.push_back(r.best_w);
        per_method_ws.push_back(ws);

        MethodReport mr;
        mr.method = method;
        mr.runs = int(results.size());
        mr.best_w = *std::min_element(ws.begin(), ws.end());
        double sum = 0.0;
        for (double w : ws) sum += w;
        mr.mean_w = sum / double(ws.size());
        for (double t : ms) mr.total_ms += t;
        mr.mean_ms = mr.total_ms / double(ms.size());
        report.methods.push_back(mr);
        w_star = std::min(w_star, mr.best_w);
    }
    report.w_star = w_star;

    for (std::size_t i = 0; i < report.methods.size(); ++i) {
        auto& mr = report.methods[i];
        if (mr.method == Method::HC) continue;  // single deterministic run
        mr.attraction_rate =
            attraction_rate(per_method_ws[i], w_star, config.relative_error_tol);
    }
    return report;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_json(const ExperimentConfig& c) {
    ordered_json j;
    j["data_path"] = c.data_path;
    j["builtin_id"] = c.builtin_id;
    j["p"] = c.p;
    j["dataset_seed"] = c.dataset_seed;
    j["criterion"] = to_string(c.criterion);
    j["dissimilarity"] = to_string(c.dissimilarity);
    j["k"] = c.k;
    ordered_json methods = ordered_json::array();
    for (Method m : c.methods) methods.push_back(to_string(m));
    j["methods"] = methods;
    j["multistart"] = c.multistart;
    j["base_seed"] = c.base_seed;
    j["relative_error_tol"] = c.relative_error_tol;
    j["sa"] = {{"chi0", c.sa.chi0},
               {"chain_length", c.sa.chain_length},
               {"gamma", c.sa.gamma},
               {"epsilon", c.sa.epsilon},
               {"max_chains", c.sa.max_chains}};
    j["ta"] = {{"th0", c.ta.th0},
               {"gamma", c.ta.gamma},
               {"maxiter", c.ta.maxiter},
               {"epsilon", c.ta.epsilon}};
    j["ts"] = {{"tabu_len", c.ts.tabu_len},
               {"maxiter", c.ts.maxiter},
               {"sample_fraction", c.ts.sample_fraction}};
    j["ga"] = {{"pop_size", c.ga.pop_size},
               {"p_crossover", c.ga.p_crossover},
               {"p_mutation", c.ga.p_mutation},
               {"maxiter", c.ga.maxiter},
               {"epsilon", c.ga.epsilon},
               {"elite_count", c.ga.elite_count}};
    j["ac"] = {{"alpha", c.ac.alpha},
               {"beta", c.ac.beta},
               {"rho", c.ac.rho},
               {"n_ants", c.ac.n_ants},
               {"maxiter", c.ac.maxiter},
               {"epsilon", c.ac.epsilon},
               {"tau0", c.ac.tau0}};
    return j;
}

}  // namespace

std::string config_to_json(const ExperimentConfig& config) {
    return config_json(config).dump(2);
}

std::string config_hash(const ExperimentConfig& config) {
    const std::string s = config_json(config).dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string report_to_json(const BenchReport& report, const ExperimentConfig& config,
                           bool include_timing) {
    ordered_json j;
    j["config"] = config_json(config);
    j["config_hash"] = report.config_hash;
    j["dataset"] = {{"label", report.dataset_label},
                    {"n", report.n},
                    {"p", report.p},
                    {"k", report.k}};
    j["w_star"] = report.w_star;
    ordered_json methods = ordered_json::object();
    for (const auto& mr : report.methods) {
        ordered_json m;
        m["runs"] = mr.runs;
        m["best_w"] = mr.best_w;
        m["mean_w"] = mr.mean_w;
        if (mr.attraction_rate) m["attraction_rate"] = *mr.attraction_rate;
        methods[to_string(mr.method)] = m;
    }
    j["methods"] = methods;
    if (include_timing) {
        ordered_json timing = ordered_json::object();
        for (const auto& mr : report.methods) {
            timing[to_string(mr.method)] = {{"total_ms", mr.total_ms},
                                            {"mean_ms", mr.mean_ms}};
        }
        j["timing"] = timing;
    }
    return j.dump(2) + "\n";
}

std::string report_to_csv(const BenchReport& report) {
    std::ostringstream os;
    os << "dataset,n,p,k,w_star,method,runs,best_w,mean_w,attraction_rate\n";
    for (const auto& mr : report.methods) {
        os << report.dataset_label << ',' << report.n << ',' << report.p << ','
           << report.k << ',' << report.w_star << ',' << to_string(mr.method) << ','
           << mr.runs << ',' << mr.best_w << ',' << mr.mean_w << ',';
        if (mr.attraction_rate) os << *mr.attraction_rate;
        os << '\n';
    }
    return os.str();
}

std::string report_to_table(const BenchReport& report) {
    std::ostringstream os;
    os << "dataset " << report.dataset_label << "  n=" << report.n
       << " p=" << report.p << " k=" << report.k << "\n";
    os << "W* = " << report.w_star << "\n";
    os << std::left << std::setw(6) << "method" << std::right << std::setw(8) << "runs"
       << std::setw(14) << "best W" << std::setw(14) << "mean W" << std::setw(8)
       << "a_r" << std::setw(12) << "mean ms" << "\n";
    for (const auto& mr : report.methods) {
        os << std::left << std::setw(6) << to_string(mr.method) << std::right
           << std::setw(8) << mr.runs << std::setw(14) << mr.best_w << std::setw(14)
           << mr.mean_w;
        if (mr.attraction_rate) {
            std::ostringstream ar;
            ar << std::fixed << std::setprecision(0) << *mr.attraction_rate * 100.0
               << '%';
            os << std::setw(8) << ar.str();
        } else {
            os << std::setw(8) << "-";
        }
        os << std::setw(12) << std::fixed << std::setprecision(2) << mr.mean_ms
           << "\n";
        os.unsetf(std::ios::fixed);
        os.precision(6);
    }
    return os.str();
}

}  // namespace binclust
