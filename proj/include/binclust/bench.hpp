#ifndef BINCLUST_BENCH_HPP
#define BINCLUST_BENCH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "binclust/ant_colony.hpp"
#include "binclust/baselines.hpp"
#include "binclust/criteria.hpp"
#include "binclust/datagen.hpp"
#include "binclust/genetic.hpp"
#include "binclust/run_result.hpp"
#include "binclust/simulated_annealing.hpp"
#include "binclust/tabu_search.hpp"
#include "binclust/threshold_accepting.hpp"

namespace binclust {

enum class Method { SA, TA, TS, GA, AC, PAM, KMED, HC };

std::string to_string(Method m);
Method method_from_string(const std::string& name);
std::vector<Method> parse_method_list(const std::string& csv);

struct ExperimentConfig {
    // dataset source: a CSV path, or a builtin table id (1..16)
    std::string data_path;
    int builtin_id = 0;
    std::size_t p = 20;              // variable count for builtin generation
    std::uint64_t dataset_seed = 0;  // 0 = builtin default (the table id)

    CriterionKind criterion = CriterionKind::L1Median;
    DissimilarityKind dissimilarity = DissimilarityKind::L1;
    int k = 0;  // 0 = builtin's planted K
    std::vector<Method> methods{Method::SA, Method::TA, Method::TS, Method::GA,
                                Method::AC, Method::PAM, Method::HC};
    int multistart = 100;
    std::uint64_t base_seed = 1;
    double relative_error_tol = 0.05;
    int workers = 0;  // 0 = BINCLUST_THREADS env or hardware concurrency

    SaParams sa;
    TaParams ta;
    TsParams ts;
    GaParams ga;
    AcParams ac;
};

struct MethodReport {
    Method method = Method::SA;
    int runs = 0;
    double best_w = 0.0;
    double mean_w = 0.0;
    // absent for the deterministic single-run HC baseline
    std::optional<double> attraction_rate;
    double total_ms = 0.0;
    double mean_ms = 0.0;
};

struct BenchReport {
    std::string dataset_label;
    std::size_t n = 0;
    std::size_t p = 0;
    int k = 0;
    double w_star = 0.0;
    std::vector<MethodReport> methods;
    std::string config_hash;
};

// Fraction of runs with w <= w_star * (1 + tol); exact zeros when w_star = 0.
double attraction_rate(const std::vector<double>& ws, double w_star, double tol);

// m independent runs seeded base_seed..base_seed+m-1 (HC runs exactly once).
// Runs execute concurrently up to the worker budget; results come back
// ordered by seed.
std::vector<RunResult> multistart(const ExperimentConfig& config, Method method,
                                  const CriterionContext& ctx, int k,
                                  std::vector<double>* run_ms = nullptr);

// Runs every configured method on the dataset, computes the cross-method
// W*, per-method mean W and attraction rate.
BenchReport run_experiment(const ExperimentConfig& config);

// Loads or generates the dataset named by the config (CSV path or builtin).
// Returns the dataset plus a label and the effective K.
struct ResolvedDataset {
    BinaryDataset data;
    std::string label;
    int k = 0;
    std::optional<Partition> truth;
};
ResolvedDataset resolve_dataset(const ExperimentConfig& config);

// Deterministic report renderings; timing fields live in a separate
// "timing" JSON object so report bodies are reproducible byte for byte.
std::string report_to_json(const BenchReport& report, const ExperimentConfig& config,
                           bool include_timing = true);
std::string report_to_csv(const BenchReport& report);
std::string report_to_table(const BenchReport& report);

// Canonical JSON of the config and its FNV-1a hash (the report provenance).
std::string config_to_json(const ExperimentConfig& config);
std::string config_hash(const ExperimentConfig& config);

}  // namespace binclust

#endif
