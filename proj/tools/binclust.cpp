// Command line front end: generate planted datasets, run a single method,
// benchmark many methods, or solve small instances exactly.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "binclust/bench.hpp"
#include "binclust/oracle.hpp"

using namespace binclust;
using ordered_json = nlohmann::ordered_json;

namespace {

void write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write: " + out_path);
    out << text;
}

void add_dataset_options(CLI::App* cmd, ExperimentConfig& config) {
    cmd->add_option("--data", config.data_path, "dataset CSV path");
    cmd->add_option("--builtin", config.builtin_id, "builtin table id 1..16")
        ->check(CLI::Range(1, 16));
    cmd->add_option("--p", config.p, "variable count for builtin generation");
    cmd->add_option("--dataset-seed", config.dataset_seed,
                    "generator seed override for builtin tables");
    cmd->add_option("--k", config.k, "number of clusters (default: builtin's K)");
}

void add_criterion_options(CLI::App* cmd, std::string& criterion, std::string& dissim) {
    cmd->add_option("--criterion", criterion, "clustering criterion")
        ->check(CLI::IsMember({"sum", "l1"}));
    cmd->add_option("--dissim", dissim, "pairwise dissimilarity")
        ->check(CLI::IsMember({"l1", "jaccard"}));
}

void add_param_options(CLI::App* cmd, ExperimentConfig& config) {
    cmd->add_option("--sa.chi0", config.sa.chi0);
    cmd->add_option("--sa.chain-length", config.sa.chain_length);
    cmd->add_option("--sa.gamma", config.sa.gamma);
    cmd->add_option("--sa.epsilon", config.sa.epsilon);
    cmd->add_option("--sa.max-chains", config.sa.max_chains);
    cmd->add_option("--ta.th0", config.ta.th0);
    cmd->add_option("--ta.gamma", config.ta.gamma);
    cmd->add_option("--ta.maxiter", config.ta.maxiter);
    cmd->add_option("--ta.epsilon", config.ta.epsilon);
    cmd->add_option("--ts.tabu-len", config.ts.tabu_len);
    cmd->add_option("--ts.maxiter", config.ts.maxiter);
    cmd->add_option("--ts.sample-fraction", config.ts.sample_fraction);
    cmd->add_option("--ga.pop", config.ga.pop_size);
    cmd->add_option("--ga.pc", config.ga.p_crossover);
    cmd->add_option("--ga.pm", config.ga.p_mutation);
    cmd->add_option("--ga.maxiter", config.ga.maxiter);
    cmd->add_option("--ga.epsilon", config.ga.epsilon);
    cmd->add_option("--ga.elite", config.ga.elite_count);
    cmd->add_option("--ac.alpha", config.ac.alpha);
    cmd->add_option("--ac.beta", config.ac.beta);
    cmd->add_option("--ac.rho", config.ac.rho);
    cmd->add_option("--ac.ants", config.ac.n_ants);
    cmd->add_option("--ac.maxiter", config.ac.maxiter);
    cmd->add_option("--ac.epsilon", config.ac.epsilon);
    cmd->add_option("--ac.tau0", config.ac.tau0);
}

int cmd_generate(int builtin_id, std::size_t n, std::size_t p, int k,
                 const std::string& scheme, std::vector<double> pis,
                 std::uint64_t seed, const std::string& out_prefix) {
    GeneratorSpec spec;
    if (builtin_id > 0) {
        spec = builtin_specs(p)[builtin_id - 1];
        if (seed != 0) spec.seed = seed;
    } else {
        spec.n = n;
        spec.p = p;
        spec.k = k;
        spec.scheme = scheme == "onebig" ? CardinalityScheme::OneBigHalf
                                         : CardinalityScheme::Equal;
        spec.pis = std::move(pis);
        spec.seed = seed;
    }
    auto planted = generate(spec);

    write_dataset_csv(planted.dataset, out_prefix + ".csv");
    std::ofstream truth(out_prefix + ".truth");
    for (int c : planted.truth.assign) truth << c << '\n';

    ordered_json j;
    j["n"] = spec.n;
    j["p"] = spec.p;
    j["k"] = spec.k;
    j["scheme"] = spec.scheme == CardinalityScheme::Equal ? "equal" : "onebig";
    j["pis"] = spec.pis;
    j["seed"] = spec.seed;
    j["table_id"] = spec.table_id;
    std::ofstream meta(out_prefix + ".json");
    meta << j.dump(2) << "\n";

    std::cout << "wrote " << out_prefix << ".csv (" << spec.n << "x" << spec.p << "), "
              << out_prefix << ".truth, " << out_prefix << ".json\n";
    return 0;
}

int cmd_run(ExperimentConfig config, const std::string& method_name,
            const std::string& out_path) {
    auto resolved = resolve_dataset(config);
    const auto diss = compute_dissimilarity_matrix(resolved.data, config.dissimilarity);
    CriterionContext ctx{&resolved.data, &diss, config.criterion};
    const Method method = method_from_string(method_name);

    config.multistart = 1;
    auto results = multistart(config, method, ctx, resolved.k);
    const RunResult& r = results.front();

    ordered_json j;
    j["method"] = to_string(method);
    j["dataset"] = resolved.label;
    j["k"] = resolved.k;
    j["criterion"] = to_string(config.criterion);
    j["dissimilarity"] = to_string(config.dissimilarity);
    j["seed"] = r.seed;
    j["best_w"] = r.best_w;
    j["iterations"] = r.iterations;
    j["assignment"] = r.best_partition.assign;
    write_or_print(j.dump(2) + "\n", out_path);
    return 0;
}

int cmd_bench(const ExperimentConfig& config, const std::string& format,
              const std::string& out_path, bool no_timing) {
    BenchReport report = run_experiment(config);
    std::string text;
    if (format == "json") {
        text = report_to_json(report, config, !no_timing);
    } else if (format == "csv") {
        text = report_to_csv(report);
    } else {
        text = report_to_table(report);
    }
    write_or_print(text, out_path);
    return 0;
}

int cmd_oracle(const ExperimentConfig& config, int monotonicity_k, int guard,
               const std::string& out_path) {
    auto resolved = resolve_dataset(config);
    const auto diss = compute_dissimilarity_matrix(resolved.data, config.dissimilarity);
    CriterionContext ctx{&resolved.data, &diss, config.criterion};

    ordered_json j;
    j["dataset"] = resolved.label;
    j["criterion"] = to_string(config.criterion);
    j["dissimilarity"] = to_string(config.dissimilarity);
    auto [best, w] = brute_force_optimum(ctx, resolved.k, guard);
    j["k"] = resolved.k;
    j["optimal_w"] = w;
    j["assignment"] = best.assign;
    if (monotonicity_k >= 2) {
        auto report = verify_monotonicity(resolved.data, diss, monotonicity_k, guard);
        j["monotonicity"] = {{"k_max", monotonicity_k},
                             {"optima_sum", report.optima_sum},
                             {"optima_l1", report.optima_l1},
                             {"ok", report.ok}};
    }
    write_or_print(j.dump(2) + "\n", out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary data clustering via combinatorial optimization heuristics"};
    app.require_subcommand(1);

    ExperimentConfig config;
    std::string criterion = "l1";
    std::string dissim = "l1";
    std::string out_path;
    std::string format = "table";

    // generate
    auto* gen = app.add_subcommand("generate", "emit a planted-partition dataset");
    int gen_builtin = 0;
    std::size_t gen_n = 120, gen_p = 20;
    int gen_k = 3;
    std::string gen_scheme = "equal";
    std::vector<double> gen_pis;
    std::uint64_t gen_seed = 0;
    std::string gen_out = "dataset";
    gen->add_option("--builtin", gen_builtin, "builtin table id 1..16")
        ->check(CLI::Range(1, 16));
    gen->add_option("--n", gen_n, "objects");
    gen->add_option("--p", gen_p, "variables");
    gen->add_option("--k", gen_k, "planted classes");
    gen->add_option("--scheme", gen_scheme, "cardinality scheme")
        ->check(CLI::IsMember({"equal", "onebig"}));
    gen->add_option("--pi", gen_pis, "per-class Bernoulli probabilities");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output prefix");

    // run
    auto* run = app.add_subcommand("run", "run one method once");
    std::string run_method = "sa";
    add_dataset_options(run, config);
    add_criterion_options(run, criterion, dissim);
    add_param_options(run, config);
    run->add_option("--method", run_method, "sa|ta|ts|ga|ac|pam|kmed|hc");
    run->add_option("--seed", config.base_seed, "run seed");
    run->add_option("--out", out_path, "write JSON here instead of stdout");

    // bench
    auto* bench = app.add_subcommand("bench", "multistart experiment over methods");
    std::string methods_csv = "sa,ta,ts,ga,ac,pam,hc";
    bool no_timing = false;
    add_dataset_options(bench, config);
    add_criterion_options(bench, criterion, dissim);
    add_param_options(bench, config);
    bench->add_option("--methods", methods_csv, "comma separated method list");
    bench->add_option("--multistart", config.multistart, "runs per method");
    bench->add_option("--seed", config.base_seed, "base seed");
    bench->add_option("--tol", config.relative_error_tol, "attraction tolerance");
    bench->add_option("--workers", config.workers,
                      "worker threads (default: BINCLUST_THREADS or hardware)");
    bench->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    bench->add_option("--out", out_path, "write report here instead of stdout");
    bench->add_flag("--no-timing", no_timing, "omit wall-clock fields from JSON");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact optimum for small instances");
    int mono_k = 0;
    int guard = kOracleDefaultGuard;
    add_dataset_options(oracle, config);
    add_criterion_options(oracle, criterion, dissim);
    oracle->add_option("--monotonicity", mono_k,
                       "also report optimal W for k = 2..this");
    oracle->add_option("--guard", guard, "enumeration guard on n (max 14)");
    oracle->add_option("--out", out_path, "write JSON here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        config.criterion = criterion_from_string(criterion);
        config.dissimilarity = dissimilarity_from_string(dissim);
        if (gen->parsed())
            return cmd_generate(gen_builtin, gen_n, gen_p, gen_k, gen_scheme, gen_pis,
                                gen_seed, gen_out);
        if (run->parsed()) return cmd_run(config, run_method, out_path);
        if (bench->parsed()) {
            config.methods = parse_method_list(methods_csv);
            return cmd_bench(config, format, out_path, no_timing);
        }
        if (oracle->parsed()) return cmd_oracle(config, mono_k, guard, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
