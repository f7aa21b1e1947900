#include "binclust/simulated_annealing.hpp"

#include <cmath>
#include <stdexcept>

namespace binclust {

namespace {
constexpr double kFloorTemperature = 1e-9;
}

bool metropolis_accept(double delta_w, double temperature, Rng& rng) {
    if (temperature <= 0.0)
        throw std::invalid_argument("metropolis_accept: temperature must be positive");
    if (delta_w < 0.0) return true;
    return uniform01(rng) < std::exp(-delta_w / temperature);
}

double calibrate_initial_temperature(const Partition& p0, double chi0,
                                     int sample_size, const CriterionContext& ctx,
                                     Rng& rng) {
    if (chi0 <= 0.0 || chi0 >= 1.0)
        throw std::invalid_argument("calibrate_initial_temperature: chi0 in (0,1)");
    if (sample_size < 1)
        throw std::invalid_argument("calibrate_initial_temperature: sample_size >= 1");

    ClusterStats stats(p0, ctx);
    std::vector<double> deltas;
    deltas.reserve(sample_size);
    double max_delta = 0.0;
    for (int s = 0; s < sample_size; ++s) {
        const double d = stats.delta_w(stats.random_move(rng));
        deltas.push_back(d);
        if (d > max_delta) max_delta = d;
    }
    if (max_delta <= 0.0) return kFloorTemperature;  // nothing to accept probabilistically

    auto mean_acceptance = [&deltas](double c) {
        double acc = 0.0;
        for (double d : deltas) acc += d > 0.0 ? std::exp(-d / c) : 1.0;
        return acc / double(deltas.size());
    };

    // mean_acceptance is increasing in c; its infimum is the improving
    // fraction. If that already exceeds chi0, the floor is the best answer.
    if (mean_acceptance(kFloorTemperature) >= chi0) return kFloorTemperature;
    double hi = max_delta;
    while (mean_acceptance(hi) < chi0) hi *= 2.0;
    double lo = kFloorTemperature;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (mean_acceptance(mid) < chi0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

RunResult simulated_annealing(const CriterionContext& ctx, int k, const SaParams& params,
                              Rng& rng, const Partition* initial) {
    if (k < 2 || std::size_t(k) >= ctx.n())
        throw std::invalid_argument("simulated_annealing: requires 2 <= K < n");
    if (params.gamma <= 0.0 || params.gamma >= 1.0)
        throw std::invalid_argument("simulated_annealing: gamma in (0,1)");
    if (params.chain_length < 1 || params.max_chains < 1)
        throw std::invalid_argument("simulated_annealing: chain_length and max_chains >= 1");

    Partition p0 = initial ? *initial : random_partition(ctx.n(), k, rng);
    validate_partition(p0, true);
    ClusterStats stats(p0, ctx);

    double temperature =
        calibrate_initial_temperature(stats.partition(), params.chi0,
                                      params.calibration_samples, ctx, rng);

    Partition best = stats.partition();
    double best_w = stats.total_w();
    RunResult result;
    std::uint64_t iterations = 0;

    const long long proposal_cutoff = std::max<long long>(
        params.chain_length,
        llround(std::ceil(double(params.chain_length) / params.epsilon)));
    for (int chain = 0; chain < params.max_chains; ++chain) {
        int accepted = 0;
        long long proposed = 0;
        while (accepted < params.chain_length && proposed < proposal_cutoff) {
            ++proposed;
            ++iterations;
            const Move m = stats.random_move(rng);
            const double delta = stats.delta_w(m);
            if (metropolis_accept(delta, temperature, rng)) {
                stats.apply(m);
                ++accepted;
                if (stats.total_w() < best_w) {
                    best_w = stats.total_w();
                    best = stats.partition();
                }
            }
            if (params.record_trajectory) result.trajectory.push_back(best_w);
        }
        if (double(accepted) / double(proposed) < params.epsilon) break;  // frozen
        temperature *= params.gamma;
    }

    result.best_partition = std::move(best);
    result.best_w = within_inertia(result.best_partition, ctx);
    result.iterations = iterations;
    return result;
}

}  // namespace binclust
