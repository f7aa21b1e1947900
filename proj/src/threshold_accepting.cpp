#include "binclust/threshold_accepting.hpp"

#include <stdexcept>

namespace binclust {

RunResult threshold_accepting(const CriterionContext& ctx, int k, const TaParams& params,
                              Rng& rng, const Partition* initial) {
    if (k < 2 || std::size_t(k) >= ctx.n())
        throw std::invalid_argument("threshold_accepting: requires 2 <= K < n");
    if (params.gamma <= 0.0 || params.gamma >= 1.0)
        throw std::invalid_argument("threshold_accepting: gamma in (0,1)");
    if (params.th0 < 0.0)
        throw std::invalid_argument("threshold_accepting: th0 must be >= 0");
    if (params.maxiter < 1)
        throw std::invalid_argument("threshold_accepting: maxiter >= 1");
    if (params.epsilon <= 0.0)
        throw std::invalid_argument("threshold_accepting: epsilon > 0");

    Partition p0 = initial ? *initial : random_partition(ctx.n(), k, rng);
    validate_partition(p0, true);
    ClusterStats stats(p0, ctx);

    Partition best = stats.partition();
    double best_w = stats.total_w();
    RunResult result;
    std::uint64_t iterations = 0;

    double threshold = params.th0;
    for (;;) {
        int accepted = 0;
        for (int step = 0; step < params.maxiter; ++step) {
            ++iterations;
            const Move m = stats.random_move(rng);
            if (stats.delta_w(m) < threshold) {
                stats.apply(m);
                ++accepted;
                if (stats.total_w() < best_w) {
                    best_w = stats.total_w();
                    best = stats.partition();
                }
            }
            if (params.record_trajectory) result.trajectory.push_back(best_w);
        }
        if (accepted == 0) break;
        threshold *= params.gamma;
        if (threshold < params.epsilon * params.th0) break;
    }

    result.best_partition = std::move(best);
    result.best_w = within_inertia(result.best_partition, ctx);
    result.iterations = iterations;
    return result;
}

}  // namespace binclust
