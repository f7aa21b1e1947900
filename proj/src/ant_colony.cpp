#include "binclust/ant_colony.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace binclust {

PheromoneState::PheromoneState(const DissimilarityMatrix& d, double tau0,
                               double visibility_floor)
    : n(d.n()), tau(n * n, tau0), eta(n * n, 0.0) {
    if (tau0 <= 0.0)
        throw std::invalid_argument("PheromoneState: tau0 must be positive");
    for (std::size_t i = 0; i < n; ++i) {
        tau[i * n + i] = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            eta[i * n + j] = 1.0 / std::max(d.at(i, j), visibility_floor);
        }
    }
}

namespace {

double weight(double tau, double eta, double alpha, double beta) {
    if (tau <= 0.0 || eta <= 0.0) return 0.0;
    return std::pow(tau, alpha) * std::pow(eta, beta);
}

}  // namespace

double transfer_probability(std::size_t i, std::size_t i_prime,
                            const PheromoneState& state, const AcParams& params) {
    if (i == i_prime)
        throw std::invalid_argument("transfer_probability: i must differ from i'");
    double denom = 0.0;
    for (std::size_t l = 0; l < state.n; ++l) {
        if (l == i_prime) continue;
        denom += weight(state.tau_at(l, i_prime), state.eta_at(l, i_prime),
                        params.alpha, params.beta);
    }
    const double num = weight(state.tau_at(i, i_prime), state.eta_at(i, i_prime),
                              params.alpha, params.beta);
    return num / denom;
}

void pheromone_update(PheromoneState& state, const std::vector<Partition>& ants,
                      const CriterionContext& ctx, const AcParams& params) {
    const std::size_t n = state.n;
    const double total = total_inertia(*ctx.diss);
    if (total <= 0.0)
        throw std::domain_error("pheromone_update: total inertia is zero");

    // rho * sum over ants of the co-clustering deposits
    std::vector<double> deposit(n * n, 0.0);
    for (const Partition& p : ants) {
        const double f = 1.0 - within_inertia(p, ctx) / total;
        auto members = class_members(p);
        for (const auto& cluster : members) {
            for (std::size_t a = 0; a < cluster.size(); ++a) {
                for (std::size_t b = a + 1; b < cluster.size(); ++b) {
                    deposit[std::size_t(cluster[a]) * n + cluster[b]] += f;
                    deposit[std::size_t(cluster[b]) * n + cluster[a]] += f;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            state.tau[i * n + j] =
                (1.0 - params.rho) * state.tau[i * n + j] + params.rho * deposit[i * n + j];
        }
    }
}

namespace {

// One ant: its partition stats plus the best-so-far fitness bookkeeping.
struct Ant {
    ClusterStats stats;
};

}  // namespace

RunResult ant_colony(const CriterionContext& ctx, int k, const AcParams& params, Rng& rng) {
    if (k < 2 || std::size_t(k) >= ctx.n())
        throw std::invalid_argument("ant_colony: requires 2 <= K < n");
    if (params.rho <= 0.0 || params.rho >= 1.0)
        throw std::invalid_argument("ant_colony: rho in (0,1)");
    if (params.n_ants < 1)
        throw std::invalid_argument("ant_colony: n_ants >= 1");
    if (params.alpha < 0.0 || params.beta < 0.0)
        throw std::invalid_argument("ant_colony: alpha, beta >= 0");

    const std::size_t n = ctx.n();
    const double total = total_inertia(*ctx.diss);
    if (total <= 0.0)
        throw std::domain_error("ant_colony: total inertia is zero (all rows identical)");

    PheromoneState state(*ctx.diss, params.tau0, params.visibility_floor);

    std::vector<Ant> ants;
    ants.reserve(params.n_ants);
    for (int m = 0; m < params.n_ants; ++m)
        ants.push_back(Ant{ClusterStats(random_partition(n, k, rng), ctx)});

    Partition best;
    double best_w = 0.0;
    for (const Ant& ant : ants) {
        if (best.assign.empty() || ant.stats.total_w() < best_w) {
            best = ant.stats.partition();
            best_w = ant.stats.total_w();
        }
    }

    // Per-iteration caches: tau^alpha * eta^beta and per-target (column)
    // cumulative weights so each anchor draw is a binary search. eta is
    // fixed, so eta^beta is computed once; tau^alpha gets a fast path for
    // the common exponents.
    std::vector<double> eta_pow(n * n, 0.0);
    for (std::size_t i = 0; i < n * n; ++i)
        if (state.eta[i] > 0.0) eta_pow[i] = std::pow(state.eta[i], params.beta);
    auto tau_pow = [alpha = params.alpha](double t) {
        if (t <= 0.0) return 0.0;
        if (alpha == 0.5) return std::sqrt(t);
        if (alpha == 1.0) return t;
        if (alpha == 0.0) return 1.0;
        return std::pow(t, alpha);
    };

    std::vector<double> w(n * n);
    std::vector<double> col_cum(n * n);
    std::vector<double> history;
    history.reserve(params.maxiter + 1);
    history.push_back(best_w);

    RunResult result;
    std::uint64_t iterations = 0;

    for (int iter = 0; iter < params.maxiter; ++iter) {
        ++iterations;
        for (std::size_t i = 0; i < n * n; ++i) w[i] = tau_pow(state.tau[i]) * eta_pow[i];
        // column-major cumulative sums: col_cum[t*n + l] = sum_{l' <= l} w[l'][t]
        for (std::size_t t = 0; t < n; ++t) {
            double acc = 0.0;
            double* col = col_cum.data() + t * n;
            for (std::size_t l = 0; l < n; ++l) {
                acc += w[l * n + t];
                col[l] = acc;
            }
        }

        for (Ant& ant : ants) {
            for (std::size_t step = 0; step < n; ++step) {
                const std::size_t target = uniform_index(rng, n);
                if (ant.stats.size_of(ant.stats.class_of(int(target))) < 2)
                    continue;  // transfer would empty the target's class
                const double* col = col_cum.data() + target * n;
                const double mass = col[n - 1];
                if (mass <= 0.0) continue;
                const double u = uniform01(rng) * mass;
                const std::size_t anchor =
                    std::size_t(std::upper_bound(col, col + n, u) - col);
                if (anchor >= n) continue;
                const int to = ant.stats.class_of(int(anchor));
                const int from = ant.stats.class_of(int(target));
                if (to == from) continue;
                ant.stats.apply(Move(int(target), from, to));
                if (ant.stats.total_w() < best_w) {
                    best_w = ant.stats.total_w();
                    best = ant.stats.partition();
                }
            }
        }

        std::vector<Partition> solutions;
        solutions.reserve(ants.size());
        for (const Ant& ant : ants) solutions.push_back(ant.stats.partition());
        pheromone_update(state, solutions, ctx, params);

        history.push_back(best_w);
        if (params.record_trajectory) result.trajectory.push_back(best_w);
        if (int(history.size()) > params.stagnation_window) {
            const double before = history[history.size() - 1 - params.stagnation_window];
            if (before - best_w < params.epsilon * std::max(before, 1e-12)) break;
        }
    }

    result.best_partition = std::move(best);
    result.best_w = within_inertia(result.best_partition, ctx);
    result.iterations = iterations;
    return result;
}

}  // namespace binclust
