#ifndef BINCLUST_SIMULATED_ANNEALING_HPP
#define BINCLUST_SIMULATED_ANNEALING_HPP

#include "binclust/criteria.hpp"
#include "binclust/run_result.hpp"

namespace binclust {

struct SaParams {
    double chi0 = 0.95;     // initial acceptance rate
    int chain_length = 50;  // accepted transitions per Markov chain (L)
    double gamma = 0.91;    // cooling factor, c_{t+1} = gamma * c_t
    // Freeze threshold. A chain ends after chain_length accepted moves or
    // chain_length/epsilon proposals, whichever comes first; the run stops
    // when a full chain's acceptance rate sits below epsilon. Counting
    // accepted transitions makes the freeze signal reliable: with 50-proposal
    // chains a state with a handful of improving moves left would pass as
    // frozen six times out of ten.
    double epsilon = 0.01;
    // Safety cap only; the epsilon freeze rule is the intended stop. Flat
    // stretches of W (common for the L1-median criterion at low densities)
    // keep chains alive through zero-cost moves, so the cap must leave room
    // for the post-cooling walk that escapes them.
    int max_chains = 20000;
    int calibration_samples = 200;
    bool record_trajectory = false;
};

// Accept improving moves always, worsening ones with probability
// exp(-delta_w / temperature).
bool metropolis_accept(double delta_w, double temperature, Rng& rng);

// Finds c_0 such that the mean Metropolis acceptance probability of
// sample_size random moves from p0 equals chi0 (bisection over the sampled
// deltas; improving moves contribute probability 1). Returns a small floor
// temperature when even c -> 0 cannot bring the rate down to chi0.
double calibrate_initial_temperature(const Partition& p0, double chi0,
                                     int sample_size, const CriterionContext& ctx,
                                     Rng& rng);

RunResult simulated_annealing(const CriterionContext& ctx, int k, const SaParams& params,
                              Rng& rng, const Partition* initial = nullptr);

}  // namespace binclust

#endif
