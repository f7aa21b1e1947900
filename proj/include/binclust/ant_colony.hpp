#ifndef BINCLUST_ANT_COLONY_HPP
#define BINCLUST_ANT_COLONY_HPP

#include <vector>

#include "binclust/criteria.hpp"
#include "binclust/run_result.hpp"

namespace binclust {

struct AcParams {
    double alpha = 0.5;   // pheromone weight
    double beta = 0.2;    // visibility weight
    double rho = 0.5;     // evaporation rate
    int n_ants = 10;      // M
    int maxiter = 500;
    // Stagnation stop: relative best-W improvement over the window below
    // epsilon. (An absolute fitness threshold would scale like 1/I and stop
    // every large run at the window minimum.)
    double epsilon = 0.01;
    int stagnation_window = 50;
    double tau0 = 1.0;               // uniform initial pheromone
    double visibility_floor = 1e-6;  // eta = 1/max(d, floor); duplicates give d=0
    bool record_trajectory = false;
};

// Symmetric pheromone trails tau and fixed visibilities eta = 1/d (floored).
// Diagonals are held at zero so that an object is never its own anchor.
struct PheromoneState {
    std::size_t n = 0;
    std::vector<double> tau;  // n x n, row-major
    std::vector<double> eta;  // n x n, row-major

    PheromoneState(const DissimilarityMatrix& d, double tau0, double visibility_floor);

    double tau_at(std::size_t i, std::size_t j) const { return tau[i * n + j]; }
    double eta_at(std::size_t i, std::size_t j) const { return eta[i * n + j]; }
};

// p_{ii'} = tau_{ii'}^alpha * eta_{ii'}^beta / sum_{l != i'} tau_{li'}^alpha * eta_{li'}^beta:
// the probability of choosing anchor i for target i'.
double transfer_probability(std::size_t i, std::size_t i_prime,
                            const PheromoneState& state, const AcParams& params);

// tau <- (1-rho)*tau + rho * sum_m Delta^m, with Delta^m = B(P_m)/I when the
// pair is co-clustered in ant m and 0 otherwise.
void pheromone_update(PheromoneState& state, const std::vector<Partition>& ants,
                      const CriterionContext& ctx, const AcParams& params);

RunResult ant_colony(const CriterionContext& ctx, int k, const AcParams& params, Rng& rng);

}  // namespace binclust

#endif
