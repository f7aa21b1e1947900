#ifndef BINCLUST_GENETIC_HPP
#define BINCLUST_GENETIC_HPP

#include <utility>
#include <vector>

#include "binclust/criteria.hpp"
#include "binclust/run_result.hpp"

namespace binclust {

struct GaParams {
    int pop_size = 20;        // M
    double p_crossover = 0.8;
    double p_mutation = 0.1;
    int maxiter = 500;        // generations
    double epsilon = 0.01;    // stop when population fitness variance drops below
    int elite_count = 1;      // copied verbatim each generation
    bool record_trajectory = false;
};

// A partition encoded as an n-vector over {0..K-1} plus its fitness
// f(P) = B(P)/I(Omega) in [0,1].
struct Chromosome {
    Partition partition;
    double fitness = 0.0;
};

// B(P)/I(Omega). Throws std::domain_error when I(Omega) = 0 (all rows
// identical), since no partition can be ranked.
double fitness(const Partition& p, const CriterionContext& ctx);

// Two distinct individuals drawn uniformly; first of the pair is the fitter
// (ties keep the first drawn).
std::pair<const Chromosome*, const Chromosome*> select_parents(
    const std::vector<Chromosome>& pop, Rng& rng);

// Copies one uniformly chosen class of the dominant parent onto the other
// parent. Classes emptied by the copy are reseeded with a random object from
// the largest class. Fitness of the son is left unset.
Partition crossover(const Partition& dominant, const Partition& other, Rng& rng);

// Single uniform legal transfer (never empties a class).
Partition mutate(const Partition& p, Rng& rng);

RunResult genetic_algorithm(const CriterionContext& ctx, int k, const GaParams& params,
                            Rng& rng);

}  // namespace binclust

#endif
