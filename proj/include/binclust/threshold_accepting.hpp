#ifndef BINCLUST_THRESHOLD_ACCEPTING_HPP
#define BINCLUST_THRESHOLD_ACCEPTING_HPP

#include "binclust/criteria.hpp"
#include "binclust/run_result.hpp"

namespace binclust {

struct TaParams {
    double th0 = 100.0;    // initial threshold, in absolute W units
    double gamma = 0.9;    // threshold reduction factor
    int maxiter = 50;      // inner moves per threshold level
    double epsilon = 0.01; // stop once Th < epsilon * Th_0
    bool record_trajectory = false;
};

// Deterministic acceptance: a move is taken iff delta_w < Th. The threshold
// shrinks geometrically after each block of maxiter moves; the run also stops
// when a whole block accepts nothing.
RunResult threshold_accepting(const CriterionContext& ctx, int k, const TaParams& params,
                              Rng& rng, const Partition* initial = nullptr);

}  // namespace binclust

#endif
