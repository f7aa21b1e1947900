#ifndef BINCLUST_RUN_RESULT_HPP
#define BINCLUST_RUN_RESULT_HPP

#include <cstdint>
#include <vector>

#include "binclust/partition.hpp"

namespace binclust {

// Outcome of one optimizer run. best_w always equals a from-scratch
// within_inertia of best_partition.
struct RunResult {
    Partition best_partition;
    double best_w = 0.0;
    std::vector<double> trajectory;  // per-iteration best W, when recorded
    std::uint64_t iterations = 0;
    std::uint64_t seed = 0;
    std::uint64_t escape_count = 0;  // tabu search only: forced tabu moves
};

}  // namespace binclust

#endif
