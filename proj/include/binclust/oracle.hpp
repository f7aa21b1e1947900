#ifndef BINCLUST_ORACLE_HPP
#define BINCLUST_ORACLE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "binclust/criteria.hpp"

namespace binclust {

// The default enumeration guard; S(12,5) ~ 1.4e6 partitions stays cheap.
inline constexpr int kOracleDefaultGuard = 12;
// Hard ceiling even with an explicit override.
inline constexpr int kOracleMaxGuard = 14;

// Streams every set partition of n objects into exactly k non-empty classes
// (restricted growth strings, each partition once in canonical labeling).
// The visitor receives the assignment vector; it must not retain the
// reference. Throws a resource error when n exceeds the guard.
void enumerate_partitions(int n, int k,
                          const std::function<void(const std::vector<int>&)>& visit,
                          int guard = kOracleDefaultGuard);

// Exhaustive minimizer of W over all K-partitions.
std::pair<Partition, double> brute_force_optimum(const CriterionContext& ctx, int k,
                                                 int guard = kOracleDefaultGuard);

struct MonotonicityReport {
    std::vector<double> optima_sum;  // optimal W for k = 2..k_max, SumPairwise
    std::vector<double> optima_l1;   // same for L1Median
    bool ok = false;                 // both sequences non-increasing
};

// Checks Proposition-style monotonicity: the optimal W over K+1-partitions
// never exceeds the optimal W over K-partitions, for both criteria.
MonotonicityReport verify_monotonicity(const BinaryDataset& data,
                                       const DissimilarityMatrix& diss, int k_max,
                                       int guard = kOracleDefaultGuard);

}  // namespace binclust

#endif
