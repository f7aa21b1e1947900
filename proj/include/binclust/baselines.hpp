#ifndef BINCLUST_BASELINES_HPP
#define BINCLUST_BASELINES_HPP

#include <vector>

#include "binclust/criteria.hpp"
#include "binclust/run_result.hpp"

namespace binclust {

// Agglomerative merge tree. Leaves are 0..n-1; the t-th merge creates cluster
// id n+t. Heights are the raw average-linkage dissimilarities at merge time.
struct Dendrogram {
    struct Merge {
        int a = -1;
        int b = -1;
        double height = 0.0;
    };
    std::size_t n_leaves = 0;
    std::vector<Merge> merges;  // exactly n_leaves - 1 entries
};

// Alternating 0/1-median kernels and L1 reassignment until no assignment
// changes. Requires an L1Median context. Empty classes are repaired by
// stealing the object farthest from its kernel.
RunResult pam_medians(const CriterionContext& ctx, int k, Rng& rng,
                      const Partition* initial = nullptr);

// Alternating medoid update (class member minimizing the within-class
// dissimilarity row sum, ties to the lowest index) and nearest-medoid
// reassignment. Works with any dissimilarity; W is scored with the context's
// criterion after convergence.
RunResult kmedoids_binary(const CriterionContext& ctx, int k, Rng& rng,
                          const Partition* initial = nullptr);

// UPGMA: inter-cluster dissimilarity is the mean of all cross pairs. Merge
// ties pick the lexicographically smallest (a, b) cluster-id pair.
Dendrogram hierarchical_average_linkage(const DissimilarityMatrix& d);

// Undo the last k-1 merges to obtain exactly k clusters, labeled 0..k-1 in
// order of their lowest member index.
Partition cut_dendrogram(const Dendrogram& t, int k);

}  // namespace binclust

#endif
