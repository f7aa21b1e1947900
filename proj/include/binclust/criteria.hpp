#ifndef BINCLUST_CRITERIA_HPP
#define BINCLUST_CRITERIA_HPP

#include <span>
#include <string>
#include <vector>

#include "binclust/dataset.hpp"
#include "binclust/dissimilarity.hpp"
#include "binclust/partition.hpp"

namespace binclust {

enum class CriterionKind { SumPairwise, L1Median };

std::string to_string(CriterionKind kind);
CriterionKind criterion_from_string(const std::string& name);

// Everything a criterion evaluation needs. SumPairwise reads the
// dissimilarity matrix; L1Median reads the raw dataset. The matrix is also
// used for total/between inertia under both criteria. Immutable, shareable.
struct CriterionContext {
    const BinaryDataset* data = nullptr;
    const DissimilarityMatrix* diss = nullptr;
    CriterionKind kind = CriterionKind::SumPairwise;

    std::size_t n() const { return diss ? diss->n() : data->n(); }
};

// delta_sum(C) = sum over ordered pairs (i,i') in C of d(i,i'). Each
// unordered pair counts twice, matching the double-sum convention used by
// total_inertia; halved conventions exist in the literature but would break
// B = I - W here.
double delta_sum(std::span<const int> cluster_members, const DissimilarityMatrix& d);

// Coordinate-wise majority vector; exact ties resolve to 0 (delta_l1 is
// tie-invariant, the fixed rule just makes medians reproducible).
std::vector<std::uint8_t> median_vector(std::span<const int> cluster_members,
                                        const BinaryDataset& data);

// delta_l1(C) = sum of L1 distances from members to the median, computed via
// the closed form sum_j min(ones_j, |C| - ones_j).
double delta_l1(std::span<const int> cluster_members, const BinaryDataset& data);

// W(P) = sum over classes of delta(C_k), recomputed from scratch.
double within_inertia(const Partition& p, const CriterionContext& ctx);

// I(Omega) = full double sum of pairwise dissimilarities (ordered pairs).
double total_inertia(const DissimilarityMatrix& d);

// B(P) = I(Omega) - W(P).
double between_inertia(const Partition& p, const CriterionContext& ctx);

// Incremental bookkeeping for one optimizer run. Holds the assignment vector
// (the run's current state) plus whatever the criterion needs for O(1)/O(p)
// move evaluation:
//   SumPairwise: point_cluster_sums[i][k] = sum_{j in C_k} d(i,j), so a
//     transfer evaluates as 2*(S[i][to] - S[i][from]) and an executed move
//     updates one matrix column pair in O(n).
//   L1Median: one_counts[k][j], so a transfer re-prices the two touched
//     clusters in O(p).
// Values are carried in doubles; L1-based quantities stay integer-valued so
// all adds/subtracts are exact, Jaccard-based ones are binary64.
class ClusterStats {
public:
    ClusterStats(Partition p, const CriterionContext& ctx);

    const Partition& partition() const { return partition_; }
    const std::vector<int>& sizes() const { return sizes_; }
    const std::vector<double>& cached_delta() const { return cached_delta_; }
    double total_w() const { return total_w_; }
    int size_of(int k) const { return sizes_[k]; }
    int class_of(int object) const { return partition_.assign[object]; }
    int num_classes() const { return partition_.num_classes; }
    std::size_t n() const { return partition_.n(); }

    // W(after m) - W(before m) without applying the move.
    double delta_w(const Move& m) const;

    // Applies the move and updates all bookkeeping. Throws on illegal moves.
    void apply(const Move& m);

    // Uniform random legal move (never empties a class).
    Move random_move(Rng& rng) const;

    bool operator==(const ClusterStats& other) const;

private:
    void check_move(const Move& m) const;
    double cluster_delta_l1(int k) const;

    Partition partition_;
    const CriterionContext* ctx_;
    std::vector<int> sizes_;
    std::vector<double> cached_delta_;
    double total_w_ = 0.0;
    // SumPairwise: n x K row-major point-to-cluster distance sums.
    std::vector<double> point_cluster_sums_;
    // L1Median: K x p row-major per-coordinate one counts.
    std::vector<int> one_counts_;
};

}  // namespace binclust

#endif
