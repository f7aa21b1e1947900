#ifndef BINCLUST_DISSIMILARITY_HPP
#define BINCLUST_DISSIMILARITY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "binclust/dataset.hpp"

namespace binclust {

enum class DissimilarityKind { L1, Jaccard };

std::string to_string(DissimilarityKind kind);
DissimilarityKind dissimilarity_from_string(const std::string& name);

// Hamming count: sum_j |x_j - y_j|. Throws on length mismatch.
int l1_dissimilarity(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y);

// 1 - a/(a+b+c) with a = #{x_j = y_j = 1}, b = #{x_j=1, y_j=0}, c = #{x_j=0, y_j=1}.
// Two all-zero vectors are identical, so the dissimilarity is 0.
double jaccard_dissimilarity(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y);

// Dense symmetric n x n matrix of pairwise dissimilarities with zero diagonal.
// L1 entries are integer-valued (stored exactly in doubles), Jaccard entries
// lie in [0,1]. Immutable after construction and shareable across runs.
class DissimilarityMatrix {
public:
    DissimilarityMatrix() = default;
    DissimilarityMatrix(std::size_t n, DissimilarityKind kind)
        : n_(n), kind_(kind), d_(n * n, 0.0) {}

    std::size_t n() const { return n_; }
    DissimilarityKind kind() const { return kind_; }

    double at(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    double& at(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
    const double* row(std::size_t i) const { return d_.data() + i * n_; }

private:
    std::size_t n_ = 0;
    DissimilarityKind kind_ = DissimilarityKind::L1;
    std::vector<double> d_;
};

DissimilarityMatrix compute_dissimilarity_matrix(const BinaryDataset& data,
                                                 DissimilarityKind kind);

}  // namespace binclust

#endif
