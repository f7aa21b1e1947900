#include "binclust/dissimilarity.hpp"

#include <stdexcept>

namespace binclust {

std::string to_string(DissimilarityKind kind) {
    return kind == DissimilarityKind::L1 ? "l1" : "jaccard";
}

DissimilarityKind dissimilarity_from_string(const std::string& name) {
    if (name == "l1") return DissimilarityKind::L1;
    if (name == "jaccard") return DissimilarityKind::Jaccard;
    throw std::invalid_argument("unknown dissimilarity: " + name);
}

int l1_dissimilarity(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("l1_dissimilarity: length mismatch");
    int d = 0;
    for (std::size_t j = 0; j < x.size(); ++j) d += (x[j] != y[j]);
    return d;
}

double jaccard_dissimilarity(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("jaccard_dissimilarity: length mismatch");
    int both = 0, either = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        both += (x[j] & y[j]);
        either += (x[j] | y[j]);
    }
    if (either == 0) return 0.0;
    return 1.0 - double(both) / double(either);
}

DissimilarityMatrix compute_dissimilarity_matrix(const BinaryDataset& data,
                                                 DissimilarityKind kind) {
    const std::size_t n = data.n();
    const std::size_t p = data.p();
    DissimilarityMatrix m(n, kind);
    for (std::size_t i = 0; i < n; ++i) {
        std::span<const std::uint8_t> xi(data.row(i), p);
        for (std::size_t j = i + 1; j < n; ++j) {
            std::span<const std::uint8_t> xj(data.row(j), p);
            const double d = kind == DissimilarityKind::L1
                                 ? double(l1_dissimilarity(xi, xj))
                                 : jaccard_dissimilarity(xi, xj);
            m.at(i, j) = d;
            m.at(j, i) = d;
        }
    }
    return m;
}

}  // namespace binclust
