#ifndef BINCLUST_DATAGEN_HPP
#define BINCLUST_DATAGEN_HPP

#include <cstdint>
#include <vector>

#include "binclust/dataset.hpp"
#include "binclust/partition.hpp"

namespace binclust {

enum class CardinalityScheme { Equal, OneBigHalf };

// One cell of the factorial design: n objects in K planted classes, each
// class drawing its coordinates i.i.d. Bernoulli(pi_k).
struct GeneratorSpec {
    std::size_t n = 0;
    std::size_t p = 20;
    int k = 0;
    CardinalityScheme scheme = CardinalityScheme::Equal;
    std::vector<double> pis;  // length K, each in (0,1)
    std::uint64_t seed = 0;
    int table_id = 0;  // 1..16 for the builtin designs, 0 otherwise

    // Equal: sizes differ by at most one. OneBigHalf: class 0 takes
    // ceil(n/2), the others split the remainder as evenly as possible.
    std::vector<std::size_t> cardinalities() const;
};

struct PlantedDataset {
    BinaryDataset dataset;
    Partition truth;
    GeneratorSpec spec;
};

// Deterministic for a given spec (including its seed).
PlantedDataset generate(const GeneratorSpec& spec, Rng& rng);
PlantedDataset generate(const GeneratorSpec& spec);  // seeds an rng from spec.seed

// The 16 designs: n in {120, 1200} x K in {3, 5} x {Equal, OneBigHalf} x
// {separated, fuzzy} probability levels. Default seed is the table id.
std::vector<GeneratorSpec> builtin_specs(std::size_t p);

}  // namespace binclust

#endif
