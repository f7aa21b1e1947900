#include "binclust/datagen.hpp"

#include <stdexcept>

namespace binclust {

std::vector<std::size_t> GeneratorSpec::cardinalities() const {
    if (k < 2 || std::size_t(k) >= n)
        throw std::invalid_argument("GeneratorSpec: requires 2 <= K < n");
    std::vector<std::size_t> sizes(k, 0);
    if (scheme == CardinalityScheme::Equal) {
        const std::size_t base = n / k;
        const std::size_t extra = n % k;
        for (int c = 0; c < k; ++c) sizes[c] = base + (std::size_t(c) < extra ? 1 : 0);
    } else {
        sizes[0] = (n + 1) / 2;
        const std::size_t rest = n - sizes[0];
        const std::size_t base = rest / (k - 1);
        const std::size_t extra = rest % (k - 1);
        for (int c = 1; c < k; ++c)
            sizes[c] = base + (std::size_t(c - 1) < extra ? 1 : 0);
    }
    return sizes;
}

PlantedDataset generate(const GeneratorSpec& spec, Rng& rng) {
    if (spec.p < 1) throw std::invalid_argument("generate: p must be >= 1");
    if (std::size_t(spec.k) != spec.pis.size())
        throw std::invalid_argument("generate: pis must have K entries");
    for (double pi : spec.pis) {
        if (pi <= 0.0 || pi >= 1.0)
            throw std::invalid_argument("generate: every pi must lie in (0,1)");
    }
    const auto sizes = spec.cardinalities();

    Partition truth;
    truth.num_classes = spec.k;
    truth.assign.reserve(spec.n);
    for (int c = 0; c < spec.k; ++c)
        truth.assign.insert(truth.assign.end(), sizes[c], c);

    std::vector<std::uint8_t> values(spec.n * spec.p);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const double pi = spec.pis[truth.assign[i]];
        for (std::size_t j = 0; j < spec.p; ++j)
            values[i * spec.p + j] = uniform01(rng) < pi ? 1 : 0;
    }

    PlantedDataset out;
    out.dataset = BinaryDataset(spec.n, spec.p, std::move(values));
    out.truth = std::move(truth);
    out.spec = spec;
    return out;
}

PlantedDataset generate(const GeneratorSpec& spec) {
    Rng rng(spec.seed);
    return generate(spec, rng);
}

std::vector<GeneratorSpec> builtin_specs(std::size_t p) {
    if (p < 1) throw std::invalid_argument("builtin_specs: p must be >= 1");
    const std::vector<double> sep3{0.1, 0.5, 0.9};
    const std::vector<double> fuz3{0.3, 0.5, 0.7};
    const std::vector<double> sep5{0.05, 0.25, 0.5, 0.75, 0.95};
    const std::vector<double> fuz5{0.2, 0.35, 0.5, 0.65, 0.8};

    std::vector<GeneratorSpec> specs;
    specs.reserve(16);
    int id = 1;
    for (std::size_t n : {std::size_t(120), std::size_t(1200)}) {
        for (int k : {3, 5}) {
            for (auto scheme : {CardinalityScheme::Equal, CardinalityScheme::OneBigHalf}) {
                for (bool separated : {true, false}) {
                    GeneratorSpec s;
                    s.n = n;
                    s.p = p;
                    s.k = k;
                    s.scheme = scheme;
                    s.pis = k == 3 ? (separated ? sep3 : fuz3)
                                   : (separated ? sep5 : fuz5);
                    s.seed = std::uint64_t(id);
                    s.table_id = id;
                    specs.push_back(std::move(s));
                    ++id;
                }
            }
        }
    }
    return specs;
}

}  // namespace binclust
