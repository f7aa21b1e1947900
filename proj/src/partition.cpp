#include "binclust/partition.hpp"

#include <stdexcept>
#include <string>

namespace binclust {

std::vector<int> class_sizes(const Partition& p) {
    std::vector<int> sizes(p.num_classes, 0);
    for (int c : p.assign) {
        if (c < 0 || c >= p.num_classes)
            throw std::invalid_argument("partition: class label out of range");
        ++sizes[c];
    }
    return sizes;
}

std::vector<std::vector<int>> class_members(const Partition& p) {
    std::vector<std::vector<int>> members(p.num_classes);
    for (std::size_t i = 0; i < p.assign.size(); ++i)
        members[p.assign[i]].push_back(int(i));
    return members;
}

void validate_partition(const Partition& p, bool require_search_state) {
    if (p.num_classes < 1)
        throw std::invalid_argument("partition: needs at least one class");
    auto sizes = class_sizes(p);
    for (int k = 0; k < p.num_classes; ++k) {
        if (sizes[k] == 0)
            throw std::invalid_argument("partition: class " + std::to_string(k) +
                                        " is empty");
    }
    if (require_search_state) {
        if (p.num_classes < 2 || std::size_t(p.num_classes) >= p.n())
            throw std::invalid_argument("partition: requires 2 <= K < n");
    }
}

Partition apply_move(const Partition& p, const Move& m) {
    if (m.object < 0 || std::size_t(m.object) >= p.n())
        throw std::invalid_argument("apply_move: object index out of range");
    if (m.to_class < 0 || m.to_class >= p.num_classes || m.from_class < 0 ||
        m.from_class >= p.num_classes)
        throw std::invalid_argument("apply_move: class index out of range");
    if (m.from_class == m.to_class)
        throw std::invalid_argument("apply_move: from_class equals to_class");
    if (p.assign[m.object] != m.from_class)
        throw std::invalid_argument("apply_move: stale from_class");
    auto sizes = class_sizes(p);
    if (sizes[m.from_class] < 2)
        throw std::invalid_argument("apply_move: move would empty a class");
    Partition out = p;
    out.assign[m.object] = m.to_class;
    return out;
}

Partition random_partition(std::size_t n, int k, Rng& rng) {
    if (k < 2 || std::size_t(k) >= n)
        throw std::invalid_argument("random_partition: requires 2 <= K < n");
    Partition p;
    p.num_classes = k;
    p.assign.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.assign[i] = int(uniform_index(rng, k));

    auto sizes = class_sizes(p);
    for (int c = 0; c < k; ++c) {
        while (sizes[c] == 0) {
            const std::size_t obj = uniform_index(rng, n);
            const int from = p.assign[obj];
            if (sizes[from] < 2) continue;
            p.assign[obj] = c;
            --sizes[from];
            ++sizes[c];
        }
    }
    return p;
}

std::uint64_t partition_fingerprint(const Partition& p) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(std::uint64_t(p.num_classes));
    for (int c : p.assign) mix(std::uint64_t(std::uint32_t(c)));
    return h;
}

}  // namespace binclust
