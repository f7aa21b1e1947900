#include "binclust/neighborhood.hpp"

#include <stdexcept>

namespace binclust {

NeighborhoodView enumerate_moves(const Partition& p) {
    auto sizes = class_sizes(p);
    NeighborhoodView view;
    view.source_partition_fingerprint = partition_fingerprint(p);
    view.moves.reserve(p.n() * std::size_t(p.num_classes - 1));
    for (std::size_t i = 0; i < p.n(); ++i) {
        const int from = p.assign[i];
        if (sizes[from] < 2) continue;
        for (int to = 0; to < p.num_classes; ++to) {
            if (to == from) continue;
            view.moves.emplace_back(int(i), from, to);
        }
    }
    return view;
}

std::vector<Move> sample_moves(const Partition& p, std::size_t count, Rng& rng) {
    if (count < 1) throw std::invalid_argument("sample_moves: count must be >= 1");
    auto view = enumerate_moves(p);
    if (count >= view.moves.size()) return std::move(view.moves);
    partial_shuffle(view.moves, count, rng);
    view.moves.resize(count);
    return std::move(view.moves);
}

Move random_move(const Partition& p, Rng& rng) {
    auto sizes = class_sizes(p);
    bool any = false;
    for (std::size_t i = 0; i < p.n() && !any; ++i) any = sizes[p.assign[i]] >= 2;
    if (!any || p.num_classes < 2)
        throw std::invalid_argument("random_move: partition has no legal move");
    for (;;) {
        const int obj = int(uniform_index(rng, p.n()));
        const int from = p.assign[obj];
        if (sizes[from] < 2) continue;
        int to = int(uniform_index(rng, std::size_t(p.num_classes - 1)));
        if (to >= from) ++to;
        return Move(obj, from, to);
    }
}

}  // namespace binclust
