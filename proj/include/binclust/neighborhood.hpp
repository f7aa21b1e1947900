#ifndef BINCLUST_NEIGHBORHOOD_HPP
#define BINCLUST_NEIGHBORHOOD_HPP

#include <cstdint>
#include <vector>

#include "binclust/partition.hpp"

namespace binclust {

// The single-transfer neighborhood N(P): every (object, target class) pair
// with target != current class whose source class keeps at least one member.
struct NeighborhoodView {
    std::vector<Move> moves;
    std::uint64_t source_partition_fingerprint = 0;
};

// All legal moves in deterministic order (object index, then target class).
NeighborhoodView enumerate_moves(const Partition& p);

// `count` moves drawn uniformly without replacement from the legal set (the
// whole set if count >= |N(P)|).
std::vector<Move> sample_moves(const Partition& p, std::size_t count, Rng& rng);

// One legal move, uniform over the legal set. Throws if no legal move
// exists (excluded by the K < n search precondition).
Move random_move(const Partition& p, Rng& rng);

}  // namespace binclust

#endif
