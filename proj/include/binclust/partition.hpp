#ifndef BINCLUST_PARTITION_HPP
#define BINCLUST_PARTITION_HPP

#include <cstdint>
#include <vector>

#include "binclust/rng.hpp"

namespace binclust {

// Assignment of n objects to classes 0..num_classes-1. The flat assignment
// vector is the single source of truth; member lists are derived on demand.
struct Partition {
    std::vector<int> assign;
    int num_classes = 0;

    std::size_t n() const { return assign.size(); }
};

// Single transfer of one object to a different class.
struct Move {
    int object = -1;
    int from_class = -1;
    int to_class = -1;

    Move() = default;
    Move(int obj, int from, int to) : object(obj), from_class(from), to_class(to) {}

    Move inverse() const { return Move(object, to_class, from_class); }

    bool operator==(const Move&) const = default;
};

std::vector<int> class_sizes(const Partition& p);
std::vector<std::vector<int>> class_members(const Partition& p);

// Throws std::invalid_argument unless every class in 0..K-1 is non-empty and
// every label is in range. When require_search_state is set, also enforces
// 2 <= K < n (the optimization precondition).
void validate_partition(const Partition& p, bool require_search_state = false);

// Checks the move against p (matching from_class, non-emptying source) and
// returns the partition with the object reassigned.
Partition apply_move(const Partition& p, const Move& m);

// In-place variant used by hot loops; the caller guarantees legality.
inline void apply_move_unchecked(Partition& p, const Move& m) {
    p.assign[m.object] = m.to_class;
}

// Uniform random assignment followed by repair: every empty class is seeded
// with a random object stolen from a class of size >= 2.
Partition random_partition(std::size_t n, int k, Rng& rng);

// FNV-1a hash of the assignment vector.
std::uint64_t partition_fingerprint(const Partition& p);

}  // namespace binclust

#endif
