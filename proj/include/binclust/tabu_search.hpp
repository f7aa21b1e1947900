#ifndef BINCLUST_TABU_SEARCH_HPP
#define BINCLUST_TABU_SEARCH_HPP

#include <cstdint>
#include <deque>
#include <vector>

#include "binclust/criteria.hpp"
#include "binclust/run_result.hpp"

namespace binclust {

struct TsParams {
    int tabu_len = 5;             // |T|; 0 disables the memory entirely
    int maxiter = 150;            // executed moves
    double sample_fraction = 0.1; // s = ceil(fraction * |N(P)|), fresh each iteration
    bool record_trajectory = false;
};

// Fixed-width membership indicator of one cluster (n bits).
class Bitmask {
public:
    Bitmask() = default;
    explicit Bitmask(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    std::size_t count() const;

    // Equality of this mask with `other` after flipping bit `i` of `other`.
    bool equals_with_bit_cleared(const Bitmask& other, std::size_t i) const;
    bool equals_with_bit_set(const Bitmask& other, std::size_t i) const;

    bool operator==(const Bitmask&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// FIFO list of the last tabu_len cluster codes; the groupings they encode are
// forbidden to reappear as a class.
class TabuList {
public:
    explicit TabuList(int max_len) : max_len_(max_len) {}

    void push(Bitmask code);
    bool contains(const Bitmask& code) const;
    bool contains_with_bit_cleared(const Bitmask& mask, std::size_t i) const;
    bool contains_with_bit_set(const Bitmask& mask, std::size_t i) const;
    std::size_t size() const { return entries_.size(); }

private:
    int max_len_;
    std::deque<Bitmask> entries_;
};

// Membership indicator of the class that loses the object, taken before the
// move: all objects that were together in the previous state.
Bitmask tabu_code(const Partition& p, const Move& m);

// Each iteration samples ceil(sample_fraction*|N(P)|) moves, discards those
// whose resulting partition would contain a class equal to a stored code, and
// executes the best remaining move by delta W (worsening allowed). If every
// sampled move is tabu the neighborhood is resampled once, then the best
// sampled move is forced (counted in RunResult::escape_count).
RunResult tabu_search(const CriterionContext& ctx, int k, const TsParams& params,
                      Rng& rng, const Partition* initial = nullptr);

}  // namespace binclust

#endif
