#include "binclust/tabu_search.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "binclust/neighborhood.hpp"

namespace binclust {

std::size_t Bitmask::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool Bitmask::equals_with_bit_cleared(const Bitmask& other, std::size_t i) const {
    if (n_ != other.n_) return false;
    const std::size_t wi = i >> 6;
    const std::uint64_t flipped = other.words_[wi] & ~(std::uint64_t(1) << (i & 63));
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const std::uint64_t rhs = w == wi ? flipped : other.words_[w];
        if (words_[w] != rhs) return false;
    }
    return true;
}

bool Bitmask::equals_with_bit_set(const Bitmask& other, std::size_t i) const {
    if (n_ != other.n_) return false;
    const std::size_t wi = i >> 6;
    const std::uint64_t flipped = other.words_[wi] | (std::uint64_t(1) << (i & 63));
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const std::uint64_t rhs = w == wi ? flipped : other.words_[w];
        if (words_[w] != rhs) return false;
    }
    return true;
}

void TabuList::push(Bitmask code) {
    if (max_len_ <= 0) return;
    entries_.push_back(std::move(code));
    while (int(entries_.size()) > max_len_) entries_.pop_front();
}

bool TabuList::contains(const Bitmask& code) const {
    for (const auto& e : entries_)
        if (e == code) return true;
    return false;
}

bool TabuList::contains_with_bit_cleared(const Bitmask& mask, std::size_t i) const {
    for (const auto& e : entries_)
        if (e.equals_with_bit_cleared(mask, i)) return true;
    return false;
}

bool TabuList::contains_with_bit_set(const Bitmask& mask, std::size_t i) const {
    for (const auto& e : entries_)
        if (e.equals_with_bit_set(mask, i)) return true;
    return false;
}

Bitmask tabu_code(const Partition& p, const Move& m) {
    if (p.assign[m.object] != m.from_class)
        throw std::invalid_argument("tabu_code: move does not match partition");
    Bitmask mask(p.n());
    for (std::size_t i = 0; i < p.n(); ++i)
        if (p.assign[i] == m.from_class) mask.set(i);
    return mask;
}

namespace {

std::vector<Bitmask> build_class_masks(const Partition& p) {
    std::vector<Bitmask> masks(p.num_classes, Bitmask(p.n()));
    for (std::size_t i = 0; i < p.n(); ++i) masks[p.assign[i]].set(i);
    return masks;
}

struct Candidate {
    Move move;
    double delta = 0.0;
    bool valid = false;
};

// Deterministic tie-break: lowest object index, then lowest target class.
bool better(const Move& a, double da, const Candidate& b) {
    if (!b.valid) return true;
    if (da != b.delta) return da < b.delta;
    if (a.object != b.move.object) return a.object < b.move.object;
    return a.to_class < b.move.to_class;
}

}  // namespace

RunResult tabu_search(const CriterionContext& ctx, int k, const TsParams& params,
                      Rng& rng, const Partition* initial) {
    if (k < 2 || std::size_t(k) >= ctx.n())
        throw std::invalid_argument("tabu_search: requires 2 <= K < n");
    if (params.tabu_len < 0)
        throw std::invalid_argument("tabu_search: tabu_len must be >= 0");
    if (params.maxiter < 1)
        throw std::invalid_argument("tabu_search: maxiter >= 1");
    if (params.sample_fraction <= 0.0 || params.sample_fraction > 1.0)
        throw std::invalid_argument("tabu_search: sample_fraction in (0,1]");

    Partition p0 = initial ? *initial : random_partition(ctx.n(), k, rng);
    validate_partition(p0, true);
    ClusterStats stats(p0, ctx);

    TabuList tabu(params.tabu_len);
    std::vector<Bitmask> class_masks = build_class_masks(stats.partition());

    Partition best = stats.partition();
    double best_w = stats.total_w();
    RunResult result;

    for (int iter = 0; iter < params.maxiter; ++iter) {
        // A move is tabu when the resulting partition would contain a class
        // equal to a stored code: an untouched class already matching one, or
        // the shrunken source, or the grown target.
        std::vector<bool> class_matches(k, false);
        int matched_count = 0;
        if (params.tabu_len > 0 && tabu.size() > 0) {
            for (int c = 0; c < k; ++c) {
                class_matches[c] = tabu.contains(class_masks[c]);
                matched_count += class_matches[c];
            }
        }

        auto is_tabu = [&](const Move& m) {
            if (tabu.size() == 0) return false;
            const int untouched =
                matched_count - class_matches[m.from_class] - class_matches[m.to_class];
            if (untouched > 0) return true;
            if (tabu.contains_with_bit_cleared(class_masks[m.from_class],
                                               std::size_t(m.object)))
                return true;
            return tabu.contains_with_bit_set(class_masks[m.to_class],
                                              std::size_t(m.object));
        };

        Candidate chosen;     // best non-tabu
        Candidate fallback;   // best regardless of tabu status, for the escape rule
        auto scan = [&](const std::vector<Move>& sample) {
            for (const Move& m : sample) {
                const double delta = stats.delta_w(m);
                if (better(m, delta, fallback)) fallback = {m, delta, true};
                if (!is_tabu(m) && better(m, delta, chosen)) chosen = {m, delta, true};
            }
        };

        const auto view = enumerate_moves(stats.partition());
        const std::size_t sample_size = std::size_t(
            std::ceil(params.sample_fraction * double(view.moves.size())));
        scan(sample_moves(stats.partition(), std::max<std::size_t>(1, sample_size), rng));
        if (!chosen.valid) {
            scan(sample_moves(stats.partition(), std::max<std::size_t>(1, sample_size), rng));
        }
        if (!chosen.valid) {
            chosen = fallback;  // escape: execute the best sampled move anyway
            ++result.escape_count;
        }

        const Move m = chosen.move;
        tabu.push(class_masks[m.from_class]);
        class_masks[m.from_class].reset(std::size_t(m.object));
        class_masks[m.to_class].set(std::size_t(m.object));
        stats.apply(m);
        if (stats.total_w() < best_w) {
            best_w = stats.total_w();
            best = stats.partition();
        }
        if (params.record_trajectory) result.trajectory.push_back(best_w);
    }

    result.best_partition = std::move(best);
    result.best_w = within_inertia(result.best_partition, ctx);
    result.iterations = std::uint64_t(params.maxiter);
    return result;
}

}  // namespace binclust
