#include "binclust/genetic.hpp"

#include <algorithm>
#include <stdexcept>

#include "binclust/neighborhood.hpp"

namespace binclust {

double fitness(const Partition& p, const CriterionContext& ctx) {
    const double total = total_inertia(*ctx.diss);
    if (total <= 0.0)
        throw std::domain_error("fitness: total inertia is zero (all rows identical)");
    return between_inertia(p, ctx) / total;
}

std::pair<const Chromosome*, const Chromosome*> select_parents(
    const std::vector<Chromosome>& pop, Rng& rng) {
    if (pop.size() < 2)
        throw std::invalid_argument("select_parents: population size must be >= 2");
    const std::size_t a = uniform_index(rng, pop.size());
    std::size_t b = uniform_index(rng, pop.size() - 1);
    if (b >= a) ++b;
    if (pop[b].fitness > pop[a].fitness) return {&pop[b], &pop[a]};
    return {&pop[a], &pop[b]};
}

Partition crossover(const Partition& dominant, const Partition& other, Rng& rng) {
    if (dominant.n() != other.n() || dominant.num_classes != other.num_classes)
        throw std::invalid_argument("crossover: parents must encode the same problem");
    const int k = dominant.num_classes;
    const int copied = int(uniform_index(rng, std::size_t(k)));
    Partition son = other;
    for (std::size_t i = 0; i < dominant.n(); ++i)
        if (dominant.assign[i] == copied) son.assign[i] = copied;

    auto sizes = class_sizes(son);
    for (int c = 0; c < k; ++c) {
        while (sizes[c] == 0) {
            const int largest =
                int(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
            // pick a uniformly random member of the largest class
            std::size_t pick = uniform_index(rng, std::size_t(sizes[largest]));
            for (std::size_t i = 0; i < son.n(); ++i) {
                if (son.assign[i] != largest) continue;
                if (pick-- == 0) {
                    son.assign[i] = c;
                    break;
                }
            }
            --sizes[largest];
            ++sizes[c];
        }
    }
    return son;
}

Partition mutate(const Partition& p, Rng& rng) {
    Partition out = p;
    apply_move_unchecked(out, random_move(p, rng));
    return out;
}

namespace {

double fitness_variance(const std::vector<Chromosome>& pop) {
    double mean = 0.0;
    for (const auto& c : pop) mean += c.fitness;
    mean /= double(pop.size());
    double var = 0.0;
    for (const auto& c : pop) var += (c.fitness - mean) * (c.fitness - mean);
    return var / double(pop.size());
}

// Roulette wheel proportional to fitness; uniform fallback when the whole
// population has zero fitness.
std::size_t roulette_pick(const std::vector<Chromosome>& pop, Rng& rng) {
    double total = 0.0;
    for (const auto& c : pop) total += c.fitness;
    if (total <= 0.0) return uniform_index(rng, pop.size());
    const double u = uniform01(rng) * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        acc += pop[i].fitness;
        if (u < acc) return i;
    }
    return pop.size() - 1;
}

}  // namespace

RunResult genetic_algorithm(const CriterionContext& ctx, int k, const GaParams& params,
                            Rng& rng) {
    if (k < 2 || std::size_t(k) >= ctx.n())
        throw std::invalid_argument("genetic_algorithm: requires 2 <= K < n");
    if (params.pop_size < 2)
        throw std::invalid_argument("genetic_algorithm: pop_size >= 2");
    if (params.elite_count < 0 || params.elite_count >= params.pop_size)
        throw std::invalid_argument("genetic_algorithm: elite_count < pop_size");
    if (params.p_crossover < 0.0 || params.p_crossover > 1.0 ||
        params.p_mutation < 0.0 || params.p_mutation > 1.0)
        throw std::invalid_argument("genetic_algorithm: probabilities in [0,1]");

    std::vector<Chromosome> pop;
    pop.reserve(params.pop_size);
    for (int i = 0; i < params.pop_size; ++i) {
        Chromosome c;
        c.partition = random_partition(ctx.n(), k, rng);
        c.fitness = fitness(c.partition, ctx);
        pop.push_back(std::move(c));
    }

    auto best_of = [](const std::vector<Chromosome>& v) {
        std::size_t b = 0;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i].fitness > v[b].fitness) b = i;
        return b;
    };

    Chromosome best = pop[best_of(pop)];
    RunResult result;
    const double total = total_inertia(*ctx.diss);
    std::uint64_t generations = 0;

    for (int gen = 0; gen < params.maxiter; ++gen) {
        if (fitness_variance(pop) < params.epsilon) break;
        ++generations;

        std::vector<Chromosome> next;
        next.reserve(params.pop_size);
        // elites survive unchanged (no mutation on elites)
        std::vector<std::size_t> order(pop.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&pop](std::size_t a, std::size_t b) {
            return pop[a].fitness > pop[b].fitness;
        });
        for (int e = 0; e < params.elite_count; ++e) next.push_back(pop[order[e]]);

        while (int(next.size()) < params.pop_size) {
            Chromosome child;
            if (uniform01(rng) < params.p_crossover) {
                auto [dominant, other] = select_parents(pop, rng);
                child.partition = crossover(dominant->partition, other->partition, rng);
            } else {
                child = pop[roulette_pick(pop, rng)];
            }
            if (uniform01(rng) < params.p_mutation)
                child.partition = mutate(child.partition, rng);
            child.fitness = fitness(child.partition, ctx);
            next.push_back(std::move(child));
        }
        pop = std::move(next);

        const Chromosome& gen_best = pop[best_of(pop)];
        if (gen_best.fitness > best.fitness) best = gen_best;
        if (params.record_trajectory)
            result.trajectory.push_back(total * (1.0 - best.fitness));
    }

    result.best_partition = best.partition;
    result.best_w = within_inertia(result.best_partition, ctx);
    result.iterations = generations;
    return result;
}

}  // namespace binclust
