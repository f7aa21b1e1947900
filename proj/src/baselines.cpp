#include "binclust/baselines.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace binclust {

namespace {

constexpr int kMaxAlternations = 1000;  // repair can disturb descent, so cap

// Moves one object from a class of size >= 2 into each empty class: the
// object farthest from its own kernel, distance supplied by the caller.
template <typename DistanceToKernel>
bool repair_empty_classes(Partition& p, std::vector<int>& sizes,
                          DistanceToKernel&& distance) {
    bool repaired = false;
    for (int c = 0; c < p.num_classes; ++c) {
        if (sizes[c] > 0) continue;
        int worst = -1;
        double worst_d = -1.0;
        for (std::size_t i = 0; i < p.n(); ++i) {
            if (sizes[p.assign[i]] < 2) continue;
            const double d = distance(int(i));
            if (d > worst_d) {
                worst_d = d;
                worst = int(i);
            }
        }
        if (worst < 0) throw std::runtime_error("repair: no donor class found");
        --sizes[p.assign[worst]];
        p.assign[worst] = c;
        ++sizes[c];
        repaired = true;
    }
    return repaired;
}

}  // namespace

RunResult pam_medians(const CriterionContext& ctx, int k, Rng& rng,
                      const Partition* initial) {
    if (ctx.kind != CriterionKind::L1Median)
        throw std::invalid_argument("pam_medians: requires the L1Median criterion");
    if (!ctx.data) throw std::invalid_argument("pam_medians: dataset required");
    const std::size_t n = ctx.data->n();
    const std::size_t p = ctx.data->p();
    if (k < 2 || std::size_t(k) >= n)
        throw std::invalid_argument("pam_medians: requires 2 <= K < n");

    Partition part = initial ? *initial : random_partition(n, k, rng);
    validate_partition(part, true);

    std::vector<std::uint8_t> kernels(std::size_t(k) * p, 0);
    std::vector<int> sizes(k, 0);
    auto l1_to_kernel = [&](int obj, int c) {
        const std::uint8_t* row = ctx.data->row(obj);
        const std::uint8_t* ker = kernels.data() + std::size_t(c) * p;
        int d = 0;
        for (std::size_t j = 0; j < p; ++j) d += (row[j] != ker[j]);
        return d;
    };

    std::uint64_t iterations = 0;
    for (int round = 0; round < kMaxAlternations; ++round) {
        ++iterations;
        // (a) kernels = per-class 0/1 medians
        auto members = class_members(part);
        for (int c = 0; c < k; ++c) {
            auto med = median_vector(members[c], *ctx.data);
            std::copy(med.begin(), med.end(), kernels.begin() + std::size_t(c) * p);
        }
        // (b) nearest kernel by L1; ties keep the current class
        bool changed = false;
        sizes = class_sizes(part);
        for (std::size_t i = 0; i < n; ++i) {
            const int cur = part.assign[i];
            int best_c = cur;
            int best_d = l1_to_kernel(int(i), cur);
            for (int c = 0; c < k; ++c) {
                if (c == cur) continue;
                const int d = l1_to_kernel(int(i), c);
                if (d < best_d) {
                    best_d = d;
                    best_c = c;
                }
            }
            if (best_c != cur) {
                --sizes[cur];
                ++sizes[best_c];
                part.assign[i] = best_c;
                changed = true;
            }
        }
        const bool repaired = repair_empty_classes(
            part, sizes, [&](int obj) { return double(l1_to_kernel(obj, part.assign[obj])); });
        if (!changed && !repaired) break;
    }

    RunResult result;
    result.best_partition = std::move(part);
    result.best_w = within_inertia(result.best_partition, ctx);
    result.iterations = iterations;
    return result;
}

RunResult kmedoids_binary(const CriterionContext& ctx, int k, Rng& rng,
                          const Partition* initial) {
    if (!ctx.diss) throw std::invalid_argument("kmedoids_binary: matrix required");
    const std::size_t n = ctx.diss->n();
    if (k < 2 || std::size_t(k) >= n)
        throw std::invalid_argument("kmedoids_binary: requires 2 <= K < n");

    Partition part = initial ? *initial : random_partition(n, k, rng);
    validate_partition(part, true);

    std::vector<int> medoids(k, -1);
    std::vector<int> sizes(k, 0);
    std::uint64_t iterations = 0;
    for (int round = 0; round < kMaxAlternations; ++round) {
        ++iterations;
        // medoid = member minimizing the row sum over its class, lowest index on ties
        auto members = class_members(part);
        for (int c = 0; c < k; ++c) {
            double best_sum = std::numeric_limits<double>::infinity();
            int best = -1;
            for (int i : members[c]) {
                double s = 0.0;
                for (int j : members[c]) s += ctx.diss->at(i, j);
                if (s < best_sum) {
                    best_sum = s;
                    best = i;
                }
            }
            medoids[c] = best;
        }
        // nearest medoid; ties keep the current class
        bool changed = false;
        sizes = class_sizes(part);
        for (std::size_t i = 0; i < n; ++i) {
            const int cur = part.assign[i];
            int best_c = cur;
            double best_d = ctx.diss->at(i, medoids[cur]);
            for (int c = 0; c < k; ++c) {
                if (c == cur) continue;
                const double d = ctx.diss->at(i, medoids[c]);
                if (d < best_d) {
                    best_d = d;
                    best_c = c;
                }
            }
            if (best_c != cur) {
                --sizes[cur];
                ++sizes[best_c];
                part.assign[i] = best_c;
                changed = true;
            }
        }
        const bool repaired = repair_empty_classes(part, sizes, [&](int obj) {
            return ctx.diss->at(obj, medoids[part.assign[obj]]);
        });
        if (!changed && !repaired) break;
    }

    RunResult result;
    result.best_partition = std::move(part);
    result.best_w = within_inertia(result.best_partition, ctx);
    result.iterations = iterations;
    return result;
}

Dendrogram hierarchical_average_linkage(const DissimilarityMatrix& d) {
    const std::size_t n = d.n();
    Dendrogram tree;
    tree.n_leaves = n;
    tree.merges.reserve(n - 1);

    // active clusters: id, size, and a dense inter-cluster distance table
    std::vector<int> ids(n);
    std::vector<double> sizes(n, 1.0);
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        ids[i] = int(i);
        for (std::size_t j = 0; j < n; ++j) dist[i][j] = d.at(i, j);
    }

    std::size_t active = n;
    for (std::size_t merge = 0; merge + 1 < n; ++merge) {
        std::size_t bi = 0, bj = 1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < active; ++i) {
            for (std::size_t j = i + 1; j < active; ++j) {
                const double v = dist[i][j];
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                } else if (v == best) {
                    // lexicographically smallest (id_a, id_b) pair wins
                    const int a1 = std::min(ids[i], ids[j]), b1 = std::max(ids[i], ids[j]);
                    const int a0 = std::min(ids[bi], ids[bj]), b0 = std::max(ids[bi], ids[bj]);
                    if (a1 < a0 || (a1 == a0 && b1 < b0)) {
                        bi = i;
                        bj = j;
                    }
                }
            }
        }
        tree.merges.push_back({std::min(ids[bi], ids[bj]), std::max(ids[bi], ids[bj]), best});

        // Lance-Williams update for average linkage
        const double sa = sizes[bi], sb = sizes[bj];
        for (std::size_t t = 0; t < active; ++t) {
            if (t == bi || t == bj) continue;
            dist[bi][t] = dist[t][bi] = (sa * dist[bi][t] + sb * dist[bj][t]) / (sa + sb);
        }
        ids[bi] = int(n + merge);
        sizes[bi] = sa + sb;
        // compact: move the last active cluster into slot bj
        const std::size_t last = active - 1;
        if (bj != last) {
            ids[bj] = ids[last];
            sizes[bj] = sizes[last];
            for (std::size_t t = 0; t < active; ++t) {
                dist[bj][t] = dist[last][t];
                dist[t][bj] = dist[t][last];
            }
            dist[bj][bj] = 0.0;
        }
        --active;
    }
    return tree;
}

Partition cut_dendrogram(const Dendrogram& t, int k) {
    const std::size_t n = t.n_leaves;
    if (k < 1 || std::size_t(k) > n)
        throw std::invalid_argument("cut_dendrogram: requires 1 <= k <= n");
    if (t.merges.size() != n - 1)
        throw std::invalid_argument("cut_dendrogram: malformed dendrogram");

    // replay the first n-k merges through a union-find over cluster ids
    std::vector<int> parent(2 * n - 1);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = int(i);
    auto find = [&parent](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t m = 0; m + std::size_t(k) < n; ++m) {
        const auto& mg = t.merges[m];
        const int target = int(n + m);
        parent[find(mg.a)] = target;
        parent[find(mg.b)] = target;
    }

    Partition p;
    p.assign.assign(n, -1);
    p.num_classes = k;
    std::vector<int> label(2 * n - 1, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int root = find(int(i));
        if (label[root] < 0) label[root] = next++;
        p.assign[i] = label[root];
    }
    if (next != k) throw std::runtime_error("cut_dendrogram: unexpected class count");
    return p;
}

}  // namespace binclust
