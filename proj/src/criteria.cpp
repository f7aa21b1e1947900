#include "binclust/criteria.hpp"

#include <algorithm>
#include <stdexcept>

namespace binclust {

std::string to_string(CriterionKind kind) {
    return kind == CriterionKind::SumPairwise ? "sum" : "l1";
}

CriterionKind criterion_from_string(const std::string& name) {
    if (name == "sum") return CriterionKind::SumPairwise;
    if (name == "l1") return CriterionKind::L1Median;
    throw std::invalid_argument("unknown criterion: " + name);
}

double delta_sum(std::span<const int> cluster_members, const DissimilarityMatrix& d) {
    if (cluster_members.empty())
        throw std::invalid_argument("delta_sum: empty cluster");
    double acc = 0.0;
    for (std::size_t a = 0; a < cluster_members.size(); ++a) {
        const double* row = d.row(cluster_members[a]);
        for (std::size_t b = a + 1; b < cluster_members.size(); ++b)
            acc += row[cluster_members[b]];
    }
    return 2.0 * acc;
}

std::vector<std::uint8_t> median_vector(std::span<const int> cluster_members,
                                        const BinaryDataset& data) {
    if (cluster_members.empty())
        throw std::invalid_argument("median_vector: empty cluster");
    const std::size_t p = data.p();
    std::vector<int> ones(p, 0);
    for (int i : cluster_members) {
        const std::uint8_t* row = data.row(i);
        for (std::size_t j = 0; j < p; ++j) ones[j] += row[j];
    }
    const int size = int(cluster_members.size());
    std::vector<std::uint8_t> med(p, 0);
    for (std::size_t j = 0; j < p; ++j) med[j] = (2 * ones[j] > size) ? 1 : 0;
    return med;
}

double delta_l1(std::span<const int> cluster_members, const BinaryDataset& data) {
    if (cluster_members.empty())
        throw std::invalid_argument("delta_l1: empty cluster");
    const std::size_t p = data.p();
    std::vector<int> ones(p, 0);
    for (int i : cluster_members) {
        const std::uint8_t* row = data.row(i);
        for (std::size_t j = 0; j < p; ++j) ones[j] += row[j];
    }
    const int size = int(cluster_members.size());
    long long acc = 0;
    for (std::size_t j = 0; j < p; ++j) acc += std::min(ones[j], size - ones[j]);
    return double(acc);
}

double within_inertia(const Partition& p, const CriterionContext& ctx) {
    auto members = class_members(p);
    double w = 0.0;
    for (const auto& cluster : members) {
        if (cluster.empty())
            throw std::invalid_argument("within_inertia: empty class");
        w += ctx.kind == CriterionKind::SumPairwise
                 ? delta_sum(cluster, *ctx.diss)
                 : delta_l1(cluster, *ctx.data);
    }
    return w;
}

double total_inertia(const DissimilarityMatrix& d) {
    double acc = 0.0;
    for (std::size_t i = 0; i < d.n(); ++i) {
        const double* row = d.row(i);
        for (std::size_t j = i + 1; j < d.n(); ++j) acc += row[j];
    }
    return 2.0 * acc;
}

double between_inertia(const Partition& p, const CriterionContext& ctx) {
    return total_inertia(*ctx.diss) - within_inertia(p, ctx);
}

// ---------------------------------------------------------------------------
// ClusterStats

ClusterStats::ClusterStats(Partition p, const CriterionContext& ctx)
    : partition_(std::move(p)), ctx_(&ctx) {
    validate_partition(partition_);
    const std::size_t n = partition_.n();
    const int k = partition_.num_classes;
    sizes_.assign(k, 0);
    for (int c : partition_.assign) ++sizes_[c];

    cached_delta_.assign(k, 0.0);
    if (ctx_->kind == CriterionKind::SumPairwise) {
        if (!ctx_->diss || ctx_->diss->n() != n)
            throw std::invalid_argument("ClusterStats: dissimilarity matrix required");
        point_cluster_sums_.assign(n * k, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double* row = ctx_->diss->row(i);
            double* sums = point_cluster_sums_.data() + i * k;
            for (std::size_t j = 0; j < n; ++j) sums[partition_.assign[j]] += row[j];
        }
        for (std::size_t i = 0; i < n; ++i)
            cached_delta_[partition_.assign[i]] +=
                point_cluster_sums_[i * k + partition_.assign[i]];
    } else {
        if (!ctx_->data || ctx_->data->n() != n)
            throw std::invalid_argument("ClusterStats: dataset required");
        const std::size_t pdim = ctx_->data->p();
        one_counts_.assign(std::size_t(k) * pdim, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint8_t* row = ctx_->data->row(i);
            int* ones = one_counts_.data() + std::size_t(partition_.assign[i]) * pdim;
            for (std::size_t j = 0; j < pdim; ++j) ones[j] += row[j];
        }
        for (int c = 0; c < k; ++c) cached_delta_[c] = cluster_delta_l1(c);
    }
    total_w_ = 0.0;
    for (double d : cached_delta_) total_w_ += d;
}

double ClusterStats::cluster_delta_l1(int k) const {
    const std::size_t pdim = ctx_->data->p();
    const int* ones = one_counts_.data() + std::size_t(k) * pdim;
    const int size = sizes_[k];
    long long acc = 0;
    for (std::size_t j = 0; j < pdim; ++j) acc += std::min(ones[j], size - ones[j]);
    return double(acc);
}

void ClusterStats::check_move(const Move& m) const {
    if (m.object < 0 || std::size_t(m.object) >= partition_.n())
        throw std::invalid_argument("move: object index out of range");
    if (m.to_class < 0 || m.to_class >= partition_.num_classes)
        throw std::invalid_argument("move: target class out of range");
    if (m.from_class == m.to_class)
        throw std::invalid_argument("move: from_class equals to_class");
    if (partition_.assign[m.object] != m.from_class)
        throw std::invalid_argument("move: stale from_class");
    if (sizes_[m.from_class] < 2)
        throw std::invalid_argument("move: would empty a class");
}

double ClusterStats::delta_w(const Move& m) const {
    check_move(m);
    if (ctx_->kind == CriterionKind::SumPairwise) {
        const double* sums = point_cluster_sums_.data() +
                             std::size_t(m.object) * partition_.num_classes;
        return 2.0 * (sums[m.to_class] - sums[m.from_class]);
    }
    const std::size_t pdim = ctx_->data->p();
    const std::uint8_t* row = ctx_->data->row(m.object);
    const int* from_ones = one_counts_.data() + std::size_t(m.from_class) * pdim;
    const int* to_ones = one_counts_.data() + std::size_t(m.to_class) * pdim;
    const int from_size = sizes_[m.from_class] - 1;
    const int to_size = sizes_[m.to_class] + 1;
    long long acc = 0;
    for (std::size_t j = 0; j < pdim; ++j) {
        const int f = from_ones[j] - row[j];
        const int t = to_ones[j] + row[j];
        acc += std::min(f, from_size - f) + std::min(t, to_size - t);
    }
    return double(acc) - cached_delta_[m.from_class] - cached_delta_[m.to_class];
}

void ClusterStats::apply(const Move& m) {
    check_move(m);
    const int k = partition_.num_classes;
    if (ctx_->kind == CriterionKind::SumPairwise) {
        const double* sums = point_cluster_sums_.data() + std::size_t(m.object) * k;
        const double delta = 2.0 * (sums[m.to_class] - sums[m.from_class]);
        cached_delta_[m.from_class] -= 2.0 * sums[m.from_class];
        cached_delta_[m.to_class] += 2.0 * sums[m.to_class];
        total_w_ += delta;
        const double* drow = ctx_->diss->row(m.object);
        double* base = point_cluster_sums_.data();
        for (std::size_t i = 0; i < partition_.n(); ++i, base += k) {
            base[m.from_class] -= drow[i];
            base[m.to_class] += drow[i];
        }
    } else {
        const std::size_t pdim = ctx_->data->p();
        const std::uint8_t* row = ctx_->data->row(m.object);
        int* from_ones = one_counts_.data() + std::size_t(m.from_class) * pdim;
        int* to_ones = one_counts_.data() + std::size_t(m.to_class) * pdim;
        for (std::size_t j = 0; j < pdim; ++j) {
            from_ones[j] -= row[j];
            to_ones[j] += row[j];
        }
        total_w_ -= cached_delta_[m.from_class] + cached_delta_[m.to_class];
        --sizes_[m.from_class];
        ++sizes_[m.to_class];
        cached_delta_[m.from_class] = cluster_delta_l1(m.from_class);
        cached_delta_[m.to_class] = cluster_delta_l1(m.to_class);
        total_w_ += cached_delta_[m.from_class] + cached_delta_[m.to_class];
        partition_.assign[m.object] = m.to_class;
        return;
    }
    --sizes_[m.from_class];
    ++sizes_[m.to_class];
    partition_.assign[m.object] = m.to_class;
}

Move ClusterStats::random_move(Rng& rng) const {
    const std::size_t n = partition_.n();
    const int k = partition_.num_classes;
    // Objects in singleton classes are locked; K < n guarantees at least one
    // class of size >= 2, so rejection terminates quickly.
    for (int attempts = 0; attempts < 1 << 20; ++attempts) {
        const int obj = int(uniform_index(rng, n));
        const int from = partition_.assign[obj];
        if (sizes_[from] < 2) continue;
        int to = int(uniform_index(rng, std::size_t(k - 1)));
        if (to >= from) ++to;
        return Move(obj, from, to);
    }
    throw std::runtime_error("random_move: no legal move found");
}

bool ClusterStats::operator==(const ClusterStats& other) const {
    return partition_.assign == other.partition_.assign &&
           partition_.num_classes == other.partition_.num_classes &&
           sizes_ == other.sizes_ && cached_delta_ == other.cached_delta_ &&
           total_w_ == other.total_w_ &&
           point_cluster_sums_ == other.point_cluster_sums_ &&
           one_counts_ == other.one_counts_;
}

}  // namespace binclust
