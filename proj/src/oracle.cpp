#include "binclust/oracle.hpp"

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace binclust {

void enumerate_partitions(int n, int k,
                          const std::function<void(const std::vector<int>&)>& visit,
                          int guard) {
    if (guard > kOracleMaxGuard) guard = kOracleMaxGuard;
    if (n > guard)
        throw std::runtime_error("enumerate_partitions: n = " + std::to_string(n) +
                                 " exceeds the guard of " + std::to_string(guard));
    if (k < 2 || k >= n)
        throw std::invalid_argument("enumerate_partitions: requires 2 <= k < n");

    // Restricted growth strings: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
    // Emitting only strings whose final label count equals k; branches that
    // cannot reach k labels are pruned.
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            if (used == k) visit(a);
            return;
        }
        const int remaining = n - i;
        // even opening a new label every step cannot reach k
        if (used + remaining < k) return;
        const int top = used < k ? used : k - 1;
        for (int c = 0; c <= top; ++c) {
            a[i] = c;
            rec(i + 1, c == used ? used + 1 : used);
        }
    };
    a[0] = 0;
    rec(1, 1);
}

std::pair<Partition, double> brute_force_optimum(const CriterionContext& ctx, int k,
                                                 int guard) {
    const int n = int(ctx.n());
    const std::size_t p = ctx.data ? ctx.data->p() : 0;

    std::vector<int> best_assign;
    double best_w = std::numeric_limits<double>::infinity();
    std::vector<int> ones;  // scratch for L1Median
    if (ctx.kind == CriterionKind::L1Median) ones.resize(std::size_t(k) * p);
    std::vector<int> sizes(k);

    enumerate_partitions(n, k, [&](const std::vector<int>& assign) {
        double w = 0.0;
        if (ctx.kind == CriterionKind::SumPairwise) {
            for (int i = 0; i < n; ++i) {
                const double* row = ctx.diss->row(i);
                for (int j = i + 1; j < n; ++j)
                    if (assign[i] == assign[j]) w += row[j];
            }
            w *= 2.0;
        } else {
            std::fill(ones.begin(), ones.end(), 0);
            std::fill(sizes.begin(), sizes.end(), 0);
            for (int i = 0; i < n; ++i) {
                const std::uint8_t* row = ctx.data->row(i);
                int* o = ones.data() + std::size_t(assign[i]) * p;
                for (std::size_t j = 0; j < p; ++j) o[j] += row[j];
                ++sizes[assign[i]];
            }
            long long acc = 0;
            for (int c = 0; c < k; ++c) {
                const int* o = ones.data() + std::size_t(c) * p;
                for (std::size_t j = 0; j < p; ++j)
                    acc += std::min(o[j], sizes[c] - o[j]);
            }
            w = double(acc);
        }
        if (w < best_w) {
            best_w = w;
            best_assign = assign;
        }
    }, guard);

    Partition best;
    best.assign = std::move(best_assign);
    best.num_classes = k;
    return {std::move(best), best_w};
}

MonotonicityReport verify_monotonicity(const BinaryDataset& data,
                                       const DissimilarityMatrix& diss, int k_max,
                                       int guard) {
    if (k_max < 2 || std::size_t(k_max) >= data.n())
        throw std::invalid_argument("verify_monotonicity: requires 2 <= k_max < n");

    MonotonicityReport report;
    CriterionContext sum_ctx{&data, &diss, CriterionKind::SumPairwise};
    CriterionContext l1_ctx{&data, &diss, CriterionKind::L1Median};
    for (int k = 2; k <= k_max; ++k) {
        report.optima_sum.push_back(brute_force_optimum(sum_ctx, k, guard).second);
        report.optima_l1.push_back(brute_force_optimum(l1_ctx, k, guard).second);
    }
    report.ok = true;
    for (std::size_t i = 1; i < report.optima_sum.size(); ++i) {
        if (report.optima_sum[i] > report.optima_sum[i - 1]) report.ok = false;
        if (report.optima_l1[i] > report.optima_l1[i - 1]) report.ok = false;
    }
    return report;
}

}  // namespace binclust
