#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "binclust/criteria.hpp"
#include "test_util.hpp"

using namespace binclust;

namespace {

CriterionContext make_ctx(const BinaryDataset& data, const DissimilarityMatrix& diss,
                          CriterionKind kind) {
    return CriterionContext{&data, &diss, kind};
}

}  // namespace

TEST_CASE("delta_sum") {
    auto data = testutil::from_rows({{1, 1, 1}, {0, 0, 1}, {0, 1, 0}, {1, 1, 0},
                                     {0, 0, 0}, {1, 0, 1}});
    auto d = compute_dissimilarity_matrix(data, DissimilarityKind::L1);

    std::vector<int> singleton{2};
    CHECK(delta_sum(singleton, d) == 0.0);

    // ordered-pair convention: cluster {0,1} counts d(0,1) twice
    std::vector<int> pair{0, 1};
    CHECK(delta_sum(pair, d) == 2.0 * d.at(0, 1));

    // brute-force double loop over a 6-element cluster
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    double brute = 0.0;
    for (int i : all)
        for (int j : all) brute += d.at(i, j);
    CHECK(delta_sum(all, d) == brute);

    CHECK_THROWS_AS(delta_sum(std::vector<int>{}, d), std::invalid_argument);
}

TEST_CASE("median_vector") {
    auto data = testutil::from_rows({{1, 0}, {1, 1}, {0, 1}, {0, 0}});
    std::vector<int> cluster{0, 1, 2};
    CHECK(median_vector(cluster, data) == std::vector<std::uint8_t>{1, 1});

    std::vector<int> one{3};
    CHECK(median_vector(one, data) == std::vector<std::uint8_t>{0, 0});

    SUBCASE("tie resolves to zero and delta_l1 is tie-invariant") {
        auto tied = testutil::from_rows({{1, 0}, {0, 0}});
        std::vector<int> both{0, 1};
        CHECK(median_vector(both, tied) == std::vector<std::uint8_t>{0, 0});
        // distance sum under either tie choice: coordinate 0 has one 1 and
        // one 0, so both medians give total distance 1
        double to_zero = 0.0, to_one = 0.0;
        for (int i : both) {
            to_zero += tied.at(i, 0) != 0;
            to_one += tied.at(i, 0) != 1;
        }
        CHECK(to_zero == to_one);
        CHECK(delta_l1(both, tied) == to_zero);
    }
}

TEST_CASE("delta_l1") {
    auto data = testutil::from_rows({{1, 0}, {1, 1}, {0, 1}});
    std::vector<int> one{0};
    CHECK(delta_l1(one, data) == 0.0);

    std::vector<int> all{0, 1, 2};
    CHECK(delta_l1(all, data) == 2.0);  // distances 1,0,1 to median [1,1]

    SUBCASE("closed form equals the explicit distance sum") {
        Rng rng(17);
        for (int trial = 0; trial < 50; ++trial) {
            auto ds = testutil::random_dataset(9, 7, rng);
            std::vector<int> cluster;
            for (int i = 0; i < 9; ++i)
                if (uniform01(rng) < 0.6) cluster.push_back(i);
            if (cluster.empty()) cluster.push_back(0);
            auto med = median_vector(cluster, ds);
            double explicit_sum = 0.0;
            for (int i : cluster)
                for (std::size_t j = 0; j < 7; ++j)
                    explicit_sum += ds.at(i, j) != med[j] ? 1.0 : 0.0;
            CHECK(delta_l1(cluster, ds) == explicit_sum);
        }
    }
}

TEST_CASE("within, total and between inertia") {
    SUBCASE("identical rows give zero W") {
        auto data = testutil::from_rows({{1, 0, 1}, {1, 0, 1}, {1, 0, 1}, {1, 0, 1}});
        auto d = compute_dissimilarity_matrix(data, DissimilarityKind::L1);
        auto p = testutil::make_partition({0, 0, 1, 1}, 2);
        CHECK(within_inertia(p, make_ctx(data, d, CriterionKind::SumPairwise)) == 0.0);
        CHECK(within_inertia(p, make_ctx(data, d, CriterionKind::L1Median)) == 0.0);
        CHECK(total_inertia(d) == 0.0);
    }
    SUBCASE("K = n-1 leaves a single contributing pair") {
        auto data = testutil::from_rows({{1, 1}, {0, 0}, {1, 0}, {0, 1}});
        auto d = compute_dissimilarity_matrix(data, DissimilarityKind::L1);
        auto p = testutil::make_partition({0, 0, 1, 2}, 3);
        auto ctx = make_ctx(data, d, CriterionKind::SumPairwise);
        CHECK(within_inertia(p, ctx) == 2.0 * d.at(0, 1));
    }
    SUBCASE("two objects, Eq. double-sum convention") {
        auto data = testutil::from_rows({{1, 1}, {0, 0}});
        auto d = compute_dissimilarity_matrix(data, DissimilarityKind::L1);
        CHECK(total_inertia(d) == 4.0);  // d(0,1) = 2 counted both ways
    }
    SUBCASE("single cluster: W equals I for SumPairwise, so B = 0") {
        Rng rng(23);
        auto data = testutil::random_dataset(7, 5, rng);
        auto d = compute_dissimilarity_matrix(data, DissimilarityKind::L1);
        auto p = testutil::make_partition({0, 0, 0, 0, 0, 0, 0}, 1);
        auto ctx = make_ctx(data, d, CriterionKind::SumPairwise);
        CHECK(within_inertia(p, ctx) == total_inertia(d));
        CHECK(between_inertia(p, ctx) == 0.0);
    }
    SUBCASE("homogeneous classes give B = I") {
        auto data = testutil::from_rows(
            {{1, 1, 1}, {1, 1, 1}, {0, 0, 0}, {0, 0, 0}});
        auto d = compute_dissimilarity_matrix(data, DissimilarityKind::L1);
        auto p = testutil::make_partition({0, 0, 1, 1}, 2);
        auto ctx = make_ctx(data, d, CriterionKind::SumPairwise);
        CHECK(within_inertia(p, ctx) == 0.0);
        CHECK(between_inertia(p, ctx) == total_inertia(d));
    }
    SUBCASE("matches naive recomputation and B >= 0 on random partitions") {
        Rng rng(31);
        auto data = testutil::random_dataset(14, 6, rng);
        for (auto dk : {DissimilarityKind::L1, DissimilarityKind::Jaccard}) {
            auto d = compute_dissimilarity_matrix(data, dk);
            for (auto ck : {CriterionKind::SumPairwise, CriterionKind::L1Median}) {
                auto ctx = make_ctx(data, d, ck);
                for (int trial = 0; trial < 250; ++trial) {
                    auto p = random_partition(14, 2 + int(uniform_index(rng, 4)), rng);
                    const double w = within_inertia(p, ctx);
                    CHECK(w == doctest::Approx(testutil::naive_within(p, ctx))
                                   .epsilon(1e-12));
                    CHECK(w >= 0.0);
                    CHECK(between_inertia(p, ctx) >= 0.0);
                }
            }
        }
    }
    SUBCASE("permutation invariance") {
        Rng rng(37);
        auto data = testutil::random_dataset(10, 5, rng);
        auto d = compute_dissimilarity_matrix(data, DissimilarityKind::L1);
        for (auto ck : {CriterionKind::SumPairwise, CriterionKind::L1Median}) {
            auto ctx = make_ctx(data, d, ck);
            auto p = random_partition(10, 3, rng);
            auto relabeled = p;
            for (auto& c : relabeled.assign) c = (c + 1) % 3;
            CHECK(within_inertia(p, ctx) == within_inertia(relabeled, ctx));
        }
    }
}

TEST_CASE("cluster stats incremental updates") {
    Rng rng(41);

    SUBCASE("moves over identical rows cost nothing") {
        auto data = testutil::from_rows({{1, 1}, {1, 1}, {1, 1}, {1, 1}});
        auto d = compute_dissimilarity_matrix(data, DissimilarityKind::L1);
        auto ctx = make_ctx(data, d, CriterionKind::SumPairwise);
        ClusterStats stats(testutil::make_partition({0, 0, 1, 1}, 2), ctx);
        CHECK(stats.delta_w(Move(0, 0, 1)) == 0.0);
    }

    SUBCASE("4-object L1 instance: every move matches the recompute exactly") {
        auto data = testutil::from_rows({{1, 0, 1}, {0, 0, 1}, {1, 1, 0}, {0, 1, 0}});
        auto d = compute_dissimilarity_matrix(data, DissimilarityKind::L1);
        for (auto ck : {CriterionKind::SumPairwise, CriterionKind::L1Median}) {
            auto ctx = make_ctx(data, d, ck);
            auto p = testutil::make_partition({0, 0, 1, 1}, 2);
            ClusterStats stats(p, ctx);
            for (const auto& m :
                 {Move(0, 0, 1), Move(1, 0, 1), Move(2, 1, 0), Move(3, 1, 0)}) {
                const double incremental = stats.delta_w(m);
                const double before = within_inertia(p, ctx);
                const double after = within_inertia(apply_move(p, m), ctx);
                CHECK(incremental == after - before);
            }
        }
    }

    SUBCASE("incremental and recomputed deltas agree over random runs") {
        for (auto dk : {DissimilarityKind::L1, DissimilarityKind::Jaccard}) {
            for (auto ck : {CriterionKind::SumPairwise, CriterionKind::L1Median}) {
                auto data = testutil::random_dataset(12, 6, rng);
                auto d = compute_dissimilarity_matrix(data, dk);
                auto ctx = make_ctx(data, d, ck);
                ClusterStats stats(random_partition(12, 3, rng), ctx);
                for (int step = 0; step < 500; ++step) {
                    const Move m = stats.random_move(rng);
                    const double inc = stats.delta_w(m);
                    const double before = within_inertia(stats.partition(), ctx);
                    const double after =
                        within_inertia(apply_move(stats.partition(), m), ctx);
                    const bool integral =
                        ck == CriterionKind::L1Median || dk == DissimilarityKind::L1;
                    if (integral) {
                        CHECK(inc == after - before);
                    } else {
                        CHECK(inc == doctest::Approx(after - before).epsilon(1e-9));
                    }
                    stats.apply(m);
                    CHECK(stats.total_w() ==
                          doctest::Approx(after).epsilon(1e-9));
                }
            }
        }
    }

    SUBCASE("apply then inverse is an involution (integer domains)") {
        auto data = testutil::random_dataset(10, 5, rng);
        auto d = compute_dissimilarity_matrix(data, DissimilarityKind::L1);
        for (auto ck : {CriterionKind::SumPairwise, CriterionKind::L1Median}) {
            auto ctx = make_ctx(data, d, ck);
            ClusterStats stats(random_partition(10, 3, rng), ctx);
            for (int step = 0; step < 100; ++step) {
                const ClusterStats snapshot = stats;
                const Move m = stats.random_move(rng);
                stats.apply(m);
                stats.apply(m.inverse());
                CHECK(stats == snapshot);
            }
        }
    }

    SUBCASE("stats equal a from-scratch rebuild after many moves") {
        for (auto ck : {CriterionKind::SumPairwise, CriterionKind::L1Median}) {
            auto data = testutil::random_dataset(11, 4, rng);
            auto d = compute_dissimilarity_matrix(data, DissimilarityKind::L1);
            auto ctx = make_ctx(data, d, ck);
            ClusterStats stats(random_partition(11, 3, rng), ctx);
            int total_size = 0;
            for (int step = 0; step < 1000; ++step) stats.apply(stats.random_move(rng));
            for (int s : stats.sizes()) total_size += s;
            CHECK(total_size == 11);
            ClusterStats rebuilt(stats.partition(), ctx);
            CHECK(stats == rebuilt);
        }
    }

    SUBCASE("illegal moves are rejected") {
        auto data = testutil::random_dataset(6, 4, rng);
        auto d = compute_dissimilarity_matrix(data, DissimilarityKind::L1);
        auto ctx = make_ctx(data, d, CriterionKind::SumPairwise);
        ClusterStats stats(testutil::make_partition({0, 1, 1, 1, 1, 1}, 2), ctx);
        CHECK_THROWS_AS(stats.delta_w(Move(0, 0, 1)), std::invalid_argument);  // empties
        CHECK_THROWS_AS(stats.delta_w(Move(1, 0, 1)), std::invalid_argument);  // stale
        CHECK_THROWS_AS(stats.delta_w(Move(1, 1, 1)), std::invalid_argument);  // same class
    }
}
