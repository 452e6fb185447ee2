#include <catch_amalgamated.hpp>

#include "unirank/sets.hpp"
#include "unirank/stats.hpp"
#include "unirank/utable.hpp"

using namespace unirank;

TEST_CASE("membership basics") {
    CHECK(in_U(Partition{1}, 0));
    CHECK_FALSE(in_U(Partition{}, 0));
    // l(lambda) <= m forces j = 0 and an empty beta, so V is unreachable
    CHECK_FALSE(in_V(Partition{9, 4}, 3));
    CHECK_FALSE(in_V(Partition{}, 1));
    // (1) has -1 in its rank-set, so it cannot lie in A(1, 1)
    CHECK_FALSE(in_A1(Partition{1}));
}

TEST_CASE("cardinality bridges to u(m, n)") {
    const int N = 35;
    const RankTable u = u_table_from_gf(6, N);
    for (int n = 1; n <= N; ++n) {
        std::vector<long long> u_count(6, 0), v_count(6, 0);
        long long a_count = 0, b_count = 0;
        for_each_partition(n, [&](const std::vector<int>& parts) {
            const Partition lam = Partition::unchecked(std::vector<int>(parts));
            for (int m = 0; m <= 5; ++m) {
                if (in_U(lam, m)) u_count[static_cast<std::size_t>(m)]++;
                if (in_V(lam, m + 1)) v_count[static_cast<std::size_t>(m)]++;
            }
            if (in_A1(lam)) a_count++;
            if (in_B1(lam)) b_count++;
        });
        for (int m = 0; m <= 5; ++m) {
            REQUIRE(BigInt(u_count[static_cast<std::size_t>(m)]) == u.at(m, n));
            REQUIRE(BigInt(v_count[static_cast<std::size_t>(m)]) == u.at(m + 1, n));
        }
        REQUIRE(BigInt(a_count) == u.at(1, n));
        REQUIRE(BigInt(b_count) == u.at(1, n));
    }
}

TEST_CASE("U(0, n) counts ospt(n) and the nonnegative-rank tail") {
    const int N = 35;
    for (int n = 2; n <= N; ++n) {
        const PartitionCensus census = census_partitions(n);
        long long u0 = 0, u0_plus_u1 = 0;
        for_each_partition(n, [&](const std::vector<int>& parts) {
            const Partition lam = Partition::unchecked(std::vector<int>(parts));
            if (in_U(lam, 0)) u0++;
            if (in_U(lam, 0) || in_A1(lam)) u0_plus_u1++;
        });
        REQUIRE(u0 == census.ospt());
        long long tail = 0;  // sum of N(m, n) over m <= 0
        for (int m = -n; m <= 0; ++m) tail += census.N(m);
        REQUIRE(u0_plus_u1 == tail);
    }
}

TEST_CASE("alternative count through the shifted rank condition") {
    // #U(m, n) equals the number of partitions of n - m(m-1)/2 whose rank
    // is at most -2m with m-1 in the rank-set
    const RankTable u = u_table_from_gf(5, 35);
    for (int n = 1; n <= 35; ++n)
        for (int m = 0; m <= 5; ++m) {
            const int shifted = n - m * (m - 1) / 2;
            if (shifted < 0) continue;
            long long count = 0;
            for_each_partition(shifted, [&](const std::vector<int>& parts) {
                const Partition mu = Partition::unchecked(std::vector<int>(parts));
                if (rank(mu) <= -2 * m && rank_set_contains(mu, m - 1)) count++;
            });
            REQUIRE(BigInt(count) == u.at(m, n));
        }
}

TEST_CASE("worked classification examples") {
    const Partition v2_example = assemble_symbol(
        Partition{5, 4, 4, 3, 2, 2}, Partition{5, 3, 2, 2, 2, 1, 1, 1, 1}, 0, 5);
    CHECK(v2_example.weight() == 63);
    CHECK(in_V(v2_example, 1));
    CHECK(v_block(v2_example, 1) == 2);

    const Partition v3_example = assemble_symbol(
        Partition{7, 6, 5, 3, 1}, Partition{7, 7, 6, 6, 4, 3, 3, 2}, 0, 7);
    CHECK(v3_example.weight() == 109);
    CHECK(v_block(v3_example, 1) == 3);

    const Partition p4_example =
        assemble_symbol(Partition{6, 6, 5, 3, 3, 2, 2, 1, 1},
                        Partition{6, 6, 6, 5, 4, 2, 1, 1, 1}, 0, 6);
    CHECK(p4_example.weight() == 97);
    CHECK(in_P0(p4_example));
    CHECK(p_block(p4_example) == 4);

    const Partition v_m2_example = assemble_symbol(
        Partition{5, 5, 3, 2, 2, 1}, Partition{3, 3, 3, 2, 2, 2, 1, 1, 1}, 2, 3);
    CHECK(v_m2_example.weight() == 51);
    CHECK(in_V(v_m2_example, 3));
    CHECK(v_block(v_m2_example, 3) == 2);
}

TEST_CASE("block decompositions are set partitions") {
    for (int n = 1; n <= 35; ++n) {
        long long u0 = 0, v1 = 0, p0 = 0;
        std::vector<long long> u0_blocks(6, 0), v1_blocks(4, 0), p_blocks(11, 0);
        std::vector<long long> vm(4, 0), vm_blocks_sum(4, 0);
        for_each_partition(n, [&](const std::vector<int>& parts) {
            const Partition lam = Partition::unchecked(std::vector<int>(parts));
            if (in_U(lam, 0)) {
                u0++;
                const int b = u0_block(lam);
                REQUIRE((b >= 1 && b <= 5));
                u0_blocks[static_cast<std::size_t>(b)]++;
            }
            if (in_V(lam, 1)) {
                v1++;
                const int b = v_block(lam, 1);
                REQUIRE((b >= 1 && b <= 3));
                v1_blocks[static_cast<std::size_t>(b)]++;
            }
            if (in_P0(lam)) {
                p0++;
                const int b = p_block(lam);
                REQUIRE((b >= 1 && b <= 10));
                p_blocks[static_cast<std::size_t>(std::min(b, 10))]++;
            }
            for (int m = 1; m <= 3; ++m)
                if (in_V(lam, m + 1)) {
                    vm[static_cast<std::size_t>(m)]++;
                    const int b = v_block(lam, m + 1);
                    REQUIRE((b == 1 || b == 2));
                    vm_blocks_sum[static_cast<std::size_t>(m)]++;
                }
        });
        long long s = 0;
        for (int b = 1; b <= 5; ++b) s += u0_blocks[static_cast<std::size_t>(b)];
        REQUIRE(s == u0);
        s = 0;
        for (int b = 1; b <= 3; ++b) s += v1_blocks[static_cast<std::size_t>(b)];
        REQUIRE(s == v1);
        s = 0;
        for (int b = 1; b <= 10; ++b) s += p_blocks[static_cast<std::size_t>(b)];
        REQUIRE(s == p0);
        for (int m = 1; m <= 3; ++m)
            REQUIRE(vm[static_cast<std::size_t>(m)] ==
                    vm_blocks_sum[static_cast<std::size_t>(m)]);
        // P(0, n) is exactly the rank-zero class
        REQUIRE(p0 == census_partitions(std::max(n, 1)).N(0));
    }
}

TEST_CASE("set enumeration API") {
    const SetSpec p0{SetFamily::P0, 0, std::nullopt};
    CHECK(enumerate_set(p0, 4).size() == 1);  // only (2, 2)
    CHECK(enumerate_set(p0, 4)[0] == Partition{2, 2});

    const SetSpec u0_b4{SetFamily::U, 0, 4};
    for (const auto& lam : enumerate_set(u0_b4, 12)) {
        CHECK(in_U(lam, 0));
        CHECK(u0_block(lam) == 4);
    }

    CHECK(classify_blocks(Partition{3, 1}, p0) == std::nullopt);  // rank 1
    CHECK_THROWS_AS(classify_blocks(Partition{1}, SetSpec{SetFamily::A1, 0, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_set(SetSpec{SetFamily::P0, 0, 11}, 5),
                    std::invalid_argument);
    // U(m, n) for m >= 1 exposes no block structure
    CHECK_THROWS_AS(classify_blocks(Partition{1}, SetSpec{SetFamily::U, 2, {}}),
                    std::invalid_argument);
}

TEST_CASE("escape-block witness family") {
    for (int t = 3; t <= 10; ++t) {
        std::vector<int> a(static_cast<std::size_t>(t - 3), 1);
        std::vector<int> b{2};
        for (int i = 0; i < t - 3; ++i) b.push_back(1);
        const Partition w = assemble_symbol(Partition::unchecked(std::move(a)),
                                            Partition::unchecked(std::move(b)), 0, 2);
        CHECK(w.weight() == 2 * t);
        CHECK(in_U(w, 0));
        CHECK(u0_block(w) == 4);
    }
}
