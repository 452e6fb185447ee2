#include <catch_amalgamated.hpp>

#include "unirank/enumerate.hpp"
#include "unirank/partition.hpp"

using namespace unirank;

TEST_CASE("partition construction and basic statistics") {
    const Partition lam{5, 5, 3, 3, 2, 1};
    CHECK(lam.weight() == 19);
    CHECK(lam.length() == 6);
    CHECK(lam.smallest_part() == 1);
    CHECK(lam.largest_part() == 5);
    CHECK(lam.part(7) == 0);  // parts beyond the end read as zero

    const Partition empty;
    CHECK(empty.weight() == 0);
    CHECK(empty.length() == 0);

    CHECK_THROWS_AS(Partition({3, 5}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{5, 5, 3, 3, 2, 1}) == Partition{6, 5, 4, 2, 2});
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{4}) == Partition{1, 1, 1, 1});

    // involution over every partition of n <= 40
    for (int n = 0; n <= 40; ++n)
        for_each_partition(n, [&](const std::vector<int>& parts) {
            const Partition lam = Partition::unchecked(std::vector<int>(parts));
            REQUIRE(conjugate(conjugate(lam)) == lam);
        });
}

TEST_CASE("rank") {
    CHECK(rank(Partition{5, 5, 3, 2, 2, 1}) == -1);
    CHECK(rank(Partition{7}) == 6);
    CHECK(rank(Partition{1, 1, 1}) == -2);
    CHECK(rank(Partition{}) == 0);

    // conjugation negates the rank
    for (int n = 1; n <= 30; ++n)
        for_each_partition(n, [&](const std::vector<int>& parts) {
            const Partition lam = Partition::unchecked(std::vector<int>(parts));
            REQUIRE(rank(conjugate(lam)) == -rank(lam));
        });
}

TEST_CASE("crank") {
    CHECK(crank(Partition{5, 4, 4}) == 5);   // no ones: largest part
    CHECK(crank(Partition{3, 3, 1}) == 1);   // 2 parts above one 1
    CHECK(crank(Partition{1, 1}) == -2);
    CHECK_THROWS_AS(crank(Partition{}), std::invalid_argument);
}

TEST_CASE("rank-set membership") {
    const Partition lam{5, 5, 3, 2, 2, 1};
    // rank-set of lam is (-5, -4, -1, 1, 2, 4, 6, 7, ...)
    for (int v : {-5, -4, -1, 1, 2, 4, 6, 7, 100}) CHECK(rank_set_contains(lam, v));
    for (int v : {-6, -3, -2, 0, 3, 5}) CHECK_FALSE(rank_set_contains(lam, v));

    CHECK(rank_set_contains(Partition{}, 0));   // empty: (0, 1, 2, ...)
    CHECK(rank_set_contains(Partition{}, 5));
    CHECK_FALSE(rank_set_contains(Partition{}, -1));
    CHECK(rank_set_contains(Partition{2, 2}, -2));
}
