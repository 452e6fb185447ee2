#include <catch_amalgamated.hpp>

#include <set>

#include "unirank/enumerate.hpp"
#include "unirank/qseries.hpp"

using namespace unirank;

TEST_CASE("partition stream: order, completeness, membership") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});

    const std::vector<Partition> four = partitions_of(4);
    const std::vector<Partition> expected = {
        {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(four == expected);  // lexicographically decreasing

    bool found = false;
    for_each_partition(19, [&](const std::vector<int>& parts) {
        if (parts == std::vector<int>{5, 5, 3, 3, 2, 1}) found = true;
    });
    CHECK(found);

    // stream count equals the pentagonal recurrence
    const std::vector<BigInt> p = partition_count(70);
    for (int n = 0; n <= 70; ++n) {
        long long count = 0;
        for_each_partition(n, [&](const std::vector<int>&) { count++; });
        REQUIRE(BigInt(count) == p[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("partition stream supports early exit") {
    int seen = 0;
    for_each_partition(20, [&](const std::vector<int>&) { return ++seen < 5; });
    CHECK(seen == 5);
}

TEST_CASE("strongly unimodal sequences: small weights by hand") {
    const auto one = strongly_unimodal_of(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].peak == 1);
    CHECK(one[0].rank() == 0);

    const auto three = strongly_unimodal_of(3);
    REQUIRE(three.size() == 3);
    std::multiset<int> ranks;
    for (const auto& s : three) ranks.insert(s.rank());
    CHECK(ranks == std::multiset<int>{-1, 0, 1});

    CHECK_THROWS_AS(strongly_unimodal_of(0), std::invalid_argument);
}

TEST_CASE("sequence validation") {
    CHECK_NOTHROW(UnimodalSequence({1, 3}, 5, {4, 2}));
    CHECK_THROWS_AS(UnimodalSequence({3, 1}, 5, {}), std::invalid_argument);
    CHECK_THROWS_AS(UnimodalSequence({}, 3, {3}), std::invalid_argument);
    CHECK_THROWS_AS(UnimodalSequence({}, 0, {}), std::invalid_argument);
    CHECK(seq_rank(UnimodalSequence({1}, 2, {})) == -1);
    CHECK(seq_rank(UnimodalSequence({}, 2, {1})) == 1);
    CHECK(seq_rank(UnimodalSequence({}, 9, {})) == 0);
}

TEST_CASE("sequence counts match the bivariate product at z = 1") {
    // total count of weight n equals [q^n] sum_r (-q;q)_r^2 q^{r+1}
    const int N = 40;
    QSeries total(N);
    for (int r = 0; r + 1 <= N; ++r) {
        QSeries prod = QSeries::one(N);
        for (int i = 1; i <= r; ++i) {
            QSeries next = prod;
            next.add_shifted(prod, i);  // multiply by (1 + q^i)
            prod = std::move(next);
        }
        QSeries sq = series_mul(prod, prod);
        total.add_shifted(sq, r + 1);
    }
    for (int n = 1; n <= N; ++n) {
        long long count = 0;
        for_each_strongly_unimodal(n, [&](const UnimodalView&) { count++; });
        REQUIRE(BigInt(count) == total.coeff(n));
    }
}

TEST_CASE("every visited sequence is strongly unimodal, exactly once") {
    for (int n = 1; n <= 22; ++n) {
        std::set<UnimodalSequence> seen;
        for_each_strongly_unimodal(n, [&](const UnimodalView& v) {
            UnimodalSequence s = v.to_sequence();  // validating constructor
            REQUIRE(s.weight() == n);
            REQUIRE(seen.insert(std::move(s)).second);
        });
    }
}
