#include <catch_amalgamated.hpp>

#include "unirank/utable.hpp"

using namespace unirank;

namespace {

// independently computed by exhaustive enumeration; rows n = 1..25,
// columns m = 0..5
constexpr long long kSmallTable[25][6] = {
    {1, 0, 0, 0, 0, 0},      {1, 0, 0, 0, 0, 0},      {1, 1, 0, 0, 0, 0},
    {2, 1, 0, 0, 0, 0},      {2, 2, 0, 0, 0, 0},      {4, 2, 1, 0, 0, 0},
    {5, 4, 1, 0, 0, 0},      {7, 5, 2, 0, 0, 0},      {10, 7, 3, 0, 0, 0},
    {13, 10, 4, 1, 0, 0},    {17, 14, 6, 1, 0, 0},    {24, 18, 9, 2, 0, 0},
    {31, 25, 12, 3, 0, 0},   {40, 33, 16, 5, 0, 0},   {53, 43, 23, 6, 1, 0},
    {69, 56, 30, 10, 1, 0},  {88, 73, 40, 13, 2, 0},  {113, 94, 53, 19, 3, 0},
    {144, 121, 69, 25, 5, 0},{183, 153, 90, 34, 7, 0},{231, 195, 116, 45, 10, 1},
    {290, 246, 148, 61, 14, 1}, {362, 310, 189, 78, 20, 2},
    {453, 387, 240, 103, 27, 3}, {563, 483, 303, 132, 37, 5}};

}  // namespace

TEST_CASE("both generating-function routes reproduce the frozen counts") {
    const RankTable gf = u_table_from_gf(5, 25);
    const RankTable biv = u_table_from_bivariate(5, 25);
    for (int n = 1; n <= 25; ++n)
        for (int m = 0; m <= 5; ++m) {
            REQUIRE(gf.at(m, n) == kSmallTable[n - 1][m]);
            REQUIRE(biv.at(m, n) == kSmallTable[n - 1][m]);
        }
}

TEST_CASE("three routes agree and the table is symmetric") {
    const int N = 40, M = 6;
    const RankTable gf = u_table_from_gf(M, N);
    const RankTable biv = u_table_from_bivariate(M, N);
    const EnumeratedRankTable enu = u_table_from_enumeration(M, N, 2);
    for (int n = 1; n <= N; ++n) {
        BigInt column_sum = 0;
        for (int m = -M; m <= M; ++m) {
            REQUIRE(gf.at(m, n) == biv.at(m, n));
            REQUIRE(gf.at(m, n) == enu.table.at(m, n));
            column_sum += gf.at(m, n);
        }
        // ranks outside [-M, M] are impossible below weight (M+2)(M+3)/2
        if (n < (M + 2) * (M + 3) / 2)
            REQUIRE(column_sum == enu.totals[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("first column and support boundary") {
    const RankTable u = u_table_from_gf(8, 60);
    CHECK(u.at(0, 1) == 1);
    for (int m = 1; m <= 8; ++m) CHECK(u.at(m, 1) == 0);
    CHECK(u.at(1, 3) == 1);
    CHECK(u.at(-1, 3) == 1);
    CHECK(u.at(0, 3) == 1);
    for (int m = 0; m <= 8; ++m) {
        const int first_weight = (m + 1) * (m + 2) / 2;
        for (int n = 1; n <= 60; ++n) {
            if (n < first_weight)
                REQUIRE(u.at(m, n) == 0);
            else
                REQUIRE(u.at(m, n) >= 1);
        }
    }
}

TEST_CASE("table bounds are enforced") {
    const RankTable u = u_table_from_gf(3, 10);
    CHECK_THROWS_AS(u.at(4, 5), std::out_of_range);
    CHECK_THROWS_AS(u.at(0, 11), std::out_of_range);
    CHECK_NOTHROW(u.at(-3, 10));
}

TEST_CASE("bivariate rows beyond the band are genuinely zero") {
    // u(m, n) = 0 whenever n <= order < (m+1)(m+2)/2, so requesting a wide
    // table at a small order must produce zero rows, matching the gf route.
    const RankTable wide = u_table_from_bivariate(12, 20);
    const RankTable gf = u_table_from_gf(12, 20);
    for (int m = 0; m <= 12; ++m)
        for (int n = 0; n <= 20; ++n) REQUIRE(wide.at(m, n) == gf.at(m, n));
}
