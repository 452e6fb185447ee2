#include <catch_amalgamated.hpp>

#include "unirank/checks.hpp"
#include "unirank/sets.hpp"
#include "unirank/stats.hpp"

using namespace unirank;

TEST_CASE("series routes match the census") {
    const int N = 50;
    const auto band = rank_count_band(6, N);
    std::vector<std::vector<BigInt>> crank_rows;
    for (int m = -6; m <= 6; ++m) crank_rows.push_back(crank_count_series(m, N));
    const auto rank_mom = rank_positive_moment_series(N);
    const auto crank_mom = crank_positive_moment_series(N);
    const auto ospt = ospt_series(N);
    const auto fixed = fixed_point_count_series(N);

    for (int n = 1; n <= N; ++n) {
        const PartitionCensus c = census_partitions(n);
        for (int m = -6; m <= 6; ++m) {
            REQUIRE(band[static_cast<std::size_t>(m + 6)][static_cast<std::size_t>(n)] ==
                    c.N(m));
            if (n >= 2)
                REQUIRE(crank_rows[static_cast<std::size_t>(m + 6)]
                                  [static_cast<std::size_t>(n)] == c.M(m));
        }
        REQUIRE(fixed[static_cast<std::size_t>(n)] == c.fixed_point);
        if (n >= 2) {
            REQUIRE(rank_mom[static_cast<std::size_t>(n)] == c.rank_moment);
            REQUIRE(crank_mom[static_cast<std::size_t>(n)] == c.crank_moment);
            REQUIRE(ospt[static_cast<std::size_t>(n)] == c.ospt());
        }
    }
}

TEST_CASE("the n = 1 crank anomaly is confined to n = 1") {
    // the combinatorial crank of (1) is -1; the series convention instead
    // carries M(0,1) = -1, M(+-1,1) = 1 and ospt(1) = 1
    const PartitionCensus c = census_partitions(1);
    CHECK(c.M(-1) == 1);
    CHECK(c.M(0) == 0);
    CHECK(c.M(1) == 0);
    CHECK(c.ospt() == 0);
    CHECK(crank_count_series(0, 2)[1] == -1);
    CHECK(crank_count_series(1, 2)[1] == 1);
    CHECK(crank_count_series(-1, 2)[1] == 1);
    CHECK(ospt_series(2)[1] == 1);
}

TEST_CASE("two unrelated series routes to N(m, n) agree far out") {
    const int N = 300;
    const auto band = rank_count_band(4, N);
    for (int m = 0; m <= 4; ++m) {
        const auto sparse = rank_count_series_sparse(m, N);
        for (int n = 1; n <= N; ++n)
            REQUIRE(band[static_cast<std::size_t>(m + 4)][static_cast<std::size_t>(n)] ==
                    sparse[static_cast<std::size_t>(n)]);
    }
    CHECK_THROWS_AS(rank_count_series_sparse(-1, 10), std::invalid_argument);
}

TEST_CASE("q(-1, n) ties the crank tail to the fixed-point count") {
    const int N = 120;
    const auto fixed = fixed_point_count_series(N);
    const auto p = partition_count(N);
    const auto m0 = crank_count_series(0, N);
    for (int n = 2; n <= N; ++n)
        REQUIRE(2 * fixed[static_cast<std::size_t>(n)] ==
                p[static_cast<std::size_t>(n)] - m0[static_cast<std::size_t>(n)]);
    // census side: q(-1, n) equals the number of partitions of negative crank
    for (int n = 2; n <= 40; ++n) {
        const PartitionCensus c = census_partitions(n);
        long long tail = 0;
        for (int m = -n; m <= -1; ++m) tail += c.M(m);
        REQUIRE(c.fixed_point == tail);
    }
}

TEST_CASE("ospt three ways") {
    const RankTable u = u_table_from_bivariate(0, 45);
    for (int n = 2; n <= 45; ++n) {
        const PartitionCensus c = census_partitions(n);
        long long set_count = 0;  // rank <= 0 with -1 in the rank-set
        for_each_partition(n, [&](const std::vector<int>& parts) {
            const Partition lam = Partition::unchecked(std::vector<int>(parts));
            if (rank(lam) <= 0 && rank_set_contains(lam, -1)) set_count++;
        });
        REQUIRE(c.ospt() == set_count);
        REQUIRE(BigInt(c.ospt()) == u.at(0, n));
        REQUIRE(c.ospt() > 0);
    }
    CHECK(ospt_direct(7) == census_partitions(7).ospt());
    CHECK_THROWS_AS(ospt_direct(0), std::invalid_argument);
}

TEST_CASE("aggregate table and identity suite") {
    const StatTable t = build_stat_table(150);
    // entries stay nonnegative except the crank column at n = 1
    for (int n = 0; n <= 150; ++n) {
        const std::size_t k = static_cast<std::size_t>(n);
        CHECK(t.p[k] >= 0);
        CHECK(t.N0[k] >= 0);
        CHECK(t.u0[k] >= 0);
        CHECK(t.u1[k] >= 0);
        CHECK(t.q_minus1[k] >= 0);
        if (n != 1) {
            CHECK(t.M0[k] >= 0);
            CHECK(t.ospt[k] >= 0);
        }
    }
    CHECK(t.M0[1] == -1);

    const CheckResult identities = check_identity_suite(t, 2, 150, 6);
    for (const auto& f : identities.failures) UNSCOPED_INFO(f);
    CHECK(identities.passed());
    CHECK(identities.checked > 0);

    const CheckResult bounds = check_ospt_bounds(t, 150);
    for (const auto& f : bounds.failures) UNSCOPED_INFO(f);
    CHECK(bounds.passed());

    const CheckResult gap = check_gap_conjecture(t, 8, 150);
    CHECK(gap.passed());
}

TEST_CASE("unimodality check distinguishes allowed and forbidden equality") {
    const RankTable u = u_table_from_bivariate(7, 60);
    const CheckResult r = check_unimodality(u, 60, 6);
    for (const auto& f : r.failures) UNSCOPED_INFO(f);
    CHECK(r.passed());
    // u(0,5) = u(1,5) = 2 sits below the strictness threshold
    bool found_allowed = false;
    for (const auto& note : r.notes)
        if (note.find("m=0, n=5") != std::string::npos) found_allowed = true;
    CHECK(found_allowed);
    CHECK_THROWS_AS(check_unimodality(u, 60, 7), std::invalid_argument);
}

TEST_CASE("log-concavity check reports degenerate zero points separately") {
    // at n = 20 the stated threshold admits (m, n) = (3, 7..9) etc. where
    // u(m, n) = 0 on both sides; these must be notes, not failures
    const RankTable u = u_table_from_bivariate(6, 20);
    const CheckResult r = check_log_concavity(u, 20);
    for (const auto& f : r.failures) UNSCOPED_INFO(f);
    CHECK(r.passed());
    REQUIRE_FALSE(r.notes.empty());
    CHECK(r.notes.front().find("u(m,n) = 0") != std::string::npos);
}

TEST_CASE("diagnostics emit finite ratios") {
    const RankTable u = u_table_from_bivariate(1, 100);
    StatTable t = build_stat_table(100);
    const auto rows = asymptotic_diagnostics(u, t, {50, 100});
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
        CHECK(std::isfinite(row.u0_over_main));
        CHECK(row.u0_over_main > 0);
        CHECK(std::isfinite(row.gap_over_main));
        CHECK(std::isfinite(row.ospt_centered_ratio));
    }
    CHECK_THROWS_AS(asymptotic_diagnostics(u, t, {101}), std::invalid_argument);
}
