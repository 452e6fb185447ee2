#include <catch_amalgamated.hpp>

#include "unirank/verify_maps.hpp"

using namespace unirank;

TEST_CASE("published worked examples reproduce exactly") {
    const auto golden = run_golden_examples();
    REQUIRE(golden.size() == 11);
    for (const auto& g : golden) {
        INFO(g.map << ": expected " << g.expected.to_string() << ", got "
                   << g.actual.to_string());
        CHECK(g.forward_matches);
        CHECK(g.roundtrip_ok);
    }
}

TEST_CASE("domain rejection") {
    // (3, 3) has rank 1 > 0, so it lies outside A(1, 6)
    CHECK_THROWS_AS(rho(Partition{3, 3}), std::domain_error);
    // lone element of P3(0, 3) sits below chi3's weight threshold
    CHECK_THROWS_AS(chi3(Partition{1, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(Phi(Partition{2, 1}, 0), std::domain_error);
    CHECK_THROWS_AS(chi(9, Partition{1}), std::invalid_argument);
}

TEST_CASE("exhaustive verification of every map on small weights") {
    const int N = 32;
    for (MapName name : {MapName::rho, MapName::psi1, MapName::psi2, MapName::psi3,
                         MapName::Psi, MapName::chi1, MapName::chi2, MapName::chi3,
                         MapName::chi4, MapName::chi5, MapName::chi6, MapName::chi7,
                         MapName::chi8, MapName::eta1, MapName::eta2,
                         MapName::kappa1, MapName::kappa2}) {
        const VerificationReport rep = verify_map(name, 1, N, 0, 2);
        INFO("map " << rep.map_name);
        for (const auto& f : rep.failures)
            UNSCOPED_INFO(failure_kind_str(f.kind)
                          << " at n=" << f.n << " input " << f.input.to_string()
                          << " " << f.detail);
        REQUIRE(rep.verified());
    }
    for (int m = 1; m <= 3; ++m)
        for (MapName name : {MapName::phi1, MapName::phi2, MapName::Phi}) {
            const VerificationReport rep = verify_map(name, 1, N, m, 2);
            INFO("map " << rep.map_name);
            REQUIRE(rep.verified());
        }
}

TEST_CASE("rho round-trips and swaps the two rank-set conditions") {
    for (int n = 1; n <= 26; ++n)
        for_each_partition(n, [&](const std::vector<int>& parts) {
            const Partition lam = Partition::unchecked(std::vector<int>(parts));
            if (!in_A1(lam)) return;
            const Partition mu = rho(lam);
            REQUIRE(in_B1(mu));
            REQUIRE(mu.weight() == n);
            REQUIRE(rank(mu) == rank(lam) - 2);
            REQUIRE(rho_inv(mu) == lam);
        });
}

TEST_CASE("witness families populate the escape blocks") {
    for (int n = 6; n <= 40; ++n) {
        const Partition w = psi_gap_witness(n);
        CHECK(w.weight() == n);
        CHECK(in_U(w, 0));
        CHECK(u0_block(w) == (n % 2 == 0 ? 4 : 5));
    }
    for (int n = 15; n <= 40; ++n) {
        const Partition w = chi6_strict_witness(n);
        const DurfeeSymbol s = durfee_symbol(w, 0);
        CHECK(w.weight() == n);
        CHECK(u0_block(w) == 4);
        // chi6 images carry a first column of height d'-1; the witness has d'-2
        CHECK(s.alpha.part(1) == s.j - 2);
    }
    for (int m = 1; m <= 4; ++m)
        for (int n = (m + 1) * (m + 2) / 2; n <= 40; ++n) {
            const Partition w = phi_gap_witness(m, n);
            CHECK(w.weight() == n);
            CHECK(in_U(w, m));
            CHECK_FALSE(in_U1_m(w, m));
            CHECK_FALSE(in_U2_m(w, m));
        }
}

TEST_CASE("chi6 misses part of U4, so the count inequality is strict") {
    for (int n = 15; n <= 30; ++n) {
        std::vector<Partition> images;
        long long u4_count = 0;
        for_each_partition(n, [&](const std::vector<int>& parts) {
            const Partition lam = Partition::unchecked(std::vector<int>(parts));
            if (in_U(lam, 0) && u0_block(lam) == 4) u4_count++;
            if (in_P0(lam) && p_block(lam) == 8) images.push_back(chi6(lam));
        });
        const Partition w = chi6_strict_witness(n);
        for (const auto& img : images) REQUIRE(img != w);
        REQUIRE(static_cast<long long>(images.size()) < u4_count);
    }
}
