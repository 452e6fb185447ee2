#ifndef UNIRANK_MAPS_HPP
#define UNIRANK_MAPS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "unirank/durfee.hpp"
#include "unirank/partition.hpp"
#include "unirank/sets.hpp"

namespace unirank {

/* Weight-preserving injections between the partition families of sets.hpp,
 * together with their inverses. Every map performs its surgery on a Durfee
 * rectangle symbol and re-assembles through assemble_symbol, so ill-formed
 * outputs cannot escape silently. Inputs outside the stated domain raise
 * std::domain_error. */

namespace detail {

[[noreturn]] inline void domain_fail(const char* map, const Partition& p) {
    throw std::domain_error(std::string(map) + ": input " + p.to_string() +
                            " outside the map's domain");
}

inline void require_weight(const char* map, const Partition& p, int threshold) {
    if (p.weight() < threshold)
        throw std::domain_error(std::string(map) + ": defined only for weight >= " +
                                std::to_string(threshold));
}

}  // namespace detail

/* --------------------------- rho ---------------------------------- */

/* A(1, n) -> B(1, n). With j the largest index such that j - lambda_{j+1}
 * is below -1, lower the first j+1 parts by one and insert a new part j+1.
 * The rank drops by exactly 2 and 0 enters the rank-set. */
inline Partition rho(const Partition& lambda) {
    if (!in_A1(lambda)) detail::domain_fail("rho", lambda);
    int j = -1;
    for (int t = 0; t <= lambda.length(); ++t)
        if (t - lambda.part(t + 1) < -1) j = t;
    if (j < 0) detail::domain_fail("rho", lambda);  // unreachable on the domain
    std::vector<int> mu;
    mu.reserve(static_cast<std::size_t>(lambda.length()) + 1);
    for (int i = 1; i <= j + 1; ++i) mu.push_back(lambda.part(i) - 1);
    mu.push_back(j + 1);
    for (int i = j + 2; i <= lambda.length(); ++i) mu.push_back(lambda.part(i));
    return Partition::unchecked(std::move(mu));
}

inline Partition rho_inv(const Partition& mu) {
    if (!in_B1(mu)) detail::domain_fail("rho_inv", mu);
    int k = 0;
    for (int t = 1; t <= mu.length(); ++t)
        if (t - mu.part(t + 1) == 0) {
            k = t;
            break;
        }
    if (k == 0) detail::domain_fail("rho_inv", mu);
    std::vector<int> lam;
    lam.reserve(static_cast<std::size_t>(mu.length()));
    for (int i = 1; i <= k; ++i) lam.push_back(mu.part(i) + 1);
    for (int i = k + 2; i <= mu.length(); ++i) lam.push_back(mu.part(i));
    return Partition::unchecked(std::move(lam));
}

/* --------------------------- Phi (m >= 1) -------------------------- */

/* V2(m+1, n) -> U2(m, n). Drop alpha_1 (= m+j) and beta_1 (= j), lower the
 * last alpha-part equal to m by one, and grow the rectangle to
 * (m+j+1) x (j+1). */
inline Partition phi2(const Partition& lambda, int m) {
    if (m < 1 || !in_V(lambda, m + 1) || v_block(lambda, m + 1) != 2)
        detail::domain_fail("phi2", lambda);
    const DurfeeSymbol s = durfee_symbol(lambda, m);
    const auto& a = s.alpha.parts();
    int im = 0;  // last 1-based position with alpha = m
    for (int i = 1; i <= s.alpha.length(); ++i)
        if (a[static_cast<std::size_t>(i - 1)] == m) im = i;
    std::vector<int> g;
    g.reserve(a.size());
    for (int i = 2; i <= s.alpha.length(); ++i)
        g.push_back(a[static_cast<std::size_t>(i - 1)] - (i == im ? 1 : 0));
    std::vector<int> d(s.beta.parts().begin() + 1, s.beta.parts().end());
    return assemble_symbol(Partition::unchecked(std::move(g)),
                           Partition::unchecked(std::move(d)), m, s.j + 1);
}

/// Inverse of phi2 on its image: reinstate a leading column of height
/// m+j'-1 and row j'-1, and raise the first gamma-part equal to m-1 back
/// to m (for m = 1, append a fresh part 1 instead).
inline Partition phi2_inv(const Partition& mu, int m) {
    if (m < 1 || !in_U2_m(mu, m)) detail::domain_fail("phi2_inv", mu);
    const DurfeeSymbol s = durfee_symbol(mu, m);
    const auto& g = s.alpha.parts();
    int t = s.alpha.length() + 1;  // convention for m = 1
    if (m >= 2) {
        t = 0;
        for (int i = 1; i <= s.alpha.length(); ++i)
            if (g[static_cast<std::size_t>(i - 1)] == m - 1) {
                t = i;
                break;
            }
        if (t == 0) detail::domain_fail("phi2_inv", mu);
    }
    std::vector<int> a;
    a.reserve(g.size() + 2);
    a.push_back(m + s.j - 1);
    for (int i = 1; i <= s.alpha.length(); ++i)
        a.push_back(g[static_cast<std::size_t>(i - 1)] + (i == t ? 1 : 0));
    if (t == s.alpha.length() + 1) a.push_back(1);
    std::vector<int> b;
    b.reserve(s.beta.parts().size() + 1);
    b.push_back(s.j - 1);
    for (int v : s.beta.parts()) b.push_back(v);
    return assemble_symbol(Partition::unchecked(std::move(a)),
                           Partition::unchecked(std::move(b)), m, s.j - 1);
}

/// The combined injection V(m+1, n) -> U(m, n): identity on V1 (which
/// coincides with U1(m, n)), phi2 on V2.
inline Partition Phi(const Partition& lambda, int m) {
    if (m < 1 || !in_V(lambda, m + 1)) detail::domain_fail("Phi", lambda);
    return v_block(lambda, m + 1) == 1 ? lambda : phi2(lambda, m);
}

/* --------------------------- Psi (m = 0) --------------------------- */

/* V2(1, n) -> U2(0, n), a bijection: remove alpha_1 = d, beta_1 = d and the
 * trailing 1 of beta, and grow the square to d+1. */
inline Partition psi2(const Partition& lambda) {
    if (!in_V(lambda, 1) || v_block(lambda, 1) != 2) detail::domain_fail("psi2", lambda);
    const DurfeeSymbol s = durfee_symbol(lambda, 0);
    std::vector<int> g(s.alpha.parts().begin() + 1, s.alpha.parts().end());
    std::vector<int> d(s.beta.parts().begin() + 1, s.beta.parts().end() - 1);
    return assemble_symbol(Partition::unchecked(std::move(g)),
                           Partition::unchecked(std::move(d)), 0, s.j + 1);
}

inline Partition psi2_inv(const Partition& mu) {
    const DurfeeSymbol s = durfee_symbol(mu, 0);
    if (u0_block(mu) != 2 || !in_U(mu, 0)) detail::domain_fail("psi2_inv", mu);
    std::vector<int> a{s.j - 1};
    for (int v : s.alpha.parts()) a.push_back(v);
    std::vector<int> b{s.j - 1};
    for (int v : s.beta.parts()) b.push_back(v);
    b.push_back(1);
    return assemble_symbol(Partition::unchecked(std::move(a)),
                           Partition::unchecked(std::move(b)), 0, s.j - 1);
}

/* V3(1, n) -> U3(0, n). With i the largest p such that alpha_p >= beta_{p+2}-1,
 * the two legs are interleaved:
 *   gamma = (alpha_2..alpha_i, beta_{i+2}-1, ..., beta_t-1)
 *   delta = (beta_2..beta_{i+1}, alpha_{i+1}+1, ..., alpha_s+1, 1^{t-s-2}). */
inline Partition psi3(const Partition& lambda) {
    if (!in_V(lambda, 1) || v_block(lambda, 1) != 3) detail::domain_fail("psi3", lambda);
    const DurfeeSymbol sym = durfee_symbol(lambda, 0);
    const int s = sym.alpha.length(), t = sym.beta.length();
    int i = 0;
    for (int p = 1; p <= s; ++p)
        if (sym.alpha.part(p) >= sym.beta.part(p + 2) - 1) i = p;
    if (i == 0) detail::domain_fail("psi3", lambda);
    std::vector<int> g, d;
    for (int k = 2; k <= i; ++k) g.push_back(sym.alpha.part(k));
    for (int k = i + 2; k <= t; ++k) g.push_back(sym.beta.part(k) - 1);
    for (int k = 2; k <= i + 1; ++k) d.push_back(sym.beta.part(k));
    for (int k = i + 1; k <= s; ++k) d.push_back(sym.alpha.part(k) + 1);
    for (int k = 0; k < t - s - 2; ++k) d.push_back(1);
    return assemble_symbol(Partition::unchecked(std::move(g)),
                           Partition::unchecked(std::move(d)), 0, sym.j + 1);
}

/// Inverse of psi3 on its image, with j the largest p such that
/// delta_p >= gamma_p + 1.
inline Partition psi3_inv(const Partition& mu) {
    if (!in_U(mu, 0) || u0_block(mu) != 3) detail::domain_fail("psi3_inv", mu);
    const DurfeeSymbol sym = durfee_symbol(mu, 0);
    const int tp = sym.beta.length();  // = l(gamma) on U3
    int j = 0;
    for (int p = 1; p <= tp; ++p)
        if (sym.beta.part(p) >= sym.alpha.part(p) + 1) j = p;
    if (j == 0) detail::domain_fail("psi3_inv", mu);
    std::vector<int> a{sym.j - 1}, b{sym.j - 1};
    for (int k = 1; k <= j - 1; ++k) a.push_back(sym.alpha.part(k));
    for (int k = j + 1; k <= tp; ++k) a.push_back(sym.beta.part(k) - 1);
    for (int k = 1; k <= j; ++k) b.push_back(sym.beta.part(k));
    for (int k = j; k <= tp; ++k) b.push_back(sym.alpha.part(k) + 1);
    return assemble_symbol(Partition::unchecked(std::move(a)),
                           Partition::unchecked(std::move(b)), 0, sym.j - 1);
}

/// The combined injection V(1, n) -> U(0, n), block-respecting: identity on
/// V1 (= U1(0, n)), psi2 on V2, psi3 on V3. U4 and U5 receive no image.
inline Partition Psi(const Partition& lambda) {
    if (!in_V(lambda, 1)) detail::domain_fail("Psi", lambda);
    switch (v_block(lambda, 1)) {
        case 1: return lambda;
        case 2: return psi2(lambda);
        default: return psi3(lambda);
    }
}

/* ------------------- chi_1 .. chi_8 (rank-zero side) ---------------- */

/// P1(0, n) -> U5(0, n); the two sets coincide.
inline Partition chi1(const Partition& lambda) {
    if (!in_P0(lambda) || p_block(lambda) != 1) detail::domain_fail("chi1", lambda);
    return lambda;
}
inline Partition zeta1(const Partition& mu) { return mu; }

/// P2(0, n) -> U5(0, n): swap the two legs of the symbol. A bijection.
inline Partition chi2(const Partition& lambda) {
    if (!in_P0(lambda) || p_block(lambda) != 2) detail::domain_fail("chi2", lambda);
    const DurfeeSymbol s = durfee_symbol(lambda, 0);
    return assemble_symbol(s.beta, s.alpha, 0, s.j);
}
inline Partition zeta2(const Partition& mu) {
    const DurfeeSymbol s = durfee_symbol(mu, 0);
    return assemble_symbol(s.beta, s.alpha, 0, s.j);
}

/// P3(0, n) -> U4(0, n), n >= 4: lower alpha_1 by one, append a 1 to beta.
inline Partition chi3(const Partition& lambda) {
    detail::require_weight("chi3", lambda, 4);
    if (!in_P0(lambda) || p_block(lambda) != 3) detail::domain_fail("chi3", lambda);
    const DurfeeSymbol s = durfee_symbol(lambda, 0);
    std::vector<int> g = s.alpha.parts();
    g[0] -= 1;
    std::vector<int> d = s.beta.parts();
    d.push_back(1);
    return assemble_symbol(Partition::unchecked(std::move(g)),
                           Partition::unchecked(std::move(d)), 0, s.j);
}
inline Partition zeta3(const Partition& mu) {
    const DurfeeSymbol s = durfee_symbol(mu, 0);
    if (s.beta.smallest_part() != 1) detail::domain_fail("zeta3", mu);
    std::vector<int> a = s.alpha.parts();
    if (a.empty()) detail::domain_fail("zeta3", mu);
    a[0] += 1;
    std::vector<int> b = s.beta.parts();
    b.pop_back();
    return assemble_symbol(Partition::unchecked(std::move(a)),
                           Partition::unchecked(std::move(b)), 0, s.j);
}

/* chi4 = eta1 on P4 (into U4 with 2 a part of delta) together with eta2 on
 * P7 (into U4 with 2 not a part of delta); the split keeps the images
 * disjoint. Defined for n >= 6. */

inline Partition eta1(const Partition& lambda) {
    detail::require_weight("eta1", lambda, 6);
    if (!in_P0(lambda) || p_block(lambda) != 4) detail::domain_fail("eta1", lambda);
    const DurfeeSymbol s = durfee_symbol(lambda, 0);
    std::vector<int> g = s.alpha.parts();
    g[0] -= 1;
    g[1] -= 1;
    std::vector<int> d;
    d.reserve(s.beta.parts().size() + 1);
    int k = s.beta.length() + 1;  // first beta-part equal to 1
    for (int i = 1; i <= s.beta.length(); ++i)
        if (s.beta.part(i) == 1) {
            k = i;
            break;
        }
    for (int i = 1; i < k; ++i) d.push_back(s.beta.part(i));
    d.push_back(2);
    for (int i = k; i <= s.beta.length(); ++i) d.push_back(s.beta.part(i));
    return assemble_symbol(Partition::unchecked(std::move(g)),
                           Partition::unchecked(std::move(d)), 0, s.j);
}
inline Partition zeta4_1(const Partition& mu) {
    const DurfeeSymbol s = durfee_symbol(mu, 0);
    std::vector<int> a = s.alpha.parts();
    if (a.size() < 2) detail::domain_fail("zeta4_1", mu);
    a[0] += 1;
    a[1] += 1;
    std::vector<int> b;
    bool dropped = false;
    for (int v : s.beta.parts()) {
        if (!dropped && v == 2) {
            dropped = true;
            continue;
        }
        b.push_back(v);
    }
    if (!dropped) detail::domain_fail("zeta4_1", mu);
    return assemble_symbol(Partition::unchecked(std::move(a)),
                           Partition::unchecked(std::move(b)), 0, s.j);
}

inline Partition eta2(const Partition& lambda) {
    detail::require_weight("eta2", lambda, 6);
    if (!in_P0(lambda) || p_block(lambda) != 7) detail::domain_fail("eta2", lambda);
    const DurfeeSymbol s = durfee_symbol(lambda, 0);
    const int t = s.alpha.length();
    std::vector<int> g;
    for (int i = 4; i <= t; ++i) g.push_back(s.alpha.part(i));
    g.push_back(1);
    std::vector<int> d{3};
    for (int i = 0; i < t - 2; ++i) d.push_back(1);
    return assemble_symbol(Partition::unchecked(std::move(g)),
                           Partition::unchecked(std::move(d)), 0, 3);
}
inline Partition zeta4_2(const Partition& mu) {
    const DurfeeSymbol s = durfee_symbol(mu, 0);
    const int tp = s.beta.length();
    if (s.j != 3 || s.beta.part(1) != 3) detail::domain_fail("zeta4_2", mu);
    std::vector<int> a{2, 2, 2};
    for (int i = 1; i <= tp - 2; ++i) a.push_back(s.alpha.part(i));
    std::vector<int> b{2};
    for (int i = 0; i < tp; ++i) b.push_back(1);
    return assemble_symbol(Partition::unchecked(std::move(a)),
                           Partition::unchecked(std::move(b)), 0, 2);
}

inline Partition chi4(const Partition& lambda) {
    detail::require_weight("chi4", lambda, 6);
    if (!in_P0(lambda)) detail::domain_fail("chi4", lambda);
    const int block = p_block(lambda);
    if (block == 4) return eta1(lambda);
    if (block == 7) return eta2(lambda);
    detail::domain_fail("chi4", lambda);
}
inline Partition zeta4(const Partition& mu) {
    return u4_sub_block(mu) == 1 ? zeta4_1(mu) : zeta4_2(mu);
}

/* chi5 = kappa1 on P5 (into U5 with d' != 3) together with kappa2 on P6
 * (into U5 with d' = 3). Defined for n >= 9. */

inline Partition kappa1(const Partition& lambda) {
    detail::require_weight("kappa1", lambda, 9);
    if (!in_P0(lambda) || p_block(lambda) != 5) detail::domain_fail("kappa1", lambda);
    const DurfeeSymbol s = durfee_symbol(lambda, 0);
    const int d = s.j, t = s.alpha.length();
    if (d >= 3) {
        int k = 0;
        for (int p = 1; p <= t; ++p)
            if (s.alpha.part(p) >= d - 2) k = p;
        std::vector<int> g;
        for (int i = 2; i <= t; ++i) g.push_back(s.beta.part(i));
        std::vector<int> dd{d + 1};
        for (int i = 4; i <= k; ++i) dd.push_back(s.alpha.part(i));
        dd.push_back(d - 2);
        for (int i = k + 1; i <= t; ++i) dd.push_back(s.alpha.part(i));
        return assemble_symbol(Partition::unchecked(std::move(g)),
                               Partition::unchecked(std::move(dd)), 0, d + 1);
    }
    // d = 1: the single symbol (1^t; 1^t)_1 of weight 2t+1
    std::vector<int> g(static_cast<std::size_t>(t - 2), 1);
    std::vector<int> dd{2};
    for (int i = 0; i < t - 3; ++i) dd.push_back(1);
    return assemble_symbol(Partition::unchecked(std::move(g)),
                           Partition::unchecked(std::move(dd)), 0, 2);
}
inline Partition zeta5_1(const Partition& mu) {
    const DurfeeSymbol s = durfee_symbol(mu, 0);
    const int dp = s.j;
    if (dp >= 4) {
        int r = 0;
        for (int i = 1; i <= s.beta.length(); ++i)
            if (s.beta.part(i) == dp - 3) {
                r = i;
                break;
            }
        if (r == 0) detail::domain_fail("zeta5_1", mu);
        std::vector<int> a{dp - 1, dp - 1, dp - 1};
        for (int i = 2; i <= s.beta.length(); ++i)
            if (i != r) a.push_back(s.beta.part(i));
        std::vector<int> b{dp - 1};
        for (int v : s.alpha.parts()) b.push_back(v);
        return assemble_symbol(Partition::unchecked(std::move(a)),
                               Partition::unchecked(std::move(b)), 0, dp - 1);
    }
    if (dp != 2) detail::domain_fail("zeta5_1", mu);
    const int t = s.alpha.length() + 2;
    std::vector<int> ones(static_cast<std::size_t>(t), 1);
    return assemble_symbol(Partition::unchecked(ones),
                           Partition::unchecked(ones), 0, 1);
}

inline Partition kappa2(const Partition& lambda) {
    detail::require_weight("kappa2", lambda, 9);
    if (!in_P0(lambda) || p_block(lambda) != 6) detail::domain_fail("kappa2", lambda);
    const DurfeeSymbol s = durfee_symbol(lambda, 0);
    std::vector<int> g;
    for (int i = 4; i <= s.alpha.length(); ++i) g.push_back(s.alpha.part(i));
    g.push_back(1);
    g.push_back(1);
    std::vector<int> d{3};
    for (int i = 3; i <= s.beta.length(); ++i) d.push_back(s.beta.part(i));
    return assemble_symbol(Partition::unchecked(std::move(g)),
                           Partition::unchecked(std::move(d)), 0, 3);
}
inline Partition zeta5_2(const Partition& mu) {
    const DurfeeSymbol s = durfee_symbol(mu, 0);
    if (s.j != 3 || s.alpha.length() < 2) detail::domain_fail("zeta5_2", mu);
    std::vector<int> a{2, 2, 2};
    for (int i = 1; i <= s.alpha.length() - 2; ++i) a.push_back(s.alpha.part(i));
    std::vector<int> b{2, 2};
    for (int i = 2; i <= s.beta.length(); ++i) b.push_back(s.beta.part(i));
    return assemble_symbol(Partition::unchecked(std::move(a)),
                           Partition::unchecked(std::move(b)), 0, 2);
}

inline Partition chi5(const Partition& lambda) {
    detail::require_weight("chi5", lambda, 9);
    if (!in_P0(lambda)) detail::domain_fail("chi5", lambda);
    const int block = p_block(lambda);
    if (block == 5) return kappa1(lambda);
    if (block == 6) return kappa2(lambda);
    detail::domain_fail("chi5", lambda);
}
inline Partition zeta5(const Partition& mu) {
    return u5_sub_block(mu) == 1 ? zeta5_1(mu) : zeta5_2(mu);
}

/* P8(0, n) -> U4(0, n), n >= 5. Shrink the square by one; the freed weight
 * becomes a leading column d-2, a leading row d-1, and an inserted 2. */
inline Partition chi6(const Partition& lambda) {
    detail::require_weight("chi6", lambda, 5);
    if (!in_P0(lambda) || p_block(lambda) != 8) detail::domain_fail("chi6", lambda);
    const DurfeeSymbol s = durfee_symbol(lambda, 0);
    const int d = s.j;
    int k = 0;  // last beta-part >= 2; 0 when none exists
    for (int p = 1; p <= s.beta.length(); ++p)
        if (s.beta.part(p) >= 2) k = p;
    std::vector<int> g{d - 2};
    for (int v : s.alpha.parts()) g.push_back(v);
    std::vector<int> dd{d - 1};
    for (int i = 1; i <= k; ++i) dd.push_back(s.beta.part(i));
    dd.push_back(2);
    for (int i = k + 1; i <= s.beta.length(); ++i) dd.push_back(s.beta.part(i));
    return assemble_symbol(Partition::unchecked(std::move(g)),
                           Partition::unchecked(std::move(dd)), 0, d - 1);
}
inline Partition zeta6(const Partition& mu) {
    const DurfeeSymbol s = durfee_symbol(mu, 0);
    int r = 0;
    for (int i = 2; i <= s.beta.length(); ++i)
        if (s.beta.part(i) == 2) {
            r = i;
            break;
        }
    if (r == 0 || s.alpha.empty()) detail::domain_fail("zeta6", mu);
    std::vector<int> a;
    for (int i = 2; i <= s.alpha.length(); ++i) a.push_back(s.alpha.part(i));
    std::vector<int> b;
    for (int i = 2; i <= s.beta.length(); ++i)
        if (i != r) b.push_back(s.beta.part(i));
    return assemble_symbol(Partition::unchecked(std::move(a)),
                           Partition::unchecked(std::move(b)), 0, s.j + 1);
}

/* P9(0, n) -> U4(0, n), n >= 7. */
inline Partition chi7(const Partition& lambda) {
    detail::require_weight("chi7", lambda, 7);
    if (!in_P0(lambda) || p_block(lambda) != 9) detail::domain_fail("chi7", lambda);
    const DurfeeSymbol s = durfee_symbol(lambda, 0);
    const int d = s.j;
    std::vector<int> g{d - 2, s.alpha.part(1) - 1};
    for (int i = 2; i <= s.alpha.length(); ++i) g.push_back(s.alpha.part(i));
    g.push_back(1);
    std::vector<int> dd{d - 1};
    for (int v : s.beta.parts()) dd.push_back(v);
    dd.push_back(1);
    dd.push_back(1);
    return assemble_symbol(Partition::unchecked(std::move(g)),
                           Partition::unchecked(std::move(dd)), 0, d - 1);
}
inline Partition zeta7(const Partition& mu) {
    const DurfeeSymbol s = durfee_symbol(mu, 0);
    if (s.alpha.length() < 2 || s.beta.length() < 3) detail::domain_fail("zeta7", mu);
    std::vector<int> a{s.alpha.part(2) + 1};
    for (int i = 3; i <= s.alpha.length() - 1; ++i) a.push_back(s.alpha.part(i));
    std::vector<int> b;
    for (int i = 2; i <= s.beta.length() - 2; ++i) b.push_back(s.beta.part(i));
    return assemble_symbol(Partition::unchecked(std::move(a)),
                           Partition::unchecked(std::move(b)), 0, s.j + 1);
}

/* P10(0, n) -> U5(0, n), n >= 10. */
inline Partition chi8(const Partition& lambda) {
    detail::require_weight("chi8", lambda, 10);
    if (!in_P0(lambda) || p_block(lambda) != 10) detail::domain_fail("chi8", lambda);
    const DurfeeSymbol s = durfee_symbol(lambda, 0);
    const int d = s.j, t = s.alpha.length();
    if (d >= 3) {
        int k = 0;
        for (int p = 1; p <= t; ++p)
            if (s.alpha.part(p) >= d - 2) k = p;
        std::vector<int> dd{d};
        for (int i = 3; i <= k; ++i) dd.push_back(s.alpha.part(i));
        dd.push_back(d - 2);
        for (int i = k + 1; i <= t; ++i) dd.push_back(s.alpha.part(i));
        return assemble_symbol(s.beta, Partition::unchecked(std::move(dd)), 0, d);
    }
    // d = 2: the single symbol (1^t; 1^t)_2 of weight 2t+4
    std::vector<int> g(static_cast<std::size_t>(t - 1), 1);
    std::vector<int> dd{2, 2};
    for (int i = 0; i < t - 3; ++i) dd.push_back(1);
    return assemble_symbol(Partition::unchecked(std::move(g)),
                           Partition::unchecked(std::move(dd)), 0, 2);
}
inline Partition zeta8(const Partition& mu) {
    const DurfeeSymbol s = durfee_symbol(mu, 0);
    const int dp = s.j;
    if (dp >= 3) {
        int k = 0;
        for (int i = 2; i <= s.beta.length(); ++i)
            if (s.beta.part(i) == dp - 2) {
                k = i;
                break;
            }
        if (k == 0) detail::domain_fail("zeta8", mu);
        std::vector<int> a{dp - 1, dp - 1};
        for (int i = 2; i <= s.beta.length(); ++i)
            if (i != k) a.push_back(s.beta.part(i));
        return assemble_symbol(Partition::unchecked(std::move(a)), s.alpha, 0, dp);
    }
    if (dp != 2) detail::domain_fail("zeta8", mu);
    const int t = s.alpha.length() + 1;
    std::vector<int> ones(static_cast<std::size_t>(t), 1);
    return assemble_symbol(Partition::unchecked(ones),
                           Partition::unchecked(ones), 0, 2);
}

/// chi_i dispatcher, i in 1..8.
inline Partition chi(int i, const Partition& lambda) {
    switch (i) {
        case 1: return chi1(lambda);
        case 2: return chi2(lambda);
        case 3: return chi3(lambda);
        case 4: return chi4(lambda);
        case 5: return chi5(lambda);
        case 6: return chi6(lambda);
        case 7: return chi7(lambda);
        case 8: return chi8(lambda);
        default: throw std::invalid_argument("chi: index must be 1..8");
    }
}

/// Inverse dispatcher recovering the preimage of chi_i on its image.
inline Partition zeta(int i, const Partition& mu) {
    switch (i) {
        case 1: return zeta1(mu);
        case 2: return zeta2(mu);
        case 3: return zeta3(mu);
        case 4: return zeta4(mu);
        case 5: return zeta5(mu);
        case 6: return zeta6(mu);
        case 7: return zeta7(mu);
        case 8: return zeta8(mu);
        default: throw std::invalid_argument("zeta: index must be 1..8");
    }
}

}  // namespace unirank

#endif  // UNIRANK_MAPS_HPP
