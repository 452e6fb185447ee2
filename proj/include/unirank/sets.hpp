#ifndef UNIRANK_SETS_HPP
#define UNIRANK_SETS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "unirank/durfee.hpp"
#include "unirank/enumerate.hpp"
#include "unirank/partition.hpp"

namespace unirank {

/* Predicate-defined partition families, all phrased through Durfee rectangle
 * symbols. Conventions: alpha_k and beta_k read as 0 past the end, and the
 * empty partition belongs to none of the families below. */

/// U(m, n): the m-Durfee symbol satisfies
///   (1) l(alpha) - l(beta) <= -1 for m >= 1 (<= 0 for m = 0),
///   (2) alpha_1 <= m + j - 1,
///   (3) each of 1, ..., m-1 appears in alpha.
/// #U(m, n) = u(m, n).
inline bool in_U(const Partition& lambda, int m) {
    if (m < 0) throw std::invalid_argument("in_U: m must be >= 0");
    const DurfeeSymbol s = durfee_symbol(lambda, m);
    const int len_gap = s.alpha.length() - s.beta.length();
    if (len_gap > (m >= 1 ? -1 : 0)) return false;
    if (s.alpha.largest_part() > m + s.j - 1) return false;
    for (int k = 1; k <= m - 1; ++k)
        if (!s.alpha.contains_part(k)) return false;
    return true;
}

/// V(m+1, n): the m-Durfee symbol (with m = m_plus_1 - 1) satisfies
///   (1) l(alpha) - l(beta) <= -2,  (2) beta_1 = j,  (3) 1..m appear in alpha.
/// #V(m+1, n) = u(m+1, n); the same set as U(m+1, n), re-coordinatised one
/// rectangle lower.
inline bool in_V(const Partition& lambda, int m_plus_1) {
    if (m_plus_1 < 1) throw std::invalid_argument("in_V: parameter must be >= 1");
    const int m = m_plus_1 - 1;
    const DurfeeSymbol s = durfee_symbol(lambda, m);
    if (s.alpha.length() - s.beta.length() > -2) return false;
    if (s.beta.largest_part() != s.j) return false;
    for (int k = 1; k <= m; ++k)
        if (!s.alpha.contains_part(k)) return false;
    return true;
}

/// A(1, n): rank <= 0 and -1 not in the rank-set. Same cardinality as
/// B(1, n) and as u(1, n).
inline bool in_A1(const Partition& lambda) {
    return !lambda.empty() && rank(lambda) <= 0 && !rank_set_contains(lambda, -1);
}

/// B(1, n): rank <= -2 and 0 in the rank-set.
inline bool in_B1(const Partition& lambda) {
    return !lambda.empty() && rank(lambda) <= -2 && rank_set_contains(lambda, 0);
}

/// P(0, n): partitions of rank zero; #P(0, n) = N(0, n).
inline bool in_P0(const Partition& lambda) {
    return !lambda.empty() && rank(lambda) == 0;
}

/* Block decompositions. Each classifier assumes family membership and
 * returns the unique block index; the dispatching classify_blocks checks
 * membership first. */

/// Blocks of U(0, n), via the Durfee square symbol (gamma, delta)_d:
///   1: l-gap <= -2, delta_1 = d     2: l-gap <= -1, delta_1 <= d-1
///   3: l-gap  =  0, delta_1 <= d-1  4: l-gap  = -1, delta_1 = d
///   5: l-gap  =  0, delta_1 = d
inline int u0_block(const Partition& lambda) {
    const DurfeeSymbol s = durfee_symbol(lambda, 0);
    const int gap = s.alpha.length() - s.beta.length();
    const bool flush = s.beta.largest_part() == s.j;
    if (gap <= -2) return flush ? 1 : 2;
    if (gap == -1) return flush ? 4 : 2;
    return flush ? 5 : 3;  // gap == 0
}

/// Blocks of V(1, n): 1 if alpha_1 <= d-1; else 2 when s(beta) = 1, 3 when
/// s(beta) >= 2. For V(m+1, n) with m >= 1: 1 if alpha_1 < m+j, else 2.
inline int v_block(const Partition& lambda, int m_plus_1) {
    const int m = m_plus_1 - 1;
    const DurfeeSymbol s = durfee_symbol(lambda, m);
    if (m == 0) {
        if (s.alpha.largest_part() <= s.j - 1) return 1;
        return s.beta.smallest_part() == 1 ? 2 : 3;
    }
    return s.alpha.largest_part() < m + s.j ? 1 : 2;
}

/// The ten blocks of P(0, n), split on how alpha and beta meet the Durfee
/// square boundary.
inline int p_block(const Partition& lambda) {
    const DurfeeSymbol s = durfee_symbol(lambda, 0);
    const int d = s.j;
    const int a1 = s.alpha.part(1), a2 = s.alpha.part(2), a3 = s.alpha.part(3);
    const int b1 = s.beta.part(1), b2 = s.beta.part(2);
    if (b1 == d) {
        if (a1 < d) return 1;
        if (a1 == d && a2 < d) return 3;
        if (a2 == d && a3 < d) return 4;
        if (d != 2) return 5;
        return b2 == 2 ? 6 : 7;
    }
    if (a1 == d) return 2;
    if (a1 <= d - 2) return 8;
    return a2 == d - 1 ? 10 : 9;  // a1 == d-1
}

/// Sub-blocks of U4(0, n) and U5(0, n) used as disjoint injection targets:
/// U4 splits on whether 2 is a part of delta, U5 on whether d' = 3.
inline int u4_sub_block(const Partition& mu) {
    const DurfeeSymbol s = durfee_symbol(mu, 0);
    return s.beta.contains_part(2) ? 1 : 2;
}
inline int u5_sub_block(const Partition& mu) {
    return durfee_symbol(mu, 0).j != 3 ? 1 : 2;
}

/// Blocks of U(m, n) for m >= 1 that serve as injection targets (they do
/// not cover U(m, n)):
///   U1: l-gap <= -2, delta_1 = j', m appears in gamma;  U2: delta_1 < j'.
inline bool in_U1_m(const Partition& mu, int m) {
    if (!in_U(mu, m)) return false;
    const DurfeeSymbol s = durfee_symbol(mu, m);
    return s.alpha.length() - s.beta.length() <= -2 &&
           s.beta.largest_part() == s.j && s.alpha.contains_part(m);
}
inline bool in_U2_m(const Partition& mu, int m) {
    if (!in_U(mu, m)) return false;
    const DurfeeSymbol s = durfee_symbol(mu, m);
    return s.beta.largest_part() < s.j;
}

/* ------------------------------------------------------------------ */

enum class SetFamily { U, V, A1, B1, P0 };

/// Names a family instance, e.g. {V, 3} is V(3, n); `block` optionally
/// restricts enumeration to one block of the decomposition.
struct SetSpec {
    SetFamily family = SetFamily::U;
    int m = 0;
    std::optional<int> block;
};

inline bool in_set(const Partition& lambda, const SetSpec& spec) {
    switch (spec.family) {
        case SetFamily::U: return in_U(lambda, spec.m);
        case SetFamily::V: return in_V(lambda, spec.m);
        case SetFamily::A1: return in_A1(lambda);
        case SetFamily::B1: return in_B1(lambda);
        case SetFamily::P0: return in_P0(lambda);
    }
    return false;
}

inline int block_count(const SetSpec& spec) {
    switch (spec.family) {
        case SetFamily::U: return spec.m == 0 ? 5 : 0;
        case SetFamily::V: return spec.m == 1 ? 3 : 2;
        case SetFamily::P0: return 10;
        default: return 0;
    }
}

/// Block index of lambda within its family, or nullopt when lambda is not
/// a member (which signals a precondition violation to the caller).
inline std::optional<int> classify_blocks(const Partition& lambda,
                                          const SetSpec& spec) {
    if (block_count(spec) == 0)
        throw std::invalid_argument("classify_blocks: family has no block structure");
    if (!in_set(lambda, spec)) return std::nullopt;
    switch (spec.family) {
        case SetFamily::U: return u0_block(lambda);
        case SetFamily::V: return v_block(lambda, spec.m);
        case SetFamily::P0: return p_block(lambda);
        default: return std::nullopt;
    }
}

/// All partitions of n in the set (optionally one block), in the
/// enumeration order of partitions_of.
inline std::vector<Partition> enumerate_set(const SetSpec& spec, int n) {
    if (spec.block && (block_count(spec) == 0 || *spec.block < 1 ||
                       *spec.block > block_count(spec)))
        throw std::invalid_argument("enumerate_set: invalid block for family");
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        Partition lambda = Partition::unchecked(std::vector<int>(parts));
        if (!in_set(lambda, spec)) return;
        if (spec.block && classify_blocks(lambda, spec) != *spec.block) return;
        out.push_back(std::move(lambda));
    });
    return out;
}

}  // namespace unirank

#endif  // UNIRANK_SETS_HPP
