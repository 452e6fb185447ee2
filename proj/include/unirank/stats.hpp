#ifndef UNIRANK_STATS_HPP
#define UNIRANK_STATS_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "unirank/enumerate.hpp"
#include "unirank/partition.hpp"
#include "unirank/qseries.hpp"
#include "unirank/utable.hpp"

namespace unirank {

/* ------------------------------------------------------------------ */
/*  Census route: one pass over the partitions of n.                   */
/* ------------------------------------------------------------------ */

/// Exhaustive rank/crank census of the partitions of n. Slots are indexed
/// by statistic + n, covering the full ranges rank in [-(n-1), n-1] and
/// crank in [-n, n]. Counts fit comfortably in 64 bits at census scale.
struct PartitionCensus {
    int n = 0;
    std::vector<long long> rank_slots;
    std::vector<long long> crank_slots;
    long long fixed_point = 0;   // partitions with -1 in the rank-set
    long long rank_moment = 0;   // sum of ranks over rank >= 0
    long long crank_moment = 0;  // sum of cranks over crank >= 0

    long long N(int m) const {
        return std::abs(m) > n ? 0 : rank_slots[static_cast<std::size_t>(m + n)];
    }
    long long M(int m) const {
        return std::abs(m) > n ? 0 : crank_slots[static_cast<std::size_t>(m + n)];
    }
    /// ospt(n) straight from the defining crank/rank sums.
    long long ospt() const { return crank_moment - rank_moment; }
};

inline PartitionCensus census_partitions(int n) {
    if (n < 1) throw std::invalid_argument("census_partitions: n must be >= 1");
    PartitionCensus c;
    c.n = n;
    c.rank_slots.assign(2 * static_cast<std::size_t>(n) + 1, 0);
    c.crank_slots.assign(2 * static_cast<std::size_t>(n) + 1, 0);
    for_each_partition(n, [&](const std::vector<int>& parts) {
        const int len = static_cast<int>(parts.size());
        const int r = parts[0] - len;
        c.rank_slots[static_cast<std::size_t>(r + n)]++;
        if (r >= 1) c.rank_moment += r;

        int ones = 0;
        for (int i = len - 1; i >= 0 && parts[static_cast<std::size_t>(i)] == 1; --i)
            ones++;
        int cr;
        if (ones == 0) {
            cr = parts[0];
        } else {
            int larger = 0;
            while (larger < len && parts[static_cast<std::size_t>(larger)] > ones)
                larger++;
            cr = larger - ones;
        }
        c.crank_slots[static_cast<std::size_t>(cr + n)]++;
        if (cr >= 1) c.crank_moment += cr;

        // -1 in the rank-set <=> lambda_k = k for some k (unique if any)
        for (int k = 1; k <= len; ++k) {
            const int pk = parts[static_cast<std::size_t>(k - 1)];
            if (pk == k) {
                c.fixed_point++;
                break;
            }
            if (pk < k) break;
        }
    });
    return c;
}

/// ospt(n) by exhaustive evaluation of its defining sums. Requires n >= 1.
/// Note the n = 1 value is 0 under the combinatorial crank; the series
/// conventions below give 1 there, agreeing from n = 2 on.
inline long long ospt_direct(int n) {
    if (n < 1) throw std::invalid_argument("ospt_direct: n must be >= 1");
    return census_partitions(n).ospt();
}

/* ------------------------------------------------------------------ */
/*  Series routes: exact tables far beyond enumeration range.          */
/* ------------------------------------------------------------------ */

namespace detail {

/// result[n] = sum over sparse terms (coeff, exponent) of coeff * p(n - exponent).
inline std::vector<BigInt> convolve_with_partition_series(
    const std::vector<std::pair<int, long long>>& terms, int n_max) {
    const std::vector<BigInt> p = partition_count(n_max);
    std::vector<BigInt> out(static_cast<std::size_t>(n_max) + 1);
    for (const auto& [coeff, exp] : terms) {
        if (exp < 0 || exp > n_max || coeff == 0) continue;
        for (long long k = 0; exp + k <= n_max; ++k)
            out[static_cast<std::size_t>(exp + k)] +=
                coeff * p[static_cast<std::size_t>(k)];
    }
    return out;
}

}  // namespace detail

/* N(m, n) for a signed band of m at once, by stripping the first row and
 * column of each counted partition: a partition with largest part a and
 * exactly l parts leaves a partition inside an (l-1) x (a-1) box, so
 *
 *   N(m, n) = sum_l [q^{n-2l-m+1}] [2l+m-2; l-1]_q.
 *
 * One Pascal sweep over r serves every (m, l) pair, since r = 2l+m-2 and
 * j = l-1 determine m = r - 2j. The empty partition is not counted, so
 * column n = 0 is zero. Positive and negative m follow genuinely different
 * accumulation paths, which keeps the rank symmetry check meaningful. */
inline std::vector<std::vector<BigInt>> rank_count_band(int m_band, int n_max) {
    if (m_band < 0 || n_max < 0)
        throw std::invalid_argument("rank_count_band: negative bounds");
    const int N = n_max;
    std::vector<std::vector<BigInt>> rows(
        2 * static_cast<std::size_t>(m_band) + 1,
        std::vector<BigInt>(static_cast<std::size_t>(N) + 1));

    const int j_max = std::min(N, (N + m_band) / 2 + 1);
    std::vector<std::vector<BigInt>> pascal(
        static_cast<std::size_t>(j_max) + 1,
        std::vector<BigInt>(static_cast<std::size_t>(N) + 1));
    pascal[0][0] = 1;

    for (int r = 0; r + 1 <= N; ++r) {
        for (int j = 0; j <= std::min(j_max, r); ++j) {
            const int m = r - 2 * j;
            if (m < -m_band || m > m_band) continue;
            const auto& src = pascal[static_cast<std::size_t>(j)];
            auto& dest = rows[static_cast<std::size_t>(m + m_band)];
            for (int e = 0; e + r + 1 <= N; ++e)
                if (!src[static_cast<std::size_t>(e)].is_zero())
                    dest[static_cast<std::size_t>(e + r + 1)] +=
                        src[static_cast<std::size_t>(e)];
        }
        for (int j = std::min(j_max, r + 1); j >= 1; --j) {
            auto& cur = pascal[static_cast<std::size_t>(j)];
            const auto& below = pascal[static_cast<std::size_t>(j - 1)];
            for (int e = N; e >= 0; --e) {
                BigInt v = (e >= j) ? cur[static_cast<std::size_t>(e - j)] : BigInt(0);
                v += below[static_cast<std::size_t>(e)];
                cur[static_cast<std::size_t>(e)] = std::move(v);
            }
        }
    }
    return rows;
}

/// Single row N(m, .) of the band above.
inline std::vector<BigInt> rank_count_series(int m, int n_max) {
    auto rows = rank_count_band(std::abs(m), n_max);
    return std::move(rows[static_cast<std::size_t>(m + std::abs(m))]);
}

/* Second, unrelated route to N(m, n) for m >= 0: the sparse expansion
 *
 *   sum_n N(m,n) q^n = (1/(q;q)_inf) sum_{j>=1} (-1)^{j-1}
 *                      (q^{j(3j-1)/2 + jm} - q^{j(3j-1)/2 + jm + j}),
 *
 * a handful of signed shifts of the partition series. Cheap even at
 * n_max in the tens of thousands. */
inline std::vector<BigInt> rank_count_series_sparse(int m, int n_max) {
    if (m < 0)
        throw std::invalid_argument(
            "rank_count_series_sparse: use symmetry for m < 0");
    std::vector<std::pair<int, long long>> terms;
    for (long long j = 1;; ++j) {
        const long long base = j * (3 * j - 1) / 2 + j * m;
        if (base > n_max) break;
        const int sign = (j % 2 == 1) ? 1 : -1;
        terms.emplace_back(sign, base);
        terms.emplace_back(-sign, base + j);
    }
    return detail::convolve_with_partition_series(terms, n_max);
}

/* M(m, n) by the analogous sparse expansion with triangular exponents,
 *
 *   sum_n M(m,n) q^n = (1/(q;q)_inf) sum_{j>=1} (-1)^{j-1}
 *                      (q^{j(j-1)/2 + jm} - q^{j(j-1)/2 + jm + j}),
 *
 * valid for signed m with sub-zero exponents discarded. The n = 1 column
 * carries the classical crank anomaly (M(0,1) = -1, M(+-1,1) = 1); every
 * identity downstream therefore starts at n = 2. */
inline std::vector<BigInt> crank_count_series(int m, int n_max) {
    std::vector<std::pair<int, long long>> terms;
    const long long am = std::abs(static_cast<long long>(m));
    for (long long j = 1;; ++j) {
        const long long low = j * (j - 1) / 2 - j * am;
        if (low > n_max) break;
        const long long base = j * (j - 1) / 2 + j * m;
        const int sign = (j % 2 == 1) ? 1 : -1;
        if (base <= n_max) terms.emplace_back(sign, base);
        if (base + j <= n_max) terms.emplace_back(-sign, base + j);
    }
    return detail::convolve_with_partition_series(terms, n_max);
}

/// First moment of the positive ranks: result[n] = sum_{m>=1} m N(m, n).
inline std::vector<BigInt> rank_positive_moment_series(int n_max) {
    std::vector<std::pair<int, long long>> terms;
    for (long long j = 1;; ++j) {
        const long long base = j * (3 * j - 1) / 2;
        if (base + j > n_max) break;
        const int sign = (j % 2 == 1) ? 1 : -1;
        for (long long t = 1; base + t * j <= n_max; ++t)
            terms.emplace_back(sign, base + t * j);
    }
    return detail::convolve_with_partition_series(terms, n_max);
}

/// First moment of the positive cranks: result[n] = sum_{m>=1} m M(m, n).
inline std::vector<BigInt> crank_positive_moment_series(int n_max) {
    std::vector<std::pair<int, long long>> terms;
    for (long long j = 1;; ++j) {
        const long long base = j * (j - 1) / 2;
        if (base + j > n_max) break;
        const int sign = (j % 2 == 1) ? 1 : -1;
        for (long long t = 1; base + t * j <= n_max; ++t)
            terms.emplace_back(sign, base + t * j);
    }
    return detail::convolve_with_partition_series(terms, n_max);
}

/// ospt(n) as crank moment minus rank moment. Matches the census from
/// n = 2 on; the n = 1 entry is 1 under this convention.
inline std::vector<BigInt> ospt_series(int n_max) {
    std::vector<BigInt> c = crank_positive_moment_series(n_max);
    const std::vector<BigInt> r = rank_positive_moment_series(n_max);
    for (int n = 0; n <= n_max; ++n)
        c[static_cast<std::size_t>(n)] -= r[static_cast<std::size_t>(n)];
    return c;
}

/* q(-1, n): partitions with -1 in the rank-set, equivalently with a fixed
 * point lambda_k = k (necessarily unique). Splitting on k gives
 *
 *   sum_n q(-1,n) q^n = sum_{k>=1} q^{k^2} / ((q;q)_{k-1} (q;q)_k).       */
inline std::vector<BigInt> fixed_point_count_series(int n_max) {
    std::vector<BigInt> out(static_cast<std::size_t>(n_max) + 1);
    for (int k = 1; static_cast<long long>(k) * k <= n_max; ++k) {
        const int L = n_max - k * k;
        QSeries conv = series_mul(restricted_partition_series(k - 1, L),
                                  restricted_partition_series(k, L));
        for (int e = 0; e <= L; ++e)
            out[static_cast<std::size_t>(e + k * k)] += conv.coeff(e);
    }
    return out;
}

/* ------------------------------------------------------------------ */
/*  Aggregate table.                                                   */
/* ------------------------------------------------------------------ */

/// Columns used by the identity and inequality suites. Built from the
/// series routes, so it scales to thousands of n; entries at n <= 1 follow
/// the series conventions noted above.
struct StatTable {
    int n_max = 0;
    std::vector<BigInt> p;         // partition numbers
    std::vector<BigInt> N0;        // rank-zero counts
    std::vector<BigInt> M0;        // crank-zero counts
    std::vector<BigInt> u0, u1;    // unimodal rank counts
    std::vector<BigInt> ospt;
    std::vector<BigInt> q_minus1;  // -1 in the rank-set
};

inline StatTable build_stat_table(int n_max) {
    StatTable t;
    t.n_max = n_max;
    t.p = partition_count(n_max);
    t.N0 = rank_count_series_sparse(0, n_max);
    t.M0 = crank_count_series(0, n_max);
    t.ospt = ospt_series(n_max);
    t.q_minus1 = fixed_point_count_series(n_max);
    RankTable u = u_table_from_bivariate(1, n_max);
    t.u0 = std::move(u.rows[0]);
    t.u1 = std::move(u.rows[1]);
    return t;
}

}  // namespace unirank

#endif  // UNIRANK_STATS_HPP
