#ifndef UNIRANK_UTABLE_HPP
#define UNIRANK_UTABLE_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "unirank/enumerate.hpp"
#include "unirank/parallel.hpp"
#include "unirank/qseries.hpp"

namespace unirank {

/// Table of u(m, n): the number of strongly unimodal sequences of weight n
/// whose rank is m. Stored for m >= 0; lookups fold negative m through the
/// symmetry u(m, n) = u(-m, n).
struct RankTable {
    int m_max = 0;
    int n_max = 0;
    std::vector<std::vector<BigInt>> rows;  // rows[m][n], 0 <= m <= m_max

    const BigInt& at(int m, int n) const {
        const int a = std::abs(m);
        if (a > m_max || n < 0 || n > n_max)
            throw std::out_of_range("RankTable::at(" + std::to_string(m) + "," +
                                    std::to_string(n) + ") outside table");
        return rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(n)];
    }
};

namespace detail {

inline long long triangular(long long k) { return k * (k + 1) / 2; }

/// Largest z-degree whose minimal q-weight C(d+1,2) still fits under N. Any
/// term of larger z-degree in the bivariate product carries q-exponent
/// beyond the truncation order and can never flow back into the table.
inline int bivariate_band(int n_max) {
    int d = 0;
    while (triangular(d + 1) <= n_max) ++d;
    return d;
}

}  // namespace detail

/* u(m, n) through the single-variable generating function: for fixed m >= 0
 *
 *   sum_{r>=m} sum_{k=0}^{r-m} [r; k+m]_q [r; k]_q
 *       q^{r+1 + C(k+m+1,2) + C(k+1,2)}.
 *
 * Gaussian binomial rows are carried along by the Pascal recurrence and each
 * (r, k) product is truncated to the coefficients that can still reach the
 * table, so the double sum terminates exactly, with no dropped terms. */
inline RankTable u_table_from_gf(int m_max, int n_max) {
    if (m_max < 0 || n_max < 0)
        throw std::invalid_argument("u_table_from_gf: negative bounds");
    const int N = n_max;
    RankTable table{m_max, n_max,
                    std::vector<std::vector<BigInt>>(
                        static_cast<std::size_t>(m_max) + 1,
                        std::vector<BigInt>(static_cast<std::size_t>(N) + 1))};

    const int k_band = detail::bivariate_band(N);
    const int j_max = std::min(k_band + m_max, N);
    // row[j] holds [r; j]_q truncated at N for the current r
    std::vector<std::vector<BigInt>> row(
        static_cast<std::size_t>(j_max) + 1,
        std::vector<BigInt>(static_cast<std::size_t>(N) + 1));
    row[0][0] = 1;  // [0; 0] = 1

    for (int r = 0; r + 1 <= N; ++r) {
        for (int m = 0; m <= m_max; ++m) {
            if (r < m) continue;
            for (int k = 0; k <= std::min(k_band, r - m); ++k) {
                const int j2 = k + m;
                if (j2 > j_max) break;
                const long long base = r + 1 + detail::triangular(k + m) +
                                       detail::triangular(k);
                if (base > N) break;
                const int L = N - static_cast<int>(base);
                const auto& a = row[static_cast<std::size_t>(k)];
                const auto& b = row[static_cast<std::size_t>(j2)];
                auto& dest = table.rows[static_cast<std::size_t>(m)];
                for (int e1 = 0; e1 <= L; ++e1) {
                    const BigInt& av = a[static_cast<std::size_t>(e1)];
                    if (av.is_zero()) continue;
                    const int off = static_cast<int>(base) + e1;
                    for (int e2 = 0; e2 + e1 <= L; ++e2) {
                        const BigInt& bv = b[static_cast<std::size_t>(e2)];
                        if (!bv.is_zero())
                            dest[static_cast<std::size_t>(off + e2)] += av * bv;
                    }
                }
            }
        }
        // advance Pascal row r -> r+1: [r+1; j] = [r; j-1] + q^j [r; j]
        for (int j = std::min(j_max, r + 1); j >= 1; --j) {
            auto& cur = row[static_cast<std::size_t>(j)];
            const auto& below = row[static_cast<std::size_t>(j - 1)];
            for (int e = N; e >= 0; --e) {
                BigInt v = (e >= j) ? cur[static_cast<std::size_t>(e - j)] : BigInt(0);
                v += below[static_cast<std::size_t>(e)];
                cur[static_cast<std::size_t>(e)] = std::move(v);
            }
        }
    }
    return table;
}

/* u(m, n) through the bivariate product sum_r (-zq; q)_r (-q/z; q)_r q^{r+1},
 * multiplying one factor (1 + z q^r) and one factor (1 + q^r / z) per step
 * and keeping the full Laurent band in z that can still contribute. Rows
 * beyond the band are identically zero below the truncation order. The two
 * z-signs are accumulated independently and compared, which checks the
 * rank symmetry u(m, n) = u(-m, n) as a side effect. */
inline RankTable u_table_from_bivariate(int m_max, int n_max) {
    if (m_max < 0 || n_max < 0)
        throw std::invalid_argument("u_table_from_bivariate: negative bounds");
    const int N = n_max;
    const int band = detail::bivariate_band(N);
    const int cols = 2 * band + 1;

    std::vector<std::vector<BigInt>> product(
        static_cast<std::size_t>(cols),
        std::vector<BigInt>(static_cast<std::size_t>(N) + 1));
    product[static_cast<std::size_t>(band)][0] = 1;

    std::vector<std::vector<BigInt>> signed_rows(
        static_cast<std::size_t>(cols),
        std::vector<BigInt>(static_cast<std::size_t>(N) + 1));

    auto accumulate = [&](int r) {
        for (int z = 0; z < cols; ++z) {
            const auto& col = product[static_cast<std::size_t>(z)];
            auto& dest = signed_rows[static_cast<std::size_t>(z)];
            for (int e = 0; e + r + 1 <= N; ++e)
                if (!col[static_cast<std::size_t>(e)].is_zero())
                    dest[static_cast<std::size_t>(e + r + 1)] +=
                        col[static_cast<std::size_t>(e)];
        }
    };

    accumulate(0);
    for (int r = 1; r + 1 <= N; ++r) {
        for (int z = cols - 1; z >= 1; --z) {
            const auto& src = product[static_cast<std::size_t>(z - 1)];
            auto& dst = product[static_cast<std::size_t>(z)];
            for (int e = N - r; e >= 0; --e)
                if (!src[static_cast<std::size_t>(e)].is_zero())
                    dst[static_cast<std::size_t>(e + r)] += src[static_cast<std::size_t>(e)];
        }
        for (int z = 0; z + 1 < cols; ++z) {
            const auto& src = product[static_cast<std::size_t>(z + 1)];
            auto& dst = product[static_cast<std::size_t>(z)];
            for (int e = N - r; e >= 0; --e)
                if (!src[static_cast<std::size_t>(e)].is_zero())
                    dst[static_cast<std::size_t>(e + r)] += src[static_cast<std::size_t>(e)];
        }
        accumulate(r);
    }

    for (int m = 1; m <= band; ++m)
        if (signed_rows[static_cast<std::size_t>(band + m)] !=
            signed_rows[static_cast<std::size_t>(band - m)])
            throw std::logic_error(
                "bivariate expansion violated rank symmetry at m=" +
                std::to_string(m));

    RankTable table{m_max, n_max, {}};
    table.rows.reserve(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) {
        if (m <= band)
            table.rows.push_back(std::move(signed_rows[static_cast<std::size_t>(band + m)]));
        else  // minimal q-weight of z-degree m exceeds the order
            table.rows.emplace_back(static_cast<std::size_t>(N) + 1);
    }
    return table;
}

/// u(m, n) by direct enumeration of every strongly unimodal sequence, the
/// combinatorial route of last resort. `totals[n]` counts all sequences of
/// weight n regardless of rank.
struct EnumeratedRankTable {
    RankTable table;
    std::vector<BigInt> totals;
};

inline EnumeratedRankTable u_table_from_enumeration(int m_max, int n_max,
                                                    int threads = 1) {
    if (m_max < 0 || n_max < 0)
        throw std::invalid_argument("u_table_from_enumeration: negative bounds");
    RankTable table{m_max, n_max,
                    std::vector<std::vector<BigInt>>(
                        static_cast<std::size_t>(m_max) + 1,
                        std::vector<BigInt>(static_cast<std::size_t>(n_max) + 1))};
    std::vector<BigInt> totals(static_cast<std::size_t>(n_max) + 1);
    if (n_max >= 0) totals[0] = 0;

    parallel_for(1, n_max, threads, [&](int n) {
        // count signed ranks so the m <-> -m symmetry is observed, not assumed
        std::vector<long long> counts(2 * static_cast<std::size_t>(m_max) + 1, 0);
        long long total = 0;
        for_each_strongly_unimodal(n, [&](const UnimodalView& v) {
            ++total;
            const int m = v.rank();
            if (std::abs(m) <= m_max) counts[static_cast<std::size_t>(m + m_max)]++;
        });
        totals[static_cast<std::size_t>(n)] = total;
        for (int m = 0; m <= m_max; ++m) {
            if (counts[static_cast<std::size_t>(m_max + m)] !=
                counts[static_cast<std::size_t>(m_max - m)])
                throw std::logic_error("enumeration violated rank symmetry at n=" +
                                       std::to_string(n));
            table.rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] =
                counts[static_cast<std::size_t>(m_max + m)];
        }
    });
    return {std::move(table), std::move(totals)};
}

}  // namespace unirank

#endif  // UNIRANK_UTABLE_HPP
