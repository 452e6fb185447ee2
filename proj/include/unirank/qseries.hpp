#ifndef UNIRANK_QSERIES_HPP
#define UNIRANK_QSERIES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unirank {

using BigInt = boost::multiprecision::cpp_int;

/// Sentinel term count for infinite q-Pochhammer products.
inline constexpr int kInfiniteTerms = -1;

/// Formal power series in q truncated at a fixed order N, with exact integer
/// coefficients. All arithmetic stays at the same truncation order.
class QSeries {
  public:
    explicit QSeries(int order)
        : order_(order), c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("QSeries order must be >= 0");
    }

    static QSeries one(int order) {
        QSeries s(order);
        s.c_[0] = 1;
        return s;
    }

    static QSeries monomial(int exponent, int order) {
        QSeries s(order);
        if (exponent < 0) throw std::invalid_argument("monomial exponent must be >= 0");
        if (exponent <= order) s.c_[static_cast<std::size_t>(exponent)] = 1;
        return s;
    }

    int order() const { return order_; }

    const BigInt& coeff(int k) const {
        return c_.at(static_cast<std::size_t>(k));
    }

    BigInt& coeff_mut(int k) { return c_.at(static_cast<std::size_t>(k)); }

    const std::vector<BigInt>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    QSeries& operator+=(const QSeries& o) {
        require_same_order(o);
        for (int k = 0; k <= order_; ++k) c_[static_cast<std::size_t>(k)] += o.c_[static_cast<std::size_t>(k)];
        return *this;
    }

    QSeries& operator-=(const QSeries& o) {
        require_same_order(o);
        for (int k = 0; k <= order_; ++k) c_[static_cast<std::size_t>(k)] -= o.c_[static_cast<std::size_t>(k)];
        return *this;
    }

    /// this += sign * q^shift * src, truncated. The workhorse of every
    /// product built factor by factor.
    QSeries& add_shifted(const QSeries& src, int shift, int sign = +1) {
        require_same_order(src);
        if (shift < 0) throw std::invalid_argument("add_shifted: negative shift");
        for (int k = order_ - shift; k >= 0; --k) {
            const BigInt& v = src.c_[static_cast<std::size_t>(k)];
            if (v.is_zero()) continue;
            if (sign > 0)
                c_[static_cast<std::size_t>(k + shift)] += v;
            else
                c_[static_cast<std::size_t>(k + shift)] -= v;
        }
        return *this;
    }

    /// In-place multiplication by (1 - q^s).
    QSeries& multiply_one_minus_q_pow(int s) {
        if (s <= 0) throw std::invalid_argument("factor exponent must be >= 1");
        for (int k = order_; k >= s; --k)
            c_[static_cast<std::size_t>(k)] -= c_[static_cast<std::size_t>(k - s)];
        return *this;
    }

    /// In-place multiplication by q^s (coefficients above the order drop off).
    QSeries& shift_up(int s) {
        if (s < 0) throw std::invalid_argument("shift_up: negative shift");
        for (int k = order_; k >= 0; --k)
            c_[static_cast<std::size_t>(k)] =
                (k >= s) ? c_[static_cast<std::size_t>(k - s)] : BigInt(0);
        return *this;
    }

    bool operator==(const QSeries&) const = default;

  private:
    void require_same_order(const QSeries& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("QSeries truncation orders differ (" +
                                        std::to_string(order_) + " vs " +
                                        std::to_string(o.order_) + ")");
    }

    int order_;
    std::vector<BigInt> c_;
};

/// Truncated product by coefficient convolution; exact integer arithmetic.
inline QSeries series_mul(const QSeries& a, const QSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_mul: truncation orders differ");
    const int N = a.order();
    QSeries out(N);
    for (int i = 0; i <= N; ++i) {
        const BigInt& ai = a.coeff(i);
        if (ai.is_zero()) continue;
        for (int j = 0; j + i <= N; ++j) {
            const BigInt& bj = b.coeff(j);
            if (!bj.is_zero()) out.coeff_mut(i + j) += ai * bj;
        }
    }
    return out;
}

/* q-Pochhammer symbol (q^a; q)_n = prod_{i=1}^{n} (1 - q^{a+i-1}) truncated
 * at the given order. Pass kInfiniteTerms for the infinite product; factors
 * whose exponent exceeds the order are omitted since they only touch higher
 * coefficients, which makes the truncated infinite product finite. */
inline QSeries pochhammer(int a_power, int n_terms, int order) {
    if (n_terms == kInfiniteTerms && a_power < 1)
        throw std::invalid_argument(
            "pochhammer: infinite product requires exponent base >= 1");
    if (n_terms != kInfiniteTerms && n_terms < 0)
        throw std::invalid_argument("pochhammer: negative term count");
    if (a_power < 0)
        throw std::invalid_argument("pochhammer: exponent base must be >= 0");
    QSeries out = QSeries::one(order);
    if (a_power == 0 && n_terms != 0) return QSeries(order);  // (1;q)_n = 0
    for (int i = 1; n_terms == kInfiniteTerms || i <= n_terms; ++i) {
        const int e = a_power + i - 1;
        if (e > order) break;
        out.multiply_one_minus_q_pow(e);
    }
    return out;
}

/* Gaussian binomial [r; j]_q, the generating polynomial for partitions with
 * at most j parts, each part at most r-j. Built by the Pascal recurrence
 *
 *   [n; k] = [n-1; k-1] + q^k [n-1; k],
 *
 * which keeps everything in integer arithmetic; no series division. */
inline QSeries gauss_binomial(int r, int j, int order) {
    if (r < 0) throw std::invalid_argument("gauss_binomial: r must be >= 0");
    if (j < 0 || j > r) return QSeries(order);
    j = std::min(j, r - j);
    std::vector<QSeries> row(static_cast<std::size_t>(j) + 1, QSeries(order));
    row[0] = QSeries::one(order);
    for (int n = 1; n <= r; ++n) {
        for (int k = std::min(j, n); k >= 1; --k) {
            row[static_cast<std::size_t>(k)].shift_up(k);
            row[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k - 1)];
        }
    }
    return row[static_cast<std::size_t>(j)];
}

/// p(0..n_max) by the pentagonal-number recurrence, p(0) = 1.
inline std::vector<BigInt> partition_count(int n_max) {
    if (n_max < 0) throw std::invalid_argument("partition_count: n_max must be >= 0");
    std::vector<BigInt> p(static_cast<std::size_t>(n_max) + 1);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        BigInt acc = 0;
        for (int k = 1;; ++k) {
            const long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            const long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > n) break;
            if (k % 2 == 1) {
                acc += p[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) acc += p[static_cast<std::size_t>(n - g2)];
            } else {
                acc -= p[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) acc -= p[static_cast<std::size_t>(n - g2)];
            }
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

/// Generating series of partitions with every part at most max_part
/// (equivalently, at most max_part parts), 1/(q;q)_{max_part} truncated.
inline QSeries restricted_partition_series(int max_part, int order) {
    QSeries s = QSeries::one(order);
    for (int part = 1; part <= max_part; ++part)
        for (int k = part; k <= order; ++k)
            s.coeff_mut(k) += s.coeff(k - part);
    return s;
}

}  // namespace unirank

#endif  // UNIRANK_QSERIES_HPP
