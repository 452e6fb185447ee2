#ifndef UNIRANK_DURFEE_HPP
#define UNIRANK_DURFEE_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "unirank/partition.hpp"

namespace unirank {

/// m-Durfee rectangle symbol of a partition: the largest (m+j) x j rectangle
/// contained in the Ferrers diagram, together with alpha (the columns to the
/// right of the rectangle, read as a partition) and beta (the rows below it).
/// For m = 0 the rectangle is the classical Durfee square.
struct DurfeeSymbol {
    int m = 0;
    int j = 0;
    Partition alpha;
    Partition beta;

    int rectangle_height() const { return m + j; }

    int weight() const {
        return alpha.weight() + beta.weight() + (m + j) * j;
    }

    auto operator<=>(const DurfeeSymbol&) const = default;

    std::string to_string() const {
        return "(" + alpha.to_string() + ";" + beta.to_string() + ")_" +
               std::to_string(m + j) + "x" + std::to_string(j);
    }
};

/* Decompose lambda around its m-Durfee rectangle. The rectangle width is
 *
 *   j = max{ k >= 1 : lambda_{k+m} >= k }   (0 when l(lambda) <= m),
 *
 * alpha = (lambda_1 - j, ..., lambda_{m+j} - j)' and beta is the remaining
 * rows. When j = 0 the symbol degenerates to (lambda', empty). */
inline DurfeeSymbol durfee_symbol(const Partition& lambda, int m) {
    if (m < 0) throw std::invalid_argument("durfee_symbol: m must be >= 0");
    const int ell = lambda.length();
    if (ell <= m) return {m, 0, conjugate(lambda), Partition{}};

    int j = 0;
    for (int k = 1; k + m <= ell; ++k)
        if (lambda.part(k + m) >= k) j = k;

    std::vector<int> head;
    head.reserve(static_cast<std::size_t>(m + j));
    for (int i = 1; i <= m + j; ++i)
        if (lambda.part(i) - j > 0) head.push_back(lambda.part(i) - j);
    Partition alpha = conjugate(Partition::unchecked(std::move(head)));

    std::vector<int> tail(lambda.parts().begin() + (m + j),
                          lambda.parts().end());
    return {m, j, std::move(alpha), Partition::unchecked(std::move(tail))};
}

/// Rebuild the unique partition whose m-Durfee rectangle symbol is `sym`.
/// Inverse of durfee_symbol in both directions.
inline Partition assemble_symbol(const DurfeeSymbol& sym) {
    if (sym.m < 0 || sym.j < 0)
        throw std::invalid_argument("assemble_symbol: negative rectangle");
    if (sym.alpha.largest_part() > sym.m + sym.j)
        throw std::invalid_argument("assemble_symbol: alpha part exceeds m+j");
    if (sym.beta.largest_part() > sym.j)
        throw std::invalid_argument("assemble_symbol: beta part exceeds j");
    // legs may arrive through unchecked construction; re-validate them here
    for (const Partition* leg : {&sym.alpha, &sym.beta})
        for (int i = 2; i <= leg->length(); ++i)
            if (leg->part(i - 1) < leg->part(i) || leg->part(i) < 1)
                throw std::invalid_argument("assemble_symbol: leg is not a partition");

    Partition alpha_rows = conjugate(sym.alpha);
    std::vector<int> rows;
    rows.reserve(static_cast<std::size_t>(sym.m + sym.j) +
                 static_cast<std::size_t>(sym.beta.length()));
    for (int i = 1; i <= sym.m + sym.j; ++i)
        rows.push_back(sym.j + alpha_rows.part(i));
    for (int b : sym.beta.parts()) rows.push_back(b);

    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i - 1] < rows[i])
            throw std::invalid_argument(
                "assemble_symbol: symbol does not describe a partition");
    return Partition::unchecked(std::move(rows));
}

inline Partition assemble_symbol(Partition alpha, Partition beta, int m, int j) {
    return assemble_symbol(DurfeeSymbol{m, j, std::move(alpha), std::move(beta)});
}

}  // namespace unirank

#endif  // UNIRANK_DURFEE_HPP
