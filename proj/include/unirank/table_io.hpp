#ifndef UNIRANK_TABLE_IO_HPP
#define UNIRANK_TABLE_IO_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "unirank/stats.hpp"
#include "unirank/utable.hpp"

namespace unirank {

/// Everything the table and verify commands consume: the aggregate columns
/// plus the full u(m, n) table up to m_max. Values at n <= 1 follow the
/// series conventions (notably M(0,1) = -1).
struct TableBundle {
    int n_max = 0;
    int m_max = 0;
    StatTable stats;
    RankTable u;
};

inline TableBundle build_table_bundle(int n_max, int m_max) {
    TableBundle b;
    b.n_max = n_max;
    b.m_max = m_max;
    b.u = u_table_from_bivariate(std::max(m_max, 1), n_max);
    b.stats.n_max = n_max;
    b.stats.p = partition_count(n_max);
    b.stats.N0 = rank_count_series_sparse(0, n_max);
    b.stats.M0 = crank_count_series(0, n_max);
    b.stats.ospt = ospt_series(n_max);
    b.stats.q_minus1 = fixed_point_count_series(n_max);
    b.stats.u0 = b.u.rows[0];
    b.stats.u1 = b.u.rows[1];
    return b;
}

/// Prefix restriction of a cached bundle; a cache built large serves any
/// smaller query without recomputation.
inline TableBundle slice_bundle(const TableBundle& b, int n_max, int m_max) {
    if (n_max > b.n_max || m_max > b.m_max)
        throw std::invalid_argument("slice_bundle: requested range exceeds bundle");
    TableBundle out;
    out.n_max = n_max;
    out.m_max = m_max;
    const std::size_t cols = static_cast<std::size_t>(n_max) + 1;
    auto cut = [&](const std::vector<BigInt>& v) {
        return std::vector<BigInt>(v.begin(), v.begin() + static_cast<long>(cols));
    };
    out.stats.n_max = n_max;
    out.stats.p = cut(b.stats.p);
    out.stats.N0 = cut(b.stats.N0);
    out.stats.M0 = cut(b.stats.M0);
    out.stats.ospt = cut(b.stats.ospt);
    out.stats.q_minus1 = cut(b.stats.q_minus1);
    out.stats.u0 = cut(b.stats.u0);
    out.stats.u1 = cut(b.stats.u1);
    out.u.n_max = n_max;
    out.u.m_max = std::max(m_max, 1);
    for (int m = 0; m <= out.u.m_max; ++m)
        out.u.rows.push_back(cut(b.u.rows[static_cast<std::size_t>(m)]));
    return out;
}

namespace detail {

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline nlohmann::json column_json(const std::vector<BigInt>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

inline std::vector<BigInt> column_from_json(const nlohmann::json& arr, int n_max) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != n_max + 1)
        throw std::runtime_error("cache: column has wrong length");
    std::vector<BigInt> out;
    out.reserve(arr.size());
    for (const auto& x : arr) out.emplace_back(x.get<std::string>());
    return out;
}

/// Integers serialized as decimal strings; 64-bit consumers would overflow
/// on the larger counts.
inline nlohmann::json tables_json(const TableBundle& b) {
    nlohmann::json t;
    t["p"] = column_json(b.stats.p);
    t["N0"] = column_json(b.stats.N0);
    t["M0"] = column_json(b.stats.M0);
    t["ospt"] = column_json(b.stats.ospt);
    t["q_minus1"] = column_json(b.stats.q_minus1);
    nlohmann::json u = nlohmann::json::array();
    for (int m = 0; m <= b.m_max; ++m)
        u.push_back(column_json(b.u.rows[static_cast<std::size_t>(m)]));
    t["u"] = u;
    return t;
}

}  // namespace detail

inline constexpr int kCacheFormatVersion = 1;

inline void cache_save(const std::string& path, const TableBundle& b) {
    nlohmann::json doc;
    doc["format_version"] = kCacheFormatVersion;
    doc["meta"] = {{"n_max", b.n_max}, {"m_max", b.m_max}};
    nlohmann::json tables = detail::tables_json(b);
    doc["checksum"] = detail::fnv1a64(tables.dump());
    doc["tables"] = std::move(tables);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cache: cannot open " + path + " for writing");
    out << doc.dump();
    if (!out) throw std::runtime_error("cache: write to " + path + " failed");
}

/// Loads a cache file, refusing on version mismatch or checksum damage.
/// A loaded cache is a pure memo: the numbers are exactly what the builder
/// would recompute.
inline TableBundle cache_load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cache: cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("cache: " + path + " is not valid JSON: " + e.what());
    }
    if (!doc.contains("format_version") ||
        doc["format_version"].get<int>() != kCacheFormatVersion)
        throw std::runtime_error("cache: format version mismatch in " + path +
                                 " (expected " + std::to_string(kCacheFormatVersion) + ")");
    if (!doc.contains("tables") || !doc.contains("checksum") || !doc.contains("meta"))
        throw std::runtime_error("cache: " + path + " is missing required fields");
    const std::uint64_t stored = doc["checksum"].get<std::uint64_t>();
    const std::uint64_t fresh = detail::fnv1a64(doc["tables"].dump());
    if (stored != fresh)
        throw std::runtime_error("cache: checksum mismatch in " + path +
                                 " (file is corrupt)");
    TableBundle b;
    b.n_max = doc["meta"]["n_max"].get<int>();
    b.m_max = doc["meta"]["m_max"].get<int>();
    const auto& t = doc["tables"];
    b.stats.n_max = b.n_max;
    b.stats.p = detail::column_from_json(t["p"], b.n_max);
    b.stats.N0 = detail::column_from_json(t["N0"], b.n_max);
    b.stats.M0 = detail::column_from_json(t["M0"], b.n_max);
    b.stats.ospt = detail::column_from_json(t["ospt"], b.n_max);
    b.stats.q_minus1 = detail::column_from_json(t["q_minus1"], b.n_max);
    if (!t["u"].is_array() || static_cast<int>(t["u"].size()) != b.m_max + 1)
        throw std::runtime_error("cache: u table has wrong row count");
    b.u.n_max = b.n_max;
    b.u.m_max = b.m_max;
    for (const auto& row : t["u"])
        b.u.rows.push_back(detail::column_from_json(row, b.n_max));
    b.stats.u0 = b.u.rows[0];
    b.stats.u1 = b.u.rows.size() > 1 ? b.u.rows[1]
                                     : std::vector<BigInt>(static_cast<std::size_t>(b.n_max) + 1);
    return b;
}

/* ------------------------------ exports ----------------------------- */

/// CSV with a header row, columns n, p, N0, M0, ospt, u0..u{m_max}.
/// Byte-deterministic for a given bundle.
inline std::string to_csv(const TableBundle& b) {
    std::ostringstream out;
    out << "n,p,N0,M0,ospt";
    for (int m = 0; m <= b.m_max; ++m) out << ",u" << m;
    out << "\n";
    for (int n = 0; n <= b.n_max; ++n) {
        const std::size_t k = static_cast<std::size_t>(n);
        out << n << ',' << b.stats.p[k].str() << ',' << b.stats.N0[k].str() << ','
            << b.stats.M0[k].str() << ',' << b.stats.ospt[k].str();
        for (int m = 0; m <= b.m_max; ++m)
            out << ',' << b.u.rows[static_cast<std::size_t>(m)][k].str();
        out << "\n";
    }
    return out.str();
}

/// Single JSON object {"meta": ..., "tables": ...}; integer entries are
/// decimal strings.
inline std::string to_json_export(const TableBundle& b) {
    nlohmann::json doc;
    doc["meta"] = {{"n_max", b.n_max}, {"m_max", b.m_max},
                   {"columns", {"p", "N0", "M0", "ospt", "q_minus1", "u"}}};
    doc["tables"] = detail::tables_json(b);
    return doc.dump(2);
}

}  // namespace unirank

#endif  // UNIRANK_TABLE_IO_HPP
