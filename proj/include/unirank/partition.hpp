#ifndef UNIRANK_PARTITION_HPP
#define UNIRANK_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace unirank {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition (weight 0) is a valid value.
class Partition {
  public:
    Partition() = default;

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument(
                    "partition part " + std::to_string(i + 1) + " is " +
                    std::to_string(parts_[i]) + ", parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument(
                    "partition parts must be weakly decreasing (violated at index " +
                    std::to_string(i + 1) + ")");
        }
    }

    /* Construction bypassing validation. The caller guarantees the vector is
     * already sorted weakly decreasing with positive entries; zero parts are
     * stripped. Used by enumerators and map surgery on hot paths. */
    static Partition unchecked(std::vector<int> parts) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        Partition p;
        p.parts_ = std::move(parts);
        return p;
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// Number of parts.
    int length() const { return static_cast<int>(parts_.size()); }

    int weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    /// k-th part, 1-based, with the convention that parts beyond the last
    /// are zero.
    int part(int k) const {
        if (k < 1) throw std::out_of_range("part index must be >= 1");
        return k <= length() ? parts_[static_cast<std::size_t>(k - 1)] : 0;
    }

    int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }
    int smallest_part() const { return parts_.empty() ? 0 : parts_.back(); }

    bool contains_part(int v) const {
        return std::binary_search(parts_.begin(), parts_.end(), v,
                                  std::greater<int>());
    }

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

  private:
    std::vector<int> parts_;
};

/// Conjugate partition: column counts of the Ferrers diagram. An involution.
inline Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(lambda.largest_part()));
    for (int p : lambda.parts())
        for (int i = 0; i < p; ++i) cols[static_cast<std::size_t>(i)]++;
    return Partition::unchecked(std::move(cols));
}

/// Dyson rank: largest part minus number of parts. The empty partition has
/// rank 0 by convention.
inline int rank(const Partition& lambda) {
    return lambda.largest_part() - lambda.length();
}

/// Andrews-Garvan crank: the largest part when the partition has no ones,
/// otherwise (number of parts exceeding the number of ones) minus (number
/// of ones). Undefined for the empty partition.
inline int crank(const Partition& lambda) {
    if (lambda.empty())
        throw std::invalid_argument("crank of the empty partition is undefined");
    const auto& p = lambda.parts();
    int ones = 0;
    for (auto it = p.rbegin(); it != p.rend() && *it == 1; ++it) ones++;
    if (ones == 0) return lambda.largest_part();
    int larger = static_cast<int>(
        std::lower_bound(p.begin(), p.end(), ones, std::greater<int>()) -
        p.begin());
    return larger - ones;
}

/* Dyson's rank-set of lambda is the strictly increasing integer sequence
 * (j - lambda_{j+1})_{j>=0}, with lambda padded by zeros. For the empty
 * partition this is (0, 1, 2, ...). */
inline bool rank_set_contains(const Partition& lambda, int v) {
    if (v >= lambda.length()) return true;
    for (int j = 0; j <= lambda.length(); ++j) {
        int entry = j - lambda.part(j + 1);
        if (entry == v) return true;
        if (entry > v) return false;  // entries strictly increase
    }
    return false;
}

}  // namespace unirank

#endif  // UNIRANK_PARTITION_HPP
