#ifndef UNIRANK_ENUMERATE_HPP
#define UNIRANK_ENUMERATE_HPP

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "unirank/partition.hpp"

namespace unirank {

/// A strongly unimodal sequence: a strictly increasing run, a peak strictly
/// above both neighbours, then a strictly decreasing run. All entries are
/// positive; the peak is the unique maximum.
struct UnimodalSequence {
    std::vector<int> rising;   // strictly increasing, all < peak
    int peak = 0;
    std::vector<int> falling;  // strictly decreasing, all < peak

    UnimodalSequence() = default;

    UnimodalSequence(std::vector<int> rising_, int peak_, std::vector<int> falling_)
        : rising(std::move(rising_)), peak(peak_), falling(std::move(falling_)) {
        if (peak < 1) throw std::invalid_argument("peak must be positive");
        for (std::size_t i = 0; i < rising.size(); ++i) {
            if (rising[i] < 1 || rising[i] >= peak ||
                (i > 0 && rising[i - 1] >= rising[i]))
                throw std::invalid_argument("rising run must be strictly increasing below the peak");
        }
        for (std::size_t i = 0; i < falling.size(); ++i) {
            if (falling[i] < 1 || falling[i] >= peak ||
                (i > 0 && falling[i - 1] <= falling[i]))
                throw std::invalid_argument("falling run must be strictly decreasing below the peak");
        }
    }

    int weight() const {
        int w = peak;
        for (int v : rising) w += v;
        for (int v : falling) w += v;
        return w;
    }

    /// Rank: number of entries after the peak minus number before it.
    int rank() const {
        return static_cast<int>(falling.size()) - static_cast<int>(rising.size());
    }

    auto operator<=>(const UnimodalSequence&) const = default;
};

/// Non-owning view passed to enumeration visitors; spans point into scratch
/// buffers owned by the enumerator and are invalid after the visit returns.
struct UnimodalView {
    std::span<const int> rising;
    int peak = 0;
    std::span<const int> falling;

    int rank() const {
        return static_cast<int>(falling.size()) - static_cast<int>(rising.size());
    }

    UnimodalSequence to_sequence() const {
        return UnimodalSequence(std::vector<int>(rising.begin(), rising.end()),
                                peak,
                                std::vector<int>(falling.begin(), falling.end()));
    }
};

inline int seq_rank(const UnimodalSequence& s) { return s.rank(); }

/* Iterative generator for the partitions of n in lexicographically
 * decreasing order of the part vectors: (n), (n-1,1), ..., (1^n). Each
 * generator instance owns its cursor, so independent sweeps can run on
 * separate threads. */
class PartitionGenerator {
  public:
    explicit PartitionGenerator(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    }

    /// Advances to the next partition; returns false when exhausted. The
    /// referenced vector stays valid until the next call.
    bool next(const std::vector<int>*& out) {
        if (!started_) {
            started_ = true;
            if (n_ > 0) buf_.assign(1, n_);
            out = &buf_;
            return true;
        }
        if (buf_.empty()) return false;
        // Strip trailing ones, decrement the last part above 1, then pack
        // the freed weight greedily under the new cap.
        int freed = 0;
        while (!buf_.empty() && buf_.back() == 1) {
            buf_.pop_back();
            freed++;
        }
        if (buf_.empty()) return false;
        buf_.back()--;
        freed++;
        const int cap = buf_.back();
        while (freed >= cap) {
            buf_.push_back(cap);
            freed -= cap;
        }
        if (freed > 0) buf_.push_back(freed);
        out = &buf_;
        return true;
    }

  private:
    int n_;
    bool started_ = false;
    std::vector<int> buf_;
};

/// Visits every partition of n exactly once, lexicographically decreasing.
/// The visitor receives the raw part vector; it must not retain the
/// reference. Return value of the visitor (if bool) stops the sweep early.
template <typename F>
void for_each_partition(int n, F&& visit) {
    PartitionGenerator gen(n);
    const std::vector<int>* p = nullptr;
    while (gen.next(p)) {
        if constexpr (std::is_convertible_v<decltype(visit(*p)), bool>) {
            if (!visit(*p)) return;
        } else {
            visit(*p);
        }
    }
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        out.push_back(Partition::unchecked(std::vector<int>(parts)));
    });
    return out;
}

namespace detail {

// Distinct increasing tuples with entries in [min_next, cap]; at every node
// the current prefix is a complete rising run, so the continuation fires
// before extending.
template <typename Node>
void extend_rising(int budget, int min_next, int cap, std::vector<int>& buf,
                   Node&& at_node) {
    at_node();
    if (budget <= 0) return;
    // anything not consumed by the rising run can still go to the falling
    // run, whose distinct entries below the peak sum to at most cap(cap+1)/2
    const long long falling_room = static_cast<long long>(cap) * (cap + 1) / 2;
    for (int a = min_next; a <= cap && a <= budget; ++a) {
        int rest = budget - a;
        long long rising_room =
            (static_cast<long long>(cap) * (cap + 1) - static_cast<long long>(a) * (a + 1)) / 2;
        if (rest > rising_room + falling_room) continue;
        buf.push_back(a);
        extend_rising(rest, a + 1, cap, buf, at_node);
        buf.pop_back();
    }
}

template <typename Visit>
void fill_falling(int need, int max_next, std::vector<int>& buf, Visit&& visit) {
    if (need == 0) {
        visit();
        return;
    }
    for (int b = std::min(max_next, need); b >= 1; --b) {
        int rest = need - b;
        if (static_cast<long long>(rest) > static_cast<long long>(b) * (b - 1) / 2)
            continue;
        buf.push_back(b);
        fill_falling(rest, b - 1, buf, visit);
        buf.pop_back();
    }
}

}  // namespace detail

/* Visits every strongly unimodal sequence of weight n exactly once. Order:
 * peaks descending; for each peak, rising runs in increasing-lex extension
 * order; for each rising run, falling runs with leading entries descending.
 * Memory stays O(n); each thread may run its own sweep. */
template <typename F>
void for_each_strongly_unimodal(int n, F&& visit) {
    if (n < 1) throw std::invalid_argument("strongly_unimodal_of: n must be >= 1");
    std::vector<int> rising, falling;
    for (int peak = n; peak >= 1; --peak) {
        const int rem = n - peak;
        if (rem > static_cast<long long>(peak) * (peak - 1))  // both slopes full
            break;                                            // never fires again
        detail::extend_rising(rem, 1, peak - 1, rising, [&] {
            int used = 0;
            for (int v : rising) used += v;
            const int need = rem - used;
            if (static_cast<long long>(need) >
                static_cast<long long>(peak) * (peak - 1) / 2)
                return;
            detail::fill_falling(need, peak - 1, falling, [&] {
                visit(UnimodalView{std::span<const int>(rising), peak,
                                   std::span<const int>(falling)});
            });
        });
    }
}

inline std::vector<UnimodalSequence> strongly_unimodal_of(int n) {
    std::vector<UnimodalSequence> out;
    for_each_strongly_unimodal(n, [&](const UnimodalView& v) {
        out.push_back(v.to_sequence());
    });
    return out;
}

}  // namespace unirank

#endif  // UNIRANK_ENUMERATE_HPP
