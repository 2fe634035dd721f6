#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oplab/errors.hpp"

namespace oplab {

/// Non-increasing sequence of positive integers.
struct Partition {
    std::vector<int> parts;

    int weight() const;
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
    std::string str() const;
};

/// Partition plus a set of distinct part sizes marked overlined. Overlines
/// attach to sizes, not positions: at most one per distinct size, rendered
/// on the first occurrence ("2~+2+1").
struct Overpartition {
    std::vector<int> parts;      // non-increasing
    std::vector<int> overlined;  // distinct sizes, descending; subset of parts

    int weight() const;
    std::vector<int> non_overlined_parts() const;
    bool operator==(const Overpartition&) const = default;
    auto operator<=>(const Overpartition&) const = default;
    std::string str() const;
};

/// Largest part minus number of parts; 0 for the empty partition.
int rank(const Partition& p);
/// Overlines do not affect the rank.
int rank(const Overpartition& o);

/// Andrews-Garvan crank: the largest part if 1 does not occur, otherwise
/// (number of parts larger than the number of 1s) - (number of 1s).
/// Throws EmptyPartition for the empty partition.
int crank(const Partition& p);
int crank_of_parts(std::span<const int> parts);

/// Crank contribution of a partition under the generating-function
/// convention: weight +1 at crank(p), except that the empty partition
/// contributes +1 at 0 and the single partition (1) contributes the n=1
/// anomaly row {+1 at -1, -1 at 0, +1 at +1} of C(z,q). At most three
/// entries, each (crank value, weight).
std::vector<std::pair<int, int>> crank_weights(std::span<const int> parts);

/// The contribution of an overpartition to the first-residual-crank table:
/// crank_weights of its non-overlined subpartition.
std::vector<std::pair<int, int>> residual_crank_weights(const Overpartition& o);

/// All partitions of n, each exactly once. Order unspecified.
std::vector<Partition> gen_partitions(int n);

/// All overpartitions of n, each exactly once. Order unspecified.
std::vector<Overpartition> gen_overpartitions(int n);

/// Number of partitions of n into distinct parts, for 0 <= n <= n_max.
std::vector<long long> distinct_partition_counts(int n_max);

namespace detail {

template <class F>
void extend_partition(int remaining, int max_part, std::vector<int>& parts, F& f) {
    if (remaining == 0) {
        f(std::span<const int>(parts));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        extend_partition(remaining - p, p, parts, f);
        parts.pop_back();
    }
}

}  // namespace detail

/// Visits every partition of n exactly once as a non-increasing span.
/// The span is only valid during the call.
template <class F>
void for_each_partition(int n, F&& f) {
    std::vector<int> parts;
    detail::extend_partition(n, n == 0 ? 1 : n, parts, f);
}

/// Read-only view of one overpartition during enumeration: the underlying
/// parts, the distinct sizes (descending) with multiplicities, and a bitmask
/// selecting which sizes carry an overline.
struct OverpartitionView {
    std::span<const int> parts;
    std::span<const int> sizes;
    std::span<const int> mults;
    unsigned long long overline_mask = 0;

    int size_count() const { return static_cast<int>(sizes.size()); }
    bool is_overlined(int i) const { return (overline_mask >> i) & 1ULL; }
    int non_overlined_mult(int i) const { return mults[i] - (is_overlined(i) ? 1 : 0); }

    int rank() const {
        return parts.empty() ? 0 : parts.front() - static_cast<int>(parts.size());
    }

    Overpartition materialize() const;
};

/// Visits every overpartition of n exactly once: each partition of n paired
/// with each subset of its distinct part sizes.
template <class F>
void for_each_overpartition(int n, F&& f) {
    std::vector<int> sizes, mults;
    for_each_partition(n, [&](std::span<const int> parts) {
        sizes.clear();
        mults.clear();
        for (int p : parts) {
            if (!sizes.empty() && sizes.back() == p) {
                ++mults.back();
            } else {
                sizes.push_back(p);
                mults.push_back(1);
            }
        }
        const int d = static_cast<int>(sizes.size());
        for (unsigned long long mask = 0; mask < (1ULL << d); ++mask) {
            OverpartitionView view{parts, sizes, mults, mask};
            f(view);
        }
    });
}

}  // namespace oplab
