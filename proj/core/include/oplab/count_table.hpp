#pragma once

#include <vector>

#include "oplab/partitions.hpp"
#include "oplab/rational.hpp"

namespace oplab {

/// Exact table (statistic value m, weight n) -> count, for 0 <= n <= n_max
/// and |m| <= n_max. Cells outside the stored band read as zero; the
/// statistics tabulated here all satisfy |m| <= n.
class CountTable {
public:
    explicit CountTable(int n_max);

    int n_max() const { return n_max_; }

    long long get(int m, int n) const;
    void add(int m, int n, long long w);

    /// Total number of objects of weight n.
    long long row_total(int n) const;

    /// sum_{m>=1} m^k * count(m, n), exactly.
    BigInt positive_moment(int k, int n) const;

    /// sum_{m} m^k * count(m, n) over all m (the full k-th moment).
    BigInt full_moment(int k, int n) const;

    bool symmetric_in_m() const;

    bool operator==(const CountTable&) const = default;

private:
    int n_max_;
    std::vector<long long> cells_;  // (n, m+n_max) row-major
};

/// The four statistic tables, all built from the same enumeration sweep.
struct StatisticTables {
    CountTable rank_ordinary;   // N(m,n)
    CountTable crank_ordinary;  // M(m,n), generating-function convention
    CountTable rank_over;       // N-bar(m,n)
    CountTable crank_over;      // M-bar(m,n), first residual crank
};

/// Exhaustive enumeration: every partition and every overpartition of every
/// n <= n_max is visited and contributes its rank / crank weights directly.
/// The independent oracle for everything else in the library; cost grows
/// with the overpartition count, fine through n_max ~ 40.
StatisticTables build_tables(int n_max);

/// Same tables from a single partition-level sweep: overpartition rank rows
/// pool the 2^d overline choices of each partition (overlines never change
/// the rank), and the residual-crank table is assembled by convolving the
/// distinct-part counts with the ordinary crank weights (the overlined and
/// non-overlined halves of an overpartition are independent). Scales to the
/// n ~ 60 range used by the moment route checks; equality with
/// build_tables() is pinned by tests.
StatisticTables build_tables_fast(int n_max);

}  // namespace oplab
