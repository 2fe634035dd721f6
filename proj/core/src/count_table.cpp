#include "oplab/count_table.hpp"

#include <stdexcept>

namespace oplab {

CountTable::CountTable(int n_max) : n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    cells_.assign(static_cast<size_t>(n_max + 1) * (2 * n_max + 1), 0);
}

long long CountTable::get(int m, int n) const {
    if (n < 0 || n > n_max_ || m < -n_max_ || m > n_max_) return 0;
    return cells_[static_cast<size_t>(n) * (2 * n_max_ + 1) + (m + n_max_)];
}

void CountTable::add(int m, int n, long long w) {
    if (n < 0 || n > n_max_) throw std::out_of_range("weight outside table");
    if (m < -n_max_ || m > n_max_) throw std::out_of_range("statistic outside table");
    cells_[static_cast<size_t>(n) * (2 * n_max_ + 1) + (m + n_max_)] += w;
}

long long CountTable::row_total(int n) const {
    long long total = 0;
    for (int m = -n_max_; m <= n_max_; ++m) total += get(m, n);
    return total;
}

BigInt CountTable::positive_moment(int k, int n) const {
    BigInt acc = 0;
    for (int m = 1; m <= n_max_; ++m) {
        const long long c = get(m, n);
        if (c == 0) continue;
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(m),
                      static_cast<unsigned long>(k));
        acc += pw * static_cast<long>(c);
    }
    return acc;
}

BigInt CountTable::full_moment(int k, int n) const {
    BigInt acc = 0;
    for (int m = -n_max_; m <= n_max_; ++m) {
        const long long c = get(m, n);
        if (c == 0 || m == 0) continue;
        BigInt base = m;
        BigInt pw;
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
        acc += pw * static_cast<long>(c);
    }
    return acc;
}

bool CountTable::symmetric_in_m() const {
    for (int n = 0; n <= n_max_; ++n)
        for (int m = 1; m <= n_max_; ++m)
            if (get(m, n) != get(-m, n)) return false;
    return true;
}

namespace {

// Crank weights of a parts multiset given as (sizes desc, multiplicities),
// skipping one copy of each size flagged in drop_mask. Weight entries are
// appended via the sink as (m, w).
template <class Sink>
void residual_crank_weights_into(std::span<const int> sizes, std::span<const int> mults,
                                 unsigned long long drop_mask, Sink&& sink) {
    const int d = static_cast<int>(sizes.size());
    int total_parts = 0, ones = 0, largest = 0;
    for (int i = 0; i < d; ++i) {
        const int mult = mults[i] - static_cast<int>((drop_mask >> i) & 1ULL);
        if (mult == 0) continue;
        total_parts += mult;
        if (largest == 0) largest = sizes[i];
        if (sizes[i] == 1) ones = mult;
    }
    if (total_parts == 0) {
        sink(0, 1);
        return;
    }
    if (total_parts == 1 && largest == 1) {  // the n=1 anomaly row of C(z,q)
        sink(-1, 1);
        sink(0, -1);
        sink(1, 1);
        return;
    }
    if (ones == 0) {
        sink(largest, 1);
        return;
    }
    int larger = 0;
    for (int i = 0; i < d; ++i) {
        if (sizes[i] <= ones) break;
        larger += mults[i] - static_cast<int>((drop_mask >> i) & 1ULL);
    }
    sink(larger - ones, 1);
}

}  // namespace

StatisticTables build_tables(int n_max) {
    StatisticTables t{CountTable(n_max), CountTable(n_max), CountTable(n_max),
                      CountTable(n_max)};
    std::vector<int> sizes, mults;
    for (int n = 0; n <= n_max; ++n) {
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
            const int r = parts.empty() ? 0 : parts.front() - static_cast<int>(parts.size());

            t.rank_ordinary.add(r, n, 1);
            residual_crank_weights_into(sizes, mults, 0,
                                        [&](int m, int w) { t.crank_ordinary.add(m, n, w); });
            for (unsigned long long mask = 0; mask < (1ULL << d); ++mask) {
                t.rank_over.add(r, n, 1);  // overlines never move the rank
                residual_crank_weights_into(sizes, mults, mask,
                                            [&](int m, int w) { t.crank_over.add(m, n, w); });
            }
        });
    }
    return t;
}

StatisticTables build_tables_fast(int n_max) {
    StatisticTables t{CountTable(n_max), CountTable(n_max), CountTable(n_max),
                      CountTable(n_max)};
    std::vector<int> sizes, mults;
    for (int n = 0; n <= n_max; ++n) {
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
            const int r = parts.empty() ? 0 : parts.front() - static_cast<int>(parts.size());
            t.rank_ordinary.add(r, n, 1);
            t.rank_over.add(r, n, 1LL << sizes.size());
            residual_crank_weights_into(sizes, mults, 0,
                                        [&](int m, int w) { t.crank_ordinary.add(m, n, w); });
        });
    }
    const std::vector<long long> q = distinct_partition_counts(n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int j = 0; j <= n; ++j) {
            if (q[j] == 0) continue;
            for (int m = -(n - j); m <= n - j; ++m) {
                const long long c = t.crank_ordinary.get(m, n - j);
                if (c != 0) t.crank_over.add(m, n, q[j] * c);
            }
        }
    return t;
}

}  // namespace oplab
