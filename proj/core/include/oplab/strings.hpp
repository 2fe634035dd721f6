#pragma once

#include <utility>

#include "oplab/partitions.hpp"
#include "oplab/truncated_series.hpp"

namespace oplab {

/// Classical string statistic ST of a partition, the weighted count whose
/// total over all partitions of n equals ospt(n):
///
/// For each part size s of the partition let T(s) be the top of the maximal
/// run of consecutive sizes s, s+1, ..., T(s) all present, and
/// L(s) = T(s) - s + 1 its length in sizes. Then
///   * s odd with L(s) odd and L(s) >= s counts an odd string (+1),
///   * s even with L(s) odd and L(s) >= s+1 counts an even string (+1),
///   * s even with T(s) >= 2s-1 carries weight -1.
///
/// The sum of ST over the partitions of n telescopes exactly to
/// M1+(n) - N1+(n); the identity is pinned by tests for n <= 20.
long long count_strings_partition(const Partition& p);

/// Odd strings of an overpartition: pairs (k, l), k, l >= 1, such that the
/// 2l-1 consecutive sizes 2k-1, ..., 2l+2k-3 all appear among the
/// NON-overlined parts, and the two exclusion sizes l(2l-1) and 4l+2k-2
/// have non-overlined multiplicity exactly 1 inside the run and 0 outside.
int count_odd_strings_over(const Overpartition& o);

/// Even strings: the run is the 2l consecutive sizes 2k-1, ..., 2l+2k-2 and
/// the exclusion sizes are l(2l+1) and 4l+2k, same conventions.
int count_even_strings_over(const Overpartition& o);

/// Odd/even strings restricted to one start parameter k (the combinatorial
/// side of A_k(n) and B_k(n)).
int count_odd_strings_over_k(const Overpartition& o, int k);
int count_even_strings_over_k(const Overpartition& o, int k);

/// (ST-bar_o(n), ST-bar_e(n)): totals of the two string counters over all
/// overpartitions of n.
std::pair<long long, long long> st_totals(int n);

/// Per-k totals over the overpartitions of n, by direct counting.
std::pair<long long, long long> st_totals_for_k(int n, int k);

struct AkBkSeries {
    TruncatedSeries a;  // odd strings starting from 2k-1, generating function route
    TruncatedSeries b;  // even strings starting from 2k-1
};

/// Generating functions of A_k(n) and B_k(n):
///   A_k = P(q) * sum_{n>=1} q^{2n^2-5n+4nk-2k+2} (1-q^{2n^2-n}) (1-q^{4n+2k-2})
///   B_k = P(q) * sum_{n>=1} q^{2n^2-3n+4nk}     (1-q^{2n^2+n}) (1-q^{4n+2k})
/// with P = (-q)_inf/(q)_inf. Verifies
///   A_k - B_k = P * ( f_{2k-1}(q) + f_{2k}(q) - 2 f_k(q^2) )
/// exactly and throws InternalIdentityViolation on mismatch.
AkBkSeries akbk_gf(int k, int order);

}  // namespace oplab
