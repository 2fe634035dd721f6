#pragma once

#include <string>

#include "oplab/count_table.hpp"
#include "oplab/truncated_series.hpp"

namespace oplab {

enum class MomentKind { rank_over, crank_over, rank_ordinary, crank_ordinary };

std::string to_string(MomentKind kind);

/// k-th positive moment per weight n, packaged as a series whose q^n
/// coefficient is the moment at n. Coefficients are non-negative integers.
struct MomentSeries {
    MomentKind kind;
    int k;
    TruncatedSeries series;
};

/// Moments from an enumeration table: q^n coefficient is
/// sum_{m>=1} m^k * table(m, n). Requires k >= 1.
MomentSeries positive_moment_from_table(const CountTable& table, MomentKind kind, int k);

/// First positive rank moment series for overpartitions,
///   R1(q) = 2 (-q)_inf / (q)_inf * sum_{n>=1} (-1)^{n+1} q^{n(n+1)} / (1-q^{2n}).
TruncatedSeries r1_closed_form(int order);

/// First positive crank moment series for overpartitions,
///   M1(q) = (-q)_inf / (q)_inf * sum_{n>=1} (-1)^{n+1} q^{n(n+1)/2} / (1-q^n).
TruncatedSeries m1_closed_form(int order);

/// Generating series of ospt-bar(n) = M1+(n) - N1+(n), computed both as
/// m1_closed_form - r1_closed_form and as (-q)_inf/(q)_inf (h(q) - 2h(q^2)).
/// Throws InternalIdentityViolation if the two routes disagree.
TruncatedSeries ospt_bar_series(int order);

/// ospt(n) = M1+(n) - N1+(n) for ordinary partitions, from enumeration
/// tables (crank under the generating-function convention).
BigInt ospt_ordinary(int n);

}  // namespace oplab
