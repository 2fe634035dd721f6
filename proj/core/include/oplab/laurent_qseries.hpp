#pragma once

#include <map>
#include <vector>

#include "oplab/rational.hpp"
#include "oplab/truncated_series.hpp"

namespace oplab {

/// Series in z and q: Laurent in z with finitely many terms per q-power,
/// truncated in q at a fixed order. Row n holds the z-coefficients of q^n
/// as a sparse map z-exponent -> rational. For the generating functions
/// built here every row satisfies |z-exponent| <= n.
class LaurentQSeries {
public:
    explicit LaurentQSeries(int order);

    int order() const { return static_cast<int>(rows_.size()) - 1; }

    const Rational& coeff(int m, int n) const;
    void set_coeff(int m, int n, Rational c);
    const std::map<int, Rational>& row(int n) const;

    LaurentQSeries& operator+=(const LaurentQSeries& g);

    /// Multiply by a one-variable series (z-degree 0).
    LaurentQSeries mul_univariate(const TruncatedSeries& f) const;

    /// In-place division by (1 - z^{z_sign} q^j), j >= 1, via the recurrence
    /// g(m, n) = f(m, n) + g(m -+ 1, n - j).
    void divide_one_minus_zq(int z_sign, int j);

    /// z = 1: sums each row into a one-variable series.
    TruncatedSeries at_z_one() const;

    /// sum_{m>=1} m * coeff(m, n) as the q^n coefficient.
    TruncatedSeries positive_first_moment() const;

    bool symmetric_in_z() const;

    /// Largest |z-exponent| carried by row n exceeds n nowhere.
    bool z_band_within_weight() const;

    /// One row as JSON: {"n": 5, "coeffs": {"-3": "1", ...}} (zeros omitted).
    std::string row_json(int n) const;

private:
    std::vector<std::map<int, Rational>> rows_;
};

/// Dyson rank generating function for overpartitions,
///   sum_{n>=0} (-1;q)_n q^{n(n+1)/2} / ( (zq;q)_n (q/z;q)_n ),
/// whose (m, n) coefficient is the number of overpartitions of n with rank m.
LaurentQSeries rank_gf_over(int order);

/// Crank generating function for ordinary partitions,
///   C(z,q) = (q;q)_inf / ( (zq;q)_inf (q/z;q)_inf ),
/// whose (m, n) coefficient is M(m, n) under the generating-function
/// convention (row n=1 is z - 1 + 1/z).
LaurentQSeries crank_gf_partitions(int order);

/// First-residual-crank generating function for overpartitions,
///   C-bar(z,q) = (-q;q)_inf * C(z,q).
LaurentQSeries crank_gf_over(int order);

inline TruncatedSeries positive_first_moment(const LaurentQSeries& g) {
    return g.positive_first_moment();
}

}  // namespace oplab
