#include "oplab/moments.hpp"

#include <stdexcept>

#include "oplab/errors.hpp"
#include "oplab/qseries.hpp"

namespace oplab {

std::string to_string(MomentKind kind) {
    switch (kind) {
        case MomentKind::rank_over: return "rank-over";
        case MomentKind::crank_over: return "crank-over";
        case MomentKind::rank_ordinary: return "rank-ordinary";
        case MomentKind::crank_ordinary: return "crank-ordinary";
    }
    return "?";
}

MomentSeries positive_moment_from_table(const CountTable& table, MomentKind kind, int k) {
    if (k < 1) throw std::invalid_argument("moment index k must be >= 1");
    TruncatedSeries s(table.n_max());
    for (int n = 0; n <= table.n_max(); ++n)
        s.set_coeff(n, Rational(table.positive_moment(k, n)));
    return MomentSeries{kind, k, std::move(s)};
}

TruncatedSeries r1_closed_form(int order) {
    TruncatedSeries lambert(order);
    for (long n = 1; n * (n + 1) <= order; ++n) {
        const Rational sign((n % 2 == 1) ? 1 : -1);
        for (long e = n * (n + 1); e <= order; e += 2 * n)
            lambert.set_coeff(static_cast<int>(e), lambert.coeff(static_cast<int>(e)) + sign);
    }
    TruncatedSeries prefactor = neg_q_product(order) * euler_product(order).inverted();
    return prefactor.scaled(Rational(2)) * lambert;
}

TruncatedSeries m1_closed_form(int order) {
    return neg_q_product(order) * euler_product(order).inverted() * lambert_h(order);
}

TruncatedSeries ospt_bar_series(int order) {
    const TruncatedSeries via_moments = m1_closed_form(order) - r1_closed_form(order);
    const TruncatedSeries h_combined = lambert_h(order) - lambert_h(order).substitute_power(2).scaled(2);
    const TruncatedSeries via_h =
        neg_q_product(order) * euler_product(order).inverted() * h_combined;
    if (const int i = first_difference(via_moments, via_h); i >= 0)
        throw InternalIdentityViolation("ospt-bar routes disagree first at q^" +
                                        std::to_string(i));
    return via_moments;
}

BigInt ospt_ordinary(int n) {
    if (n < 1) throw std::invalid_argument("ospt is defined for n >= 1");
    const StatisticTables t = build_tables(n);
    return t.crank_ordinary.positive_moment(1, n) - t.rank_ordinary.positive_moment(1, n);
}

}  // namespace oplab
