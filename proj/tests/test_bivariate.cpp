#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oplab/count_table.hpp"
#include "oplab/laurent_qseries.hpp"
#include "oplab/moments.hpp"
#include "oplab/qseries.hpp"

using namespace oplab;

TEST_CASE("rank generating function") {
    const LaurentQSeries g = rank_gf_over(25);
    CHECK(g.coeff(0, 0) == 1);

    Rational row4(0);
    for (const auto& [m, c] : g.row(4)) row4 += c;
    CHECK(row4 == 14);

    CHECK(g.symmetric_in_z());
    CHECK(g.z_band_within_weight());

    // full table against the enumeration oracle
    const StatisticTables t = build_tables(25);
    for (int n = 0; n <= 25; ++n)
        for (int m = -n; m <= n; ++m)
            CHECK(g.coeff(m, n) == Rational(static_cast<long>(t.rank_over.get(m, n))));
}

TEST_CASE("crank generating function for partitions") {
    const LaurentQSeries g = crank_gf_partitions(20);
    CHECK(g.coeff(0, 0) == 1);
    CHECK(g.row(0).size() == 1);

    // the well-known n=1 row: z - 1 + 1/z
    CHECK(g.coeff(1, 1) == 1);
    CHECK(g.coeff(0, 1) == -1);
    CHECK(g.coeff(-1, 1) == 1);

    Rational row4(0);
    for (const auto& [m, c] : g.row(4)) row4 += c;
    CHECK(row4 == 5);

    CHECK(g.at_z_one() == euler_product(20).inverted());
}

TEST_CASE("crank generating function for overpartitions") {
    const LaurentQSeries g = crank_gf_over(25);

    Rational row4(0);
    for (const auto& [m, c] : g.row(4)) row4 += c;
    CHECK(row4 == 14);

    Rational first_moment_5(0);
    for (const auto& [m, c] : g.row(5))
        if (m >= 1) first_moment_5 += Rational(m) * c;
    CHECK(first_moment_5 == 24);

    CHECK(g.symmetric_in_z());
    CHECK(g.z_band_within_weight());

    const StatisticTables t = build_tables(25);
    for (int n = 0; n <= 25; ++n)
        for (int m = -n; m <= n; ++m)
            CHECK(g.coeff(m, n) == Rational(static_cast<long>(t.crank_over.get(m, n))));
}

TEST_CASE("positive first moment extraction") {
    CHECK(rank_gf_over(10).positive_first_moment().coeff(5) == 20);
    CHECK(crank_gf_over(10).positive_first_moment().coeff(5) == 24);

    // a z-symmetric row {-1:1, 0:3, 1:1} contributes exactly 1
    LaurentQSeries g(2);
    g.set_coeff(-1, 2, 1);
    g.set_coeff(0, 2, 3);
    g.set_coeff(1, 2, 1);
    CHECK(g.positive_first_moment().coeff(2) == 1);
}

TEST_CASE("moment extraction equals the closed forms") {
    const int order = 60;
    CHECK(rank_gf_over(order).positive_first_moment() == r1_closed_form(order));
    CHECK(crank_gf_over(order).positive_first_moment() == m1_closed_form(order));
}

TEST_CASE("z = 1 specialization") {
    const int order = 30;
    const TruncatedSeries overs = neg_q_product(order) * euler_product(order).inverted();
    CHECK(rank_gf_over(order).at_z_one() == overs);
    CHECK(crank_gf_over(order).at_z_one() == overs);
}

TEST_CASE("row json") {
    const std::string j = crank_gf_partitions(3).row_json(1);
    CHECK(j.find("\"n\":1") != std::string::npos);
    CHECK(j.find("\"-1\":\"1\"") != std::string::npos);
    CHECK(j.find("\"0\":\"-1\"") != std::string::npos);
}
