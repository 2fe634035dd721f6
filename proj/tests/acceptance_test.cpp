// Acceptance suite: runs every acceptance criterion at its stated range and
// tolerance (all exact) and prints one pass/fail line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oplab/count_table.hpp"
#include "oplab/laurent_qseries.hpp"
#include "oplab/moments.hpp"
#include "oplab/partitions.hpp"
#include "oplab/qseries.hpp"
#include "oplab/strings.hpp"
#include "oplab/verifier.hpp"

using namespace oplab;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (!ok) ++failures;
    std::printf("%s criterion %2d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), static_cast<long long>(ms), error.empty() ? "" : " error: ",
                error.c_str());
    std::fflush(stdout);
}

bool eq(const Rational& a, long b) { return a == Rational(b); }

}  // namespace

int main() {
    criterion(1, "Table 1: listed rows exact, unlisted rows (0,0), totals (8,4)", [] {
        const VerificationReport r = reproduce_table1();
        return r.status == CheckStatus::pass;
    });

    criterion(2, "moment spot values at n=5 via both routes (24, 20, 4)", [] {
        const StatisticTables t = build_tables(5);
        const bool tables_ok = t.crank_over.positive_moment(1, 5) == 24 &&
                               t.rank_over.positive_moment(1, 5) == 20;
        const bool closed_ok = eq(m1_closed_form(5).coeff(5), 24) &&
                               eq(r1_closed_form(5).coeff(5), 20) &&
                               eq(ospt_bar_series(5).coeff(5), 4);
        const bool diff_ok =
            t.crank_over.positive_moment(1, 5) - t.rank_over.positive_moment(1, 5) == 4;
        return tables_ok && closed_ok && diff_ok;
    });

    criterion(3, "route equivalence: closed forms equal enumeration moments, n <= 60", [] {
        const StatisticTables t = build_tables_fast(60);
        const TruncatedSeries r1 = r1_closed_form(60);
        const TruncatedSeries m1 = m1_closed_form(60);
        for (int n = 1; n <= 60; ++n) {
            if (Rational(t.rank_over.positive_moment(1, n)) != r1.coeff(n)) return false;
            if (Rational(t.crank_over.positive_moment(1, n)) != m1.coeff(n)) return false;
        }
        return true;
    });

    criterion(4, "bivariate coefficients equal enumeration tables, |m| <= n <= 25", [] {
        const StatisticTables t = build_tables(25);
        const LaurentQSeries rank_gf = rank_gf_over(25);
        const LaurentQSeries crank_gf = crank_gf_over(25);
        for (int n = 0; n <= 25; ++n)
            for (int m = -n; m <= n; ++m) {
                if (rank_gf.coeff(m, n) != Rational(static_cast<long>(t.rank_over.get(m, n))))
                    return false;
                if (crank_gf.coeff(m, n) != Rational(static_cast<long>(t.crank_over.get(m, n))))
                    return false;
            }
        return rank_gf.z_band_within_weight() && crank_gf.z_band_within_weight();
    });

    criterion(5, "identity suite: h staircase form @500, h(q)-2h(q^2) block form @400, "
                 "A-decomposition @300, positive decomposition @300", [] {
        return verify_lemma_la(500).status == CheckStatus::pass &&
               verify_lemma_l1(400).status == CheckStatus::pass &&
               verify_a_decomposition(300).status == CheckStatus::pass &&
               verify_positive_decomposition(300).status == CheckStatus::pass;
    });

    criterion(6, "main positivity: ospt-bar(n) > 0 for 1 <= n <= 1000, dual routes", [] {
        return verify_theorem_main(1000).status == CheckStatus::pass;
    });

    criterion(7, "partition-side positivity for 6 <= n <= 1000, n <= 5 reported only", [] {
        const VerificationReport r = verify_corollary_2_4(1000);
        return r.status == CheckStatus::pass && !r.notes.empty() &&
               r.notes[0].find("1 0 1 0 1") != std::string::npos;
    });

    criterion(8, "string totals difference equals ospt-bar for 1 <= n <= 25", [] {
        return verify_theorem_combo(25).status == CheckStatus::pass;
    });

    criterion(9, "sum of ST over partitions of n equals ospt(n), 1 <= n <= 20", [] {
        for (int n = 1; n <= 20; ++n) {
            long long total = 0;
            for (const Partition& p : gen_partitions(n)) total += count_strings_partition(p);
            if (BigInt(static_cast<long>(total)) != ospt_ordinary(n)) return false;
        }
        return true;
    });

    criterion(10, "conjecture scans: hqcon (m <= 10, n <= 500), akbk (k <= 5, n <= 200), "
                  "m2n2 (k <= 4, n <= 40)", [] {
        return scan_hqcon(10, 500).status == CheckStatus::scanned_no_counterexample &&
               scan_akbk(5, 200).status == CheckStatus::scanned_no_counterexample &&
               scan_m2n2(4, 40).status == CheckStatus::scanned_no_counterexample;
    });

    criterion(11, "property suites: ring axioms, table symmetry, counts vs series n <= 40", [] {
        std::mt19937 rng(424243);
        std::uniform_int_distribution<int> num(-5, 5);
        std::uniform_int_distribution<int> den(1, 3);
        for (int trial = 0; trial < 25; ++trial) {
            const int order = 1 + static_cast<int>(rng() % 10);
            TruncatedSeries a(order), b(order), c(order);
            for (int i = 0; i <= order; ++i) {
                a.set_coeff(i, rational(num(rng), den(rng)));
                b.set_coeff(i, rational(num(rng), den(rng)));
                c.set_coeff(i, rational(num(rng), den(rng)));
            }
            if (!(a + b == b + a)) return false;
            if (!(a * b == b * a)) return false;
            if (!((a + b) + c == a + (b + c))) return false;
            if (!((a * b) * c == a * (b * c))) return false;
            if (!(a * (b + c) == a * b + a * c)) return false;
            if (a.coeff(0) != 0 && !(a * a.inverted() == TruncatedSeries::one(order)))
                return false;
        }

        const StatisticTables t = build_tables(40);
        if (!t.rank_ordinary.symmetric_in_m() || !t.rank_over.symmetric_in_m()) return false;
        if (!t.crank_ordinary.symmetric_in_m() || !t.crank_over.symmetric_in_m()) return false;

        const TruncatedSeries partitions = euler_product(40).inverted();
        const TruncatedSeries overs = neg_q_product(40) * euler_product(40).inverted();
        for (int n = 0; n <= 40; ++n) {
            if (Rational(static_cast<long>(t.rank_ordinary.row_total(n))) != partitions.coeff(n))
                return false;
            if (Rational(static_cast<long>(t.rank_over.row_total(n))) != overs.coeff(n))
                return false;
        }
        return true;
    });

    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
