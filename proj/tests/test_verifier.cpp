#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oplab/qseries.hpp"
#include "oplab/verifier.hpp"

using namespace oplab;

TEST_CASE("checks pass at small orders") {
    CHECK(verify_lemma_la(0).status == CheckStatus::pass);
    CHECK(verify_lemma_la(120).status == CheckStatus::pass);
    CHECK(verify_lemma_l1(0).status == CheckStatus::pass);
    CHECK(verify_lemma_l1(120).status == CheckStatus::pass);
    CHECK(verify_a_decomposition(1).status == CheckStatus::pass);
    CHECK(verify_a_decomposition(120).status == CheckStatus::pass);
    CHECK(verify_positive_decomposition(30).status == CheckStatus::pass);
    CHECK(verify_positive_decomposition(120).status == CheckStatus::pass);
    CHECK(verify_corollary_2_4(6).status == CheckStatus::pass);
    CHECK(verify_theorem_main(80).status == CheckStatus::pass);
    CHECK(verify_theorem_combo(10).status == CheckStatus::pass);
    CHECK(reproduce_table1().status == CheckStatus::pass);
}

TEST_CASE("conjecture scans use the scanned vocabulary") {
    const VerificationReport hq = scan_hqcon(3, 40);
    CHECK(hq.status == CheckStatus::scanned_no_counterexample);
    CHECK(!hq.failed());

    CHECK(scan_hqcon(3, 1).status == CheckStatus::scanned_no_counterexample);
    CHECK(scan_akbk(1, 1).status == CheckStatus::scanned_no_counterexample);
    CHECK(scan_akbk(2, 60).status == CheckStatus::scanned_no_counterexample);
    CHECK(scan_m2n2(1, 1).status == CheckStatus::scanned_no_counterexample);
    CHECK(scan_m2n2(2, 16).status == CheckStatus::scanned_no_counterexample);
}

TEST_CASE("fixture: a perturbed series makes the equality checker fail") {
    TruncatedSeries lhs = lambert_h(50);
    const TruncatedSeries rhs = lambert_h_closed(50);
    lhs.set_coeff(17, lhs.coeff(17) + 1);

    const VerificationReport r = report_series_equal("fixture", "perturbed q^17", lhs, rhs);
    CHECK(r.status == CheckStatus::fail);
    CHECK(r.failed());
    REQUIRE(r.first_violation.has_value());
    CHECK(r.first_violation->location == "q^17");
}

TEST_CASE("fixture: sign checker catches negatives and zeros") {
    TruncatedSeries s = TruncatedSeries::one(20);
    for (int i = 1; i <= 20; ++i) s.set_coeff(i, 1);
    s.set_coeff(9, -2);

    VerificationReport r = report_series_sign("fixture", "", s, 1, 20, false, true);
    CHECK(r.status == CheckStatus::fail);
    REQUIRE(r.first_violation.has_value());
    CHECK(r.first_violation->location == "q^9");
    CHECK(r.first_violation->detail.find("-2") != std::string::npos);

    s.set_coeff(9, 0);
    CHECK(report_series_sign("fixture", "", s, 1, 20, false, false).status ==
          CheckStatus::pass);
    r = report_series_sign("fixture", "", s, 1, 20, true, false);
    CHECK(r.status == CheckStatus::fail);
    CHECK(r.first_violation->location == "q^9");
}

TEST_CASE("reports are deterministic") {
    VerificationReport a = verify_lemma_la(80);
    VerificationReport b = verify_lemma_la(80);
    a.elapsed = b.elapsed = std::chrono::milliseconds(0);
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("report json shape") {
    const VerificationReport r = verify_corollary_2_4(30);
    const std::string j = r.to_json();
    CHECK(j.find("\"check_id\":\"corollary-2-4\"") != std::string::npos);
    CHECK(j.find("\"status\":\"pass\"") != std::string::npos);
    CHECK(j.find("\"first_violation\":null") != std::string::npos);
    CHECK(j.find("\"elapsed_ms\"") != std::string::npos);
    // the unasserted small-n values ride along as a note
    CHECK(j.find("unasserted values n=1..5: 1 0 1 0 1") != std::string::npos);

    TruncatedSeries bad = lambert_h(30);
    bad.set_coeff(12, bad.coeff(12) + 1);
    const std::string fail_json =
        report_series_equal("x", "", bad, lambert_h(30)).to_json();
    CHECK(fail_json.find("\"status\":\"fail\"") != std::string::npos);
    CHECK(fail_json.find("\"location\":\"q^12\"") != std::string::npos);
}

TEST_CASE("hqcon notes the exact zeros") {
    const VerificationReport r = scan_hqcon(3, 10);
    REQUIRE(!r.notes.empty());
    CHECK(r.notes[0].find("m=3, n=3") != std::string::npos);
}
