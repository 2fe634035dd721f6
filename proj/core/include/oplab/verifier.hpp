#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "oplab/truncated_series.hpp"

namespace oplab {

/// Proven results report pass/fail; conjecture scans never "pass", they
/// report scanned_no_counterexample (or fail with the first violation).
enum class CheckStatus { pass, fail, scanned_no_counterexample };

std::string to_string(CheckStatus s);

struct Violation {
    std::string location;  // e.g. "q^17" or "m=3 n=12"
    std::string detail;
};

struct VerificationReport {
    std::string check_id;
    std::string range;
    CheckStatus status = CheckStatus::pass;
    std::optional<Violation> first_violation;
    std::chrono::milliseconds elapsed{0};
    std::vector<std::string> notes;

    bool failed() const { return status == CheckStatus::fail; }
    std::string str() const;
    std::string to_json() const;
};

/// Report building blocks. The checks below are thin compositions of these;
/// tests drive them directly with perturbed inputs to prove that every
/// checker can actually fail.
VerificationReport report_series_equal(const std::string& check_id, const std::string& range,
                                       const TruncatedSeries& lhs, const TruncatedSeries& rhs);
VerificationReport report_series_sign(const std::string& check_id, const std::string& range,
                                      const TruncatedSeries& s, int from_n, int to_n,
                                      bool strict, bool conjecture);

/// Lemma: h(q) equals the squared-staircase expansion, to the given order.
VerificationReport verify_lemma_la(int order);

/// Lemma: h(q) - 2h(q^2) equals the alternating n^2-block expansion.
VerificationReport verify_lemma_l1(int order);

/// The A1..A4 decomposition: (i) A1+2A2-2A3-A4 = h(q)-2h(q^2);
/// (ii) (-q)inf/(q)inf (A1-A4) = (-q;q^2)inf/(2(q;q^2)inf) - 1/2;
/// (iii) (-q)inf/(q)inf (A2-A3) has nonnegative coefficients;
/// (iv) the right side of (ii) has strictly positive coefficients for n >= 1.
VerificationReport verify_a_decomposition(int order);

/// A2 - A3 reconstructed as the four positive-product families.
VerificationReport verify_positive_decomposition(int order);

/// ospt-bar(n) > 0 for 1 <= n <= n_max, plus equality with the
/// enumeration-route moments for n <= min(n_max, 60).
VerificationReport verify_theorem_main(int n_max);

/// (h(q)-2h(q^2))/(q)inf strictly positive for 6 <= n <= n_max; the values
/// at n = 1..5 are reported without assertion.
VerificationReport verify_corollary_2_4(int n_max);

/// ST-bar_o(n) - ST-bar_e(n) = ospt-bar(n) for 1 <= n <= n_max.
VerificationReport verify_theorem_combo(int n_max);

/// Conjecture: (h(q) - m h(q^m))/(q)inf has nonnegative coefficients for
/// every 3 <= m <= m_max, 1 <= n <= order. Coefficients that are exactly
/// zero are listed in the notes.
VerificationReport scan_hqcon(int m_max, int order);

/// Conjecture: A_k(n) >= B_k(n) for 1 <= k <= k_max, 1 <= n <= n_max.
VerificationReport scan_akbk(int k_max, int n_max);

/// Conjecture: M-bar_k+(n) > N-bar_k+(n) for 1 <= k <= k_max, 1 <= n <= n_max,
/// from enumeration tables.
VerificationReport scan_m2n2(int k_max, int n_max);

/// Golden reproduction of the table of strings in the overpartitions of 5:
/// the ten listed rows, (0,0) for every other overpartition of 5, and the
/// totals (8, 4).
VerificationReport reproduce_table1();

}  // namespace oplab
