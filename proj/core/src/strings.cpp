#include "oplab/strings.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "oplab/errors.hpp"
#include "oplab/qseries.hpp"

namespace oplab {

namespace {

// Dense size -> multiplicity array; index 0 unused.
std::vector<int> multiplicities(std::span<const int> parts, int& max_size) {
    max_size = parts.empty() ? 0 : parts.front();
    std::vector<int> mult(static_cast<size_t>(max_size) + 1, 0);
    for (int p : parts) ++mult[p];
    return mult;
}

int mult_at(const std::vector<int>& mult, int size) {
    return (size >= 1 && size < static_cast<int>(mult.size())) ? mult[size] : 0;
}

// "No other part of size e": multiplicity exactly 1 when e lies inside the
// run [lo, hi], exactly 0 otherwise.
bool exclusion_ok(const std::vector<int>& mult, int e, int lo, int hi) {
    const int required = (e >= lo && e <= hi) ? 1 : 0;
    return mult_at(mult, e) == required;
}

// Inclusion-exclusion weight of the two exclusion conditions of a string.
// For distinct sizes each behaves as a plain predicate, but when the two
// exclusion sizes coincide (always outside the run, e.g. l(2l+1) = 4l+2k at
// k=1, l=2) the factor is (1-q^e)^2 and the weight is +1, -1, 0 for
// multiplicity 0, 1, >= 2.
int exclusion_weight(const std::vector<int>& mult, int e1, int e2, int lo, int hi) {
    if (e1 == e2) {
        const int j = mult_at(mult, e1);
        return j == 0 ? 1 : (j == 1 ? -1 : 0);
    }
    return (exclusion_ok(mult, e1, lo, hi) && exclusion_ok(mult, e2, lo, hi)) ? 1 : 0;
}

// Walks the runs of consecutive sizes starting at 2k-1 for every k and
// counts strings of the requested parity. A run of r sizes is an odd string
// candidate when r = 2l-1 and an even one when r = 2l.
long long count_over_strings(const std::vector<int>& mult, int max_size, bool even,
                             int only_k) {
    long long count = 0;
    for (int k = (only_k > 0 ? only_k : 1); 2 * k - 1 <= max_size; ++k) {
        const int lo = 2 * k - 1;
        for (int r = 1; lo + r - 1 <= max_size && mult[lo + r - 1] > 0; ++r) {
            const int hi = lo + r - 1;
            if (!even && r % 2 == 1) {
                const int l = (r + 1) / 2;
                count += exclusion_weight(mult, l * (2 * l - 1), 4 * l + 2 * k - 2, lo, hi);
            } else if (even && r % 2 == 0) {
                const int l = r / 2;
                count += exclusion_weight(mult, l * (2 * l + 1), 4 * l + 2 * k, lo, hi);
            }
        }
        if (only_k > 0) break;
    }
    return count;
}

long long count_over_strings(const Overpartition& o, bool even, int only_k) {
    const std::vector<int> rest = o.non_overlined_parts();
    int max_size = 0;
    const std::vector<int> mult = multiplicities(rest, max_size);
    return count_over_strings(mult, max_size, even, only_k);
}

}  // namespace

long long count_strings_partition(const Partition& p) {
    if (p.parts.empty()) return 0;
    int max_size = 0;
    const std::vector<int> mult = multiplicities(p.parts, max_size);
    // run_top[s]: top of the maximal run of consecutive present sizes from s.
    std::vector<int> run_top(static_cast<size_t>(max_size) + 2, 0);
    for (int s = max_size; s >= 1; --s)
        if (mult[s] > 0) run_top[s] = (s < max_size && mult[s + 1] > 0) ? run_top[s + 1] : s;
    long long total = 0;
    for (int s = 1; s <= max_size; ++s) {
        if (mult[s] == 0) continue;
        const int len = run_top[s] - s + 1;
        if (s % 2 == 1) {
            if (len % 2 == 1 && len >= s) ++total;
        } else {
            if (len % 2 == 1 && len >= s + 1) ++total;
            if (run_top[s] >= 2 * s - 1) --total;
        }
    }
    return total;
}

int count_odd_strings_over(const Overpartition& o) {
    return static_cast<int>(count_over_strings(o, /*even=*/false, 0));
}

int count_even_strings_over(const Overpartition& o) {
    return static_cast<int>(count_over_strings(o, /*even=*/true, 0));
}

int count_odd_strings_over_k(const Overpartition& o, int k) {
    if (k < 1) throw std::invalid_argument("string start parameter k must be >= 1");
    return static_cast<int>(count_over_strings(o, /*even=*/false, k));
}

int count_even_strings_over_k(const Overpartition& o, int k) {
    if (k < 1) throw std::invalid_argument("string start parameter k must be >= 1");
    return static_cast<int>(count_over_strings(o, /*even=*/true, k));
}

namespace {

std::pair<long long, long long> st_totals_impl(int n, int only_k) {
    long long odd = 0, even = 0;
    std::vector<int> mult;
    for_each_overpartition(n, [&](const OverpartitionView& view) {
        mult.assign(static_cast<size_t>(n) + 1, 0);
        int max_size = 0;
        for (int i = 0; i < view.size_count(); ++i) {
            const int m = view.non_overlined_mult(i);
            if (m > 0) {
                mult[view.sizes[i]] = m;
                max_size = std::max(max_size, view.sizes[i]);
            }
        }
        odd += count_over_strings(mult, max_size, /*even=*/false, only_k);
        even += count_over_strings(mult, max_size, /*even=*/true, only_k);
    });
    return {odd, even};
}

}  // namespace

std::pair<long long, long long> st_totals(int n) { return st_totals_impl(n, 0); }

std::pair<long long, long long> st_totals_for_k(int n, int k) {
    if (k < 1) throw std::invalid_argument("string start parameter k must be >= 1");
    return st_totals_impl(n, k);
}

AkBkSeries akbk_gf(int k, int order) {
    if (k < 1) throw std::invalid_argument("A_k/B_k need k >= 1");
    TruncatedSeries a_sum(order), b_sum(order);
    for (long n = 1;; ++n) {
        const long lead = 2 * n * n - 5 * n + 4 * n * k - 2 * k + 2;
        if (lead > order) break;
        TruncatedSeries term = TruncatedSeries::monomial(static_cast<int>(lead), Rational(1), order);
        if (2 * n * n - n <= order) term.mul_binomial(Rational(-1), static_cast<int>(2 * n * n - n));
        if (4 * n + 2 * k - 2 <= order)
            term.mul_binomial(Rational(-1), static_cast<int>(4 * n + 2 * k - 2));
        a_sum += term;
    }
    for (long n = 1;; ++n) {
        const long lead = 2 * n * n - 3 * n + 4 * n * k;
        if (lead > order) break;
        TruncatedSeries term = TruncatedSeries::monomial(static_cast<int>(lead), Rational(1), order);
        if (2 * n * n + n <= order) term.mul_binomial(Rational(-1), static_cast<int>(2 * n * n + n));
        if (4 * n + 2 * k <= order) term.mul_binomial(Rational(-1), static_cast<int>(4 * n + 2 * k));
        b_sum += term;
    }
    const TruncatedSeries prefactor = neg_q_product(order) * euler_product(order).inverted();
    AkBkSeries out{prefactor * a_sum, prefactor * b_sum};

    const TruncatedSeries expected =
        prefactor * (f_k_series(2 * k - 1, order) + f_k_series(2 * k, order) -
                     f_k_series(k, order).substitute_power(2).scaled(2));
    if (const int i = first_difference(out.a - out.b, expected); i >= 0)
        throw InternalIdentityViolation("A_k - B_k identity fails for k=" + std::to_string(k) +
                                        " first at q^" + std::to_string(i));
    return out;
}

}  // namespace oplab
