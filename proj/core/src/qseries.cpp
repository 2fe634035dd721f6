#include "oplab/qseries.hpp"

#include <stdexcept>

namespace oplab {

TruncatedSeries euler_product(int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int k = 1; k <= order; ++k) s.mul_binomial(Rational(-1), k);
    return s;
}

TruncatedSeries neg_q_product(int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int k = 1; k <= order; ++k) s.mul_binomial(Rational(1), k);
    return s;
}

TruncatedSeries odd_product(int order, Sign sign) {
    const Rational c = (sign == Sign::plus) ? Rational(1) : Rational(-1);
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int k = 1; k <= order; k += 2) s.mul_binomial(c, k);
    return s;
}

TruncatedSeries pochhammer(const Rational& c, int e, int n, int order) {
    if (n < 0) throw std::invalid_argument("pochhammer length must be >= 0");
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int k = 1; k <= n; ++k) {
        const int exp = e + k - 1;
        if (exp > order) break;
        if (exp == 0) {
            s = s.scaled(1 - c);
            continue;
        }
        s.mul_binomial(-c, exp);
    }
    return s;
}

TruncatedSeries geometric(int lead, int step, int order) {
    TruncatedSeries s(order);
    if (step < 1) throw std::invalid_argument("geometric step must be >= 1");
    for (long e = lead; e <= order; e += step) s.set_coeff(static_cast<int>(e), Rational(1));
    return s;
}

TruncatedSeries lambert_h(int order) {
    TruncatedSeries s(order);
    for (long n = 1; n * (n + 1) / 2 <= order; ++n) {
        const long lead = n * (n + 1) / 2;
        const Rational sign((n % 2 == 1) ? 1 : -1);
        for (long e = lead; e <= order; e += n)
            s.set_coeff(static_cast<int>(e), s.coeff(static_cast<int>(e)) + sign);
    }
    return s;
}

TruncatedSeries lambert_h_closed(int order) {
    TruncatedSeries s(order);
    for (long j = 1; j * j <= order; ++j) {
        const long base = j * j;
        // q^{j^2} ( 1 + 2q^j + ... + 2q^{j^2-j} + q^{j^2} )
        for (long t = 0; t <= j * j; t += j) {
            const long e = base + t;
            if (e > order) break;
            const Rational w((t == 0 || t == j * j) ? 1 : 2);
            s.set_coeff(static_cast<int>(e), s.coeff(static_cast<int>(e)) + w);
        }
    }
    return s;
}

TruncatedSeries f_k_series(int k, int order) {
    if (k < 1) throw std::invalid_argument("f_k needs k >= 1");
    TruncatedSeries s(order);
    for (long n = 1;; ++n) {
        const long e = n * (n + 1) / 2 + n * (k - 1);
        if (e > order) break;
        s.set_coeff(static_cast<int>(e), Rational((n % 2 == 1) ? 1 : -1));
    }
    return s;
}

AFamily a_family(int order) {
    AFamily fam{TruncatedSeries(order), TruncatedSeries(order), TruncatedSeries(order),
                TruncatedSeries(order)};
    for (long n = 1; n * n <= order; ++n)
        fam.a1.set_coeff(static_cast<int>(n * n), Rational((n % 2 == 1) ? 1 : -1));
    for (long n = 2; n * n + n <= order; ++n) {
        const Rational outer((n % 2 == 0) ? 1 : -1);
        for (long j = 1; j <= n - 1; ++j) {
            const long e = n * n + j * n;
            if (e > order) break;
            const Rational inner((j % 2 == 1) ? 1 : -1);
            fam.a2.set_coeff(static_cast<int>(e), fam.a2.coeff(static_cast<int>(e)) + outer * inner);
        }
    }
    for (long n = 1; 8 * n * n <= order; ++n)
        fam.a3.set_coeff(static_cast<int>(8 * n * n), Rational(1));
    for (long n = 1; 2 * n * n <= order; ++n)
        fam.a4.set_coeff(static_cast<int>(2 * n * n), Rational((n % 2 == 1) ? 1 : -1));
    return fam;
}

}  // namespace oplab
