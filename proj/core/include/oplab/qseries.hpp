#pragma once

#include "oplab/truncated_series.hpp"

namespace oplab {

/// Sign selector for the odd-index Pochhammer products.
enum class Sign { plus, minus };

/// (q;q)_inf = prod_{k>=1} (1 - q^k), truncated. Factors whose leading
/// exponent exceeds the order are omitted; they cannot touch retained
/// coefficients.
TruncatedSeries euler_product(int order);

/// (-q;q)_inf = prod_{k>=1} (1 + q^k), truncated.
TruncatedSeries neg_q_product(int order);

/// Sign::plus  -> (-q;q^2)_inf = prod (1 + q^{2k-1})
/// Sign::minus -> ( q;q^2)_inf = prod (1 - q^{2k-1})
TruncatedSeries odd_product(int order, Sign sign);

/// Finite Pochhammer (a;q)_n with a = c*q^e: prod_{k=1}^{n} (1 - c q^{e+k-1}).
TruncatedSeries pochhammer(const Rational& c, int e, int n, int order);

/// h(q) = sum_{n>=1} (-1)^{n+1} q^{n(n+1)/2} / (1 - q^n), truncated.
/// Each 1/(1-q^n) is expanded as a finite geometric series; terms whose
/// leading exponent n(n+1)/2 exceeds the order are dropped.
TruncatedSeries lambert_h(int order);

/// The squared-staircase form of the same series:
/// sum_{j>=1} q^{j^2} (1 + 2q^j + 2q^{2j} + ... + 2q^{j^2-j} + q^{j^2}).
TruncatedSeries lambert_h_closed(int order);

/// f_k(q) = sum_{n>=1} (-1)^{n+1} q^{n(n+1)/2 + n(k-1)}; coefficients are
/// all in {-1, 0, 1}.
TruncatedSeries f_k_series(int k, int order);

struct AFamily {
    TruncatedSeries a1, a2, a3, a4;
};

/// The four series of the h(q) - 2h(q^2) decomposition:
///   A1 = sum_{n>=1} (-1)^{n+1} q^{n^2}
///   A2 = sum_{n>=2} (-1)^n q^{n^2} sum_{j=1}^{n-1} (-1)^{j-1} q^{jn}
///   A3 = sum_{n>=1} q^{2(2n)^2}
///   A4 = sum_{n>=1} (-1)^{n+1} q^{2n^2}
/// satisfying A1 + 2*A2 - 2*A3 - A4 = h(q) - 2h(q^2) exactly.
AFamily a_family(int order);

/// Geometric expansion of q^lead / (1 - q^step) up to the order.
TruncatedSeries geometric(int lead, int step, int order);

}  // namespace oplab
