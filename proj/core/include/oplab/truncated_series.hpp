#pragma once

#include <string>
#include <vector>

#include "oplab/rational.hpp"

namespace oplab {

/// Formal power series in q with exact rational coefficients, truncated at a
/// fixed order. Coefficients are indexed 0..order() inclusive. Values are
/// immutable in spirit: every operation returns a new series, and arithmetic
/// between series of different orders truncates to the smaller order.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1) {}

    /// Zero series of the given order.
    explicit TruncatedSeries(int order);

    /// Takes coefficients c0..cN; the order is N.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
    static TruncatedSeries one(int order);
    static TruncatedSeries monomial(int exponent, const Rational& c, int order);
    static TruncatedSeries constant(const Rational& c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of q^i; zero for i > order (by convention), throws for i < 0.
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    void set_coeff(int i, Rational c);

    bool is_zero() const;

    TruncatedSeries truncated(int new_order) const;

    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator-(const TruncatedSeries& f);

    /// Cauchy product, truncated to min(order(f), order(g)).
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);

    TruncatedSeries& operator+=(const TruncatedSeries& g);
    TruncatedSeries& operator-=(const TruncatedSeries& g);
    TruncatedSeries& operator*=(const TruncatedSeries& g);

    TruncatedSeries scaled(const Rational& c) const;

    /// Multiplies in place by the binomial (1 + c*q^k). Cheaper than a full
    /// product; used by the q-Pochhammer constructors.
    void mul_binomial(const Rational& c, int k);

    /// Multiplicative inverse up to the truncation order.
    /// Throws ZeroConstantTerm when coeff(0) == 0.
    TruncatedSeries inverted() const;

    /// q -> q^m. Coefficient of q^{m*i} becomes coeff(i); the truncation
    /// order is unchanged. Throws InvalidExponent when m < 1.
    TruncatedSeries substitute_power(int m) const;

    /// Equality compares coefficients up to the smaller order only when the
    /// orders agree; series of different orders are never equal.
    friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
        return f.coeffs_ == g.coeffs_;
    }

    /// Least i with coeff(i) != coeff_other(i), or -1 if equal to min order.
    friend int first_difference(const TruncatedSeries& f, const TruncatedSeries& g);

    /// "3/2*q^4 + q + 1" style rendering of the nonzero terms (low to high).
    std::string str(int max_terms = 12) const;

    /// JSON object {"order": N, "coeffs": ["p/q", ...]}.
    std::string to_json() const;
    static TruncatedSeries from_json(const std::string& text);

private:
    std::vector<Rational> coeffs_;
};

inline TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) { return f + g; }
inline TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) { return f * g; }
inline TruncatedSeries invert(const TruncatedSeries& f) { return f.inverted(); }
inline TruncatedSeries substitute_power(const TruncatedSeries& f, int m) {
    return f.substitute_power(m);
}

}  // namespace oplab
