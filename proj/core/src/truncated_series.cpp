#include "oplab/truncated_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "oplab/errors.hpp"

namespace oplab {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.resize(static_cast<size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the q^0 coefficient");
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int exponent, const Rational& c, int order) {
    TruncatedSeries s(order);
    if (exponent < 0) throw std::invalid_argument("monomial exponent must be >= 0");
    if (exponent <= order) s.coeffs_[exponent] = c;
    return s;
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
    return monomial(0, c, order);
}

const Rational& TruncatedSeries::coeff(int i) const {
    static const Rational kZero(0);
    if (i < 0) throw std::out_of_range("negative q-exponent");
    if (i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[i];
}

void TruncatedSeries::set_coeff(int i, Rational c) {
    if (i < 0 || i > order()) throw std::out_of_range("coefficient index outside truncation");
    coeffs_[i] = std::move(c);
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 0) throw std::invalid_argument("series order must be >= 0");
    if (new_order >= order()) {
        TruncatedSeries s(new_order);
        std::copy(coeffs_.begin(), coeffs_.end(), s.coeffs_.begin());
        return s;
    }
    TruncatedSeries s(new_order);
    std::copy(coeffs_.begin(), coeffs_.begin() + new_order + 1, s.coeffs_.begin());
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    const int n = std::min(f.order(), g.order());
    TruncatedSeries s(n);
    for (int i = 0; i <= n; ++i) s.coeffs_[i] = f.coeffs_[i] + g.coeffs_[i];
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
    const int n = std::min(f.order(), g.order());
    TruncatedSeries s(n);
    for (int i = 0; i <= n; ++i) s.coeffs_[i] = f.coeffs_[i] - g.coeffs_[i];
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& f) {
    TruncatedSeries s(f.order());
    for (int i = 0; i <= f.order(); ++i) s.coeffs_[i] = -f.coeffs_[i];
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    const int n = std::min(f.order(), g.order());
    TruncatedSeries s(n);
    // Plain convolution.
    for (int i = 0; i <= n; ++i) {
        if (f.coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (g.coeffs_[j] == 0) continue;
            s.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& g) {
    return *this = *this + g;
}
TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& g) {
    return *this = *this - g;
}
TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& g) {
    return *this = *this * g;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries s(order());
    for (int i = 0; i <= order(); ++i) s.coeffs_[i] = coeffs_[i] * c;
    return s;
}

void TruncatedSeries::mul_binomial(const Rational& c, int k) {
    if (k <= 0) throw std::invalid_argument("binomial exponent must be >= 1");
    for (int i = order(); i >= k; --i) coeffs_[i] += c * coeffs_[i - k];
}

TruncatedSeries TruncatedSeries::inverted() const {
    if (coeffs_[0] == 0)
        throw ZeroConstantTerm("cannot invert a series with zero constant term");
    const int n = order();
    TruncatedSeries g(n);
    const Rational c0_inv = Rational(1) / coeffs_[0];
    g.coeffs_[0] = c0_inv;
    for (int i = 1; i <= n; ++i) {
        Rational acc(0);
        for (int j = 1; j <= i; ++j) {
            if (coeffs_[j] == 0) continue;
            acc += coeffs_[j] * g.coeffs_[i - j];
        }
        g.coeffs_[i] = -acc * c0_inv;
    }
    return g;
}

TruncatedSeries TruncatedSeries::substitute_power(int m) const {
    if (m < 1) throw InvalidExponent("substitution exponent must be >= 1");
    const int n = order();
    TruncatedSeries s(n);
    for (int i = 0; static_cast<long>(i) * m <= n; ++i) s.coeffs_[i * m] = coeffs_[i];
    return s;
}

int first_difference(const TruncatedSeries& f, const TruncatedSeries& g) {
    const int n = std::min(f.order(), g.order());
    for (int i = 0; i <= n; ++i)
        if (f.coeff(i) != g.coeff(i)) return i;
    return -1;
}

std::string TruncatedSeries::str(int max_terms) const {
    std::ostringstream out;
    int printed = 0;
    for (int i = 0; i <= order() && printed < max_terms; ++i) {
        if (coeffs_[i] == 0) continue;
        const bool negative = coeffs_[i] < 0;
        const Rational magnitude = negative ? Rational(-coeffs_[i]) : coeffs_[i];
        if (printed > 0)
            out << (negative ? " - " : " + ");
        else if (negative)
            out << "-";
        if (i == 0) {
            out << to_string(magnitude);
        } else {
            if (magnitude != 1) out << to_string(magnitude) << "*";
            out << "q";
            if (i > 1) out << "^" << i;
        }
        ++printed;
    }
    if (printed == 0) return "0";
    for (int i = 0; i <= order(); ++i)
        if (coeffs_[i] != 0 && --max_terms < 0) {
            out << " + ...";
            break;
        }
    return out.str();
}

std::string TruncatedSeries::to_json() const {
    nlohmann::json j;
    j["order"] = order();
    auto& arr = j["coeffs"] = nlohmann::json::array();
    for (const Rational& c : coeffs_) arr.push_back(to_string(c));
    return j.dump();
}

TruncatedSeries TruncatedSeries::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const int order = j.at("order").get<int>();
    const auto& arr = j.at("coeffs");
    if (static_cast<int>(arr.size()) != order + 1)
        throw std::invalid_argument("coeffs length must be order+1");
    std::vector<Rational> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& item : arr) coeffs.push_back(rational_from_string(item.get<std::string>()));
    return TruncatedSeries(std::move(coeffs));
}

}  // namespace oplab
