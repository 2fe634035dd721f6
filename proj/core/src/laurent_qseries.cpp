#include "oplab/laurent_qseries.hpp"

#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

#include "oplab/qseries.hpp"

namespace oplab {

LaurentQSeries::LaurentQSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    rows_.resize(static_cast<size_t>(order) + 1);
}

const Rational& LaurentQSeries::coeff(int m, int n) const {
    static const Rational kZero(0);
    if (n < 0 || n > order()) return kZero;
    const auto& row = rows_[n];
    const auto it = row.find(m);
    return it == row.end() ? kZero : it->second;
}

void LaurentQSeries::set_coeff(int m, int n, Rational c) {
    if (n < 0 || n > order()) throw std::out_of_range("q-exponent outside truncation");
    if (c == 0)
        rows_[n].erase(m);
    else
        rows_[n][m] = std::move(c);
}

const std::map<int, Rational>& LaurentQSeries::row(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("q-exponent outside truncation");
    return rows_[n];
}

LaurentQSeries& LaurentQSeries::operator+=(const LaurentQSeries& g) {
    if (this == &g) {
        for (auto& row : rows_)
            for (auto& [m, c] : row) c *= 2;
        return *this;
    }
    if (g.order() < order()) rows_.resize(g.order() + 1);
    for (int n = 0; n <= order(); ++n)
        for (const auto& [m, c] : g.rows_[n]) {
            Rational& mine = rows_[n][m];
            mine += c;
            if (mine == 0) rows_[n].erase(m);
        }
    return *this;
}

LaurentQSeries LaurentQSeries::mul_univariate(const TruncatedSeries& f) const {
    const int n_out = std::min(order(), f.order());
    LaurentQSeries out(n_out);
    for (int i = 0; i <= n_out; ++i) {
        if (f.coeff(i) == 0) continue;
        for (int n = 0; i + n <= n_out; ++n)
            for (const auto& [m, c] : rows_[n]) {
                Rational& cell = out.rows_[i + n][m];
                cell += f.coeff(i) * c;
                if (cell == 0) out.rows_[i + n].erase(m);
            }
    }
    return out;
}

void LaurentQSeries::divide_one_minus_zq(int z_sign, int j) {
    if (j < 1) throw std::invalid_argument("q-power in (1 - z^s q^j) must be >= 1");
    if (z_sign != 1 && z_sign != -1) throw std::invalid_argument("z-sign must be +-1");
    // g = f + z^{s} q^{j} g, resolved row by row in increasing n.
    for (int n = j; n <= order(); ++n)
        for (const auto& [m, c] : rows_[n - j]) {
            Rational& cell = rows_[n][m + z_sign];
            cell += c;
            if (cell == 0) rows_[n].erase(m + z_sign);
        }
}

TruncatedSeries LaurentQSeries::at_z_one() const {
    TruncatedSeries s(order());
    for (int n = 0; n <= order(); ++n) {
        Rational acc(0);
        for (const auto& [m, c] : rows_[n]) acc += c;
        s.set_coeff(n, acc);
    }
    return s;
}

TruncatedSeries LaurentQSeries::positive_first_moment() const {
    TruncatedSeries s(order());
    for (int n = 0; n <= order(); ++n) {
        Rational acc(0);
        for (const auto& [m, c] : rows_[n])
            if (m >= 1) acc += Rational(m) * c;
        s.set_coeff(n, acc);
    }
    return s;
}

bool LaurentQSeries::symmetric_in_z() const {
    for (int n = 0; n <= order(); ++n)
        for (const auto& [m, c] : rows_[n])
            if (coeff(-m, n) != c) return false;
    return true;
}

bool LaurentQSeries::z_band_within_weight() const {
    for (int n = 0; n <= order(); ++n)
        for (const auto& [m, c] : rows_[n])
            if (std::abs(m) > n && c != 0) return false;
    return true;
}

std::string LaurentQSeries::row_json(int n) const {
    nlohmann::json j;
    j["n"] = n;
    auto& obj = j["coeffs"] = nlohmann::json::object();
    for (const auto& [m, c] : row(n)) obj[std::to_string(m)] = to_string(c);
    return j.dump();
}

LaurentQSeries rank_gf_over(int order) {
    LaurentQSeries total(order);
    for (int n = 0; static_cast<long>(n) * (n + 1) / 2 <= order; ++n) {
        const TruncatedSeries neg_one_poch = pochhammer(Rational(-1), 0, n, order);
        LaurentQSeries term(order);
        const int lead = n * (n + 1) / 2;
        for (int i = 0; i + lead <= order; ++i)
            if (neg_one_poch.coeff(i) != 0) term.set_coeff(0, i + lead, neg_one_poch.coeff(i));
        for (int j = 1; j <= n; ++j) {
            term.divide_one_minus_zq(+1, j);  // 1/(1 - z q^j)
            term.divide_one_minus_zq(-1, j);  // 1/(1 - q^j / z)
        }
        total += term;
    }
    return total;
}

LaurentQSeries crank_gf_partitions(int order) {
    LaurentQSeries g(order);
    const TruncatedSeries euler = euler_product(order);
    for (int i = 0; i <= order; ++i)
        if (euler.coeff(i) != 0) g.set_coeff(0, i, euler.coeff(i));
    for (int j = 1; j <= order; ++j) {
        g.divide_one_minus_zq(+1, j);
        g.divide_one_minus_zq(-1, j);
    }
    return g;
}

LaurentQSeries crank_gf_over(int order) {
    return crank_gf_partitions(order).mul_univariate(neg_q_product(order));
}

}  // namespace oplab
