#include "hkrr/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hkrr {

TruncSeries::TruncSeries(int order) : TruncSeries({}, order) {}

TruncSeries::TruncSeries(std::vector<Rational> coeffs, int order)
    : coeffs_(std::move(coeffs)), order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries TruncSeries::truncated(int order) const {
    return TruncSeries(coeffs_, std::min(order, order_));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    *this = truncated(o.order_);
    for (int i = 0; i <= order_; ++i) (*this)[i] += o[i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    *this = truncated(o.order_);
    for (int i = 0; i <= order_; ++i) (*this)[i] -= o[i];
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int order = std::min(a.order_, b.order_);
    TruncSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

TruncSeries operator*(TruncSeries a, const Rational& c) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
}

TruncSeries inverse(const TruncSeries& s) {
    if (s[0].is_zero()) throw std::invalid_argument("inverse: series has zero constant term");
    TruncSeries out(s.order());
    Rational inv0 = s[0].inverse();
    out[0] = inv0;
    for (int k = 1; k <= s.order(); ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += s[j] * out[k - j];
        out[k] = -acc * inv0;
    }
    return out;
}

TruncSeries log(const TruncSeries& s) {
    if (s[0] != Rational(1)) throw std::invalid_argument("log: series constant term must be 1");
    // s' = s * (log s)'  =>  k*l_k = k*s_k - sum_{j=1}^{k-1} j*l_j*s_{k-j}
    TruncSeries out(s.order());
    for (int k = 1; k <= s.order(); ++k) {
        Rational acc = Rational(k) * s[k];
        for (int j = 1; j < k; ++j) acc -= Rational(j) * out[j] * s[k - j];
        out[k] = acc / Rational(k);
    }
    return out;
}

TruncSeries exp(const TruncSeries& s) {
    if (!s[0].is_zero()) throw std::invalid_argument("exp: series constant term must be 0");
    // e' = s' * e  =>  k*e_k = sum_{j=1}^{k} j*s_j*e_{k-j}
    TruncSeries out(s.order());
    out[0] = 1;
    for (int k = 1; k <= s.order(); ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += Rational(j) * s[j] * out[k - j];
        out[k] = acc / Rational(k);
    }
    return out;
}

TruncSeries exp_series(const Rational& scale, int order) {
    TruncSeries out(order);
    Rational term(1);
    for (int k = 0; k <= order; ++k) {
        out[k] = term;
        term = term * scale / Rational(k + 1);
    }
    return out;
}

TruncSeries todd_root_series(int order) {
    // (1 - e^{-x}) / x = sum_j (-1)^j x^j / (j+1)!
    TruncSeries denom(order);
    for (int j = 0; j <= order; ++j) {
        denom[j] = Rational(j % 2 == 0 ? 1 : -1) / factorial(j + 1);
    }
    return inverse(denom);
}

std::vector<Rational> todd_log_coefficients(int order) {
    return log(todd_root_series(order)).coefficients();
}

}  // namespace hkrr
