#pragma once

#include <vector>

#include "hkrr/rational.hpp"

namespace hkrr {

/// Power series in x known modulo x^(order+1). The truncation order is
/// carried by each value; binary operations on mismatched orders use the
/// smaller one.
class TruncSeries {
public:
    explicit TruncSeries(int order);
    TruncSeries(std::vector<Rational> coeffs, int order);

    int order() const { return order_; }
    const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    Rational& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(TruncSeries a, const Rational& c);
    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

    TruncSeries truncated(int order) const;

private:
    std::vector<Rational> coeffs_;
    int order_;
};

// The following throw std::invalid_argument on a wrong constant term.

/// Multiplicative inverse; constant term must be nonzero.
TruncSeries inverse(const TruncSeries& s);
/// log(s); constant term must be 1.
TruncSeries log(const TruncSeries& s);
/// exp(s); constant term must be 0.
TruncSeries exp(const TruncSeries& s);

/// e^(scale*x) truncated at the given order.
TruncSeries exp_series(const Rational& scale, int order);

/// x / (1 - e^(-x)), the Todd root factor.
TruncSeries todd_root_series(int order);

/// gamma_k = [x^k] log(x / (1 - e^(-x))) for k = 0..order.
std::vector<Rational> todd_log_coefficients(int order);

}  // namespace hkrr
