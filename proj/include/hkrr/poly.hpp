#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hkrr/rational.hpp"

namespace hkrr {

/// Dense univariate polynomial over Rational; coeffs_[i] multiplies t^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree() == -1.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> coeffs);
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int exponent);
    /// The identity polynomial t.
    static UniPoly variable();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int i) const;
    Rational leading() const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational operator()(const Rational& x) const { return eval(x); }
    Rational eval(const Rational& x) const;
    /// this(inner(t)).
    UniPoly compose(const UniPoly& inner) const;
    UniPoly derivative() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Human-readable form in the given variable, highest power first.
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a by a nonzero divisor.
struct PolyDivision {
    UniPoly quotient;
    UniPoly remainder;
};
PolyDivision divide(const UniPoly& a, const UniPoly& divisor);

/// prod_{i=0}^{n-1} (scale*t + shift - i) / n!, i.e. binom(scale*t + shift, n).
UniPoly binom_poly(const Rational& scale, const Rational& shift, int n);

}  // namespace hkrr
