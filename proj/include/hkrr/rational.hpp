#pragma once

// Exact rational scalar. Every quantity in the library is one of these;
// nothing is ever rounded.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hkrr {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(implicit): integers promote freely
    Rational(std::int64_t num, std::int64_t den);
    Rational(const BigInt& num, const BigInt& den = 1);

    /// Parses "p", "-p" or "p/q" (whitespace around tokens allowed).
    /// Throws std::invalid_argument on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const;
    Rational inverse() const;
    Rational pow(int exponent) const;

    /// "p" for integers, "p/q" otherwise; lossless inverse of parse().
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v);

    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace hkrr
