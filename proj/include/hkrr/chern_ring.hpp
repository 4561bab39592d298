#pragma once

// Truncated graded ring of formal Chern classes of a complex manifold of
// dimension `dim`, with the symmetric-function machinery on top of it
// (power sums, Chern character, Adams operations, exterior powers, Todd
// class) and the formal top-degree integral.
//
// A monomial is the sorted list of generator weights, so c_2^2*c_6 is
// {2, 2, 6}. Products of weight above dim are dropped. In hyperkahler mode
// only even generators c_2, c_4, ..., c_dim exist.

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hkrr/rational.hpp"

namespace hkrr {

struct RingSpec {
    int dim = 0;
    bool hk_mode = false;

    /// Throws std::invalid_argument for dim < 1, or odd dim in hk mode.
    static RingSpec hyperkahler(int dim);
    static RingSpec generic(int dim);

    /// Weights of the ring generators in increasing order.
    std::vector<int> generators() const;
    bool has_generator(int weight) const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

using Monomial = std::vector<int>;

int weight(const Monomial& m);
/// "1", "c2", "c2^3*c4", ...
std::string monomial_name(const Monomial& m);
/// Inverse of monomial_name. Throws std::invalid_argument on bad text.
Monomial parse_monomial(const std::string& name);

/// All monomials of exactly the given weight, lexicographically increasing.
std::vector<Monomial> monomials_of_weight(const RingSpec& spec, int w);
/// Monomials of weight dim.
std::vector<Monomial> top_monomials(const RingSpec& spec);

class SpecMismatchError : public std::invalid_argument {
public:
    SpecMismatchError();
};

class GradedClass {
public:
    explicit GradedClass(RingSpec spec);

    static GradedClass constant(const RingSpec& spec, const Rational& c);
    /// c_j, where c_0 = 1 and c_j = 0 for j > dim or for odd j in hk mode.
    static GradedClass chern(const RingSpec& spec, int j);
    static GradedClass from_monomial(const RingSpec& spec, const Monomial& m, const Rational& c = 1);

    const RingSpec& spec() const { return spec_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;
    bool is_zero() const { return terms_.empty(); }

    /// The weight-w homogeneous part.
    GradedClass component(int w) const;
    Rational constant_term() const { return coeff({}); }

    GradedClass operator-() const;
    GradedClass& operator+=(const GradedClass& o);
    GradedClass& operator-=(const GradedClass& o);
    GradedClass& operator*=(const Rational& c);
    GradedClass& operator*=(const GradedClass& o);

    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator*(GradedClass a, const Rational& c) { return a *= c; }
    friend GradedClass operator*(const Rational& c, GradedClass a) { return a *= c; }
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
    friend bool operator==(const GradedClass&, const GradedClass&) = default;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    RingSpec spec_;
    std::map<Monomial, Rational> terms_;
};

/// exp(a) = sum a^m/m!. The series is finite because a must have zero
/// constant term (std::invalid_argument otherwise).
GradedClass exp_class(const GradedClass& a);

/// Replace each generator c_j by images[j] (index 0 unused) and expand.
GradedClass substitute(const GradedClass& a, std::span<const GradedClass> images);

/// Power sums p_k of the Chern roots in the c basis, k = 0..dim, by Newton's
/// identities; p_0 is the rank dim.
std::vector<GradedClass> chern_to_powersums(const RingSpec& spec);

/// The inverse map: entry k expresses c_k in a ring whose generator j is
/// read as p_j. Entry 0 is 1.
std::vector<GradedClass> powersums_to_chern(const RingSpec& spec);

/// ch = rank + sum_{k>=1} p_k / k! of a bundle whose Chern classes are the
/// ring generators.
GradedClass chern_character(int rank, const RingSpec& spec);

/// psi^m: scales the weight-k part by m^k.
GradedClass adams(const GradedClass& ch, int m);

/// ch(Lambda^p E) from ch(E), via Newton's identity on the quantities e^{x_i}.
/// Throws std::invalid_argument unless 0 <= p <= rank.
GradedClass exterior_power_ch(const GradedClass& ch_e, int rank, int p);

/// td = exp(sum_k gamma_k p_k), gamma_k = [x^k] log(x / (1 - e^{-x})).
GradedClass todd_class(const RingSpec& spec);

/// A linear functional on top-weight monomials: the formal integral of a
/// class, before any Chern numbers are known.
class IntegralForm {
public:
    explicit IntegralForm(RingSpec spec);

    const RingSpec& spec() const { return spec_; }
    Rational coeff(const Monomial& m) const;
    const std::map<Monomial, Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficients in the order of `basis`.
    std::vector<Rational> as_vector(const std::vector<Monomial>& basis) const;

    IntegralForm& operator+=(const IntegralForm& o);
    IntegralForm& operator*=(const Rational& c);
    friend IntegralForm operator+(IntegralForm a, const IntegralForm& b) { return a += b; }
    friend IntegralForm operator*(IntegralForm a, const Rational& c) { return a *= c; }
    friend bool operator==(const IntegralForm&, const IntegralForm&) = default;

    std::string to_string() const;

private:
    friend IntegralForm integrate(const GradedClass& a);

    RingSpec spec_;
    std::map<Monomial, Rational> coeffs_;
};

IntegralForm integrate(const GradedClass& a);

/// Values of all top-weight Chern numbers.
class ChernNumbers {
public:
    /// Throws std::invalid_argument unless `values` covers every top monomial
    /// and nothing else.
    ChernNumbers(RingSpec spec, std::map<Monomial, Rational> values);
    static ChernNumbers zero(const RingSpec& spec);

    const RingSpec& spec() const { return spec_; }
    const Rational& at(const Monomial& m) const;
    const std::map<Monomial, Rational>& values() const { return values_; }

    friend bool operator==(const ChernNumbers&, const ChernNumbers&) = default;

private:
    RingSpec spec_;
    std::map<Monomial, Rational> values_;
};

Rational evaluate(const IntegralForm& f, const ChernNumbers& nums);

/// chi^p = integral of ch(Omega^p) td for the cotangent bundle of the
/// manifold described by spec. Requires 0 <= p <= dim.
IntegralForm chi_p_form(const RingSpec& spec, int p);

}  // namespace hkrr
