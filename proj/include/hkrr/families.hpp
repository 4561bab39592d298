#pragma once

// Deformation families of hyperkahler manifolds and their Riemann-Roch
// polynomials RR(t), where chi(X, L) = RR(q_X(L)) and t is the
// Beauville-Bogomolov square.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hkrr/poly.hpp"
#include "hkrr/rational.hpp"

namespace hkrr {

enum class FamilyKind { K3n, Kumn, OG6, OG10 };

struct HKFamily {
    FamilyKind kind;
    int n;  // half the complex dimension

    /// Throws std::invalid_argument for n < 1, OG6 with n != 3, OG10 with n != 5.
    static HKFamily make(FamilyKind kind, int n);
    static HKFamily k3n(int n) { return make(FamilyKind::K3n, n); }
    static HKFamily kumn(int n) { return make(FamilyKind::Kumn, n); }
    static HKFamily og6() { return make(FamilyKind::OG6, 3); }
    static HKFamily og10() { return make(FamilyKind::OG10, 5); }

    int dim() const { return 2 * n; }
    std::string name() const;

    friend bool operator==(const HKFamily&, const HKFamily&) = default;
};

/// Accepts "k3n", "kumn", "og6", "og10" (case-insensitive). For OG6/OG10 the
/// dimension is implied; n <= 0 means "not given".
HKFamily parse_family(const std::string& name, int n);

UniPoly rr_polynomial(const HKFamily& f);

/// c_X = (2n)! * leading coefficient.
Rational fujiki_constant(const HKFamily& f);

/// a_i = (2i)! [t^i] RR, i = 0..n.
std::vector<Rational> huybrechts_constants(const HKFamily& f);

Rational chi_line_bundle(const HKFamily& f, const Rational& q);

/// M = lambda(L) / q_X(L) = 2n a / b from the two leading coefficients a, b.
/// Throws std::domain_error if b = 0.
Rational lambda_q_ratio(const HKFamily& f);

/// RR in the characteristic value lambda: RR_lambda(s) = RR(s / M).
UniPoly rr_in_lambda(const HKFamily& f);

/// C(c_2(X)) = 12 (2n-2)! b.
Rational c2_fujiki_constant(const HKFamily& f);

/// Symmetric matrix of Beauville-Bogomolov pairings between named classes.
class BBGram {
public:
    /// Throws std::invalid_argument unless entries is square, symmetric and
    /// matches the label count.
    BBGram(std::vector<std::string> labels, std::vector<std::vector<Rational>> entries);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    /// Throws std::invalid_argument for an unknown label.
    std::size_t index_of(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Rational>> entries_;
};

/// Visits every perfect matching of slots 0..count-1 as a list of pairs;
/// the lowest unmatched slot is always paired first.
void for_each_perfect_matching(std::size_t count,
                               const std::function<void(std::span<const std::pair<std::size_t, std::size_t>>)>& visit);

std::size_t count_perfect_matchings(std::size_t count);

/// Integral of alpha_{s_1} ... alpha_{s_2n} from the polarized Fujiki
/// relation. Summing over perfect matchings instead of S_{2n}: each
/// matching is hit 2^n n! times. Throws std::invalid_argument on an odd
/// slot count or an index outside the Gram matrix.
Rational fujiki_polarized(const Rational& c_x, const BBGram& gram, std::span<const std::size_t> slots);

/// Distinct rational roots of a nonzero polynomial, ascending.
std::vector<Rational> rational_roots(const UniPoly& p);

/// The offset s with binom(s + 5, 5) = 6 = chi(O) of an OG10 manifold.
/// Throws std::runtime_error unless there is exactly one rational root.
Rational solve_og10_shift();

/// h^0(Theta + mF) = binom(m + s + 5, 5) on the Lagrangian-fibred OG10 model.
Rational h0_theta_fiber(int m);

struct DivisorDatum {
    std::string name;
    Rational chi;  // chi(X, O(D))
    Rational q;    // q_X(D)
};

/// The Sigma and B divisors on an OG6 manifold: (chi, q) = (-4, -8), (0, -2).
std::vector<DivisorDatum> og6_divisor_table();

struct OG6Coefficients {
    Rational a1;
    Rational a2;
};

/// Solves chi = a_0 + a_1/2! q + a_2/4! q^2 + a_3/6! q^3 for (a_1, a_2) with
/// a_0 = 4 and a_3 = 60 fixed. Throws SingularSystemError when the q values
/// do not separate the unknowns, InconsistentSystemError for contradictory
/// rows, std::invalid_argument for fewer than two rows.
OG6Coefficients solve_og6_coefficients(std::span<const DivisorDatum> divisors);

/// The OG6 polynomial rebuilt from solved coefficients.
UniPoly og6_polynomial_from(const OG6Coefficients& a);

/// chi(X, O(E)) = chi(O_X) + chi(E, omega_E) = (n + 1) + chi_omega_e.
Rational chi_of_divisor_bundle(int n, const Rational& chi_omega_e);

/// chi(E, omega_E) = -chi(E, O_E) for smooth E of odd dimension 2n - 1.
Rational chi_omega_of_smooth(const Rational& chi_structure_sheaf);

}  // namespace hkrr
