#pragma once

// Chern numbers of OG10 from two sources of linear constraints:
//   * the Riemann-Roch polynomial written in the characteristic value,
//     matched coefficient-by-coefficient against Nieper's exponential
//     formula in y = sqrt(lambda/4 + 1);
//   * the Hodge-theoretic invariants chi^p = sum_q (-1)^q h^{p,q}.

#include <string>
#include <vector>

#include "hkrr/chern_ring.hpp"
#include "hkrr/families.hpp"
#include "hkrr/linalg.hpp"
#include "hkrr/poly.hpp"

namespace hkrr {

/// A polynomial in y whose coefficients are linear functionals on the
/// top Chern monomials. Entry i multiplies y^i.
struct FormPoly {
    RingSpec spec;
    std::vector<IntegralForm> coefficients;

    int degree() const;
    IntegralForm coeff(int i) const;
};

/// integral of exp(-2 sum_{k=1}^{n} b_{2k} s_{2k} T_{2k}(y)) with s_{2k} the
/// power sums of Chern roots; exact because s_{2k} = 0 above the top weight.
FormPoly nieper_rhs(const RingSpec& spec);

/// RR_lambda(lambda) with lambda = 4 y^2 - 4, as a polynomial in y.
UniPoly rr_lambda_in_y(const HKFamily& family);

struct LinearRow {
    std::vector<Rational> coeffs;
    Rational rhs;
    std::string provenance;
};

struct LinearSystem {
    std::vector<Monomial> unknowns;
    std::vector<LinearRow> rows;

    RationalMatrix matrix() const;
    std::vector<Rational> rhs() const;
    /// Row i as "sum c_j x_j = rhs"; used in diagnostics.
    std::string describe_row(std::size_t i) const;
    /// Rows appended in order; unknowns must agree.
    LinearSystem combined_with(const LinearSystem& other) const;
    LinearSystem subset(const std::vector<std::size_t>& row_indices) const;
};

/// c_2^5, c_2^3 c_4, c_2^2 c_6, c_2 c_8, c_2 c_4^2, c_4 c_6, c_10.
std::vector<Monomial> og10_unknowns();
RingSpec og10_spec();

/// One row per even power of y in RR_lambda(4y^2-4) = nieper_rhs(y).
LinearSystem assemble_rr_equations();

/// chi^p values of OG10 for p = 0..4 as transcribed from its Hodge numbers.
std::vector<Rational> og10_chi_p_values();

/// Rows chi^p(OG10) = chi_values[p] for p = 1..4, optionally preceded by
/// the chi^0 row. chi_values must have five entries.
LinearSystem assemble_hodge_equations(const std::vector<Rational>& chi_values, bool include_chi0 = false);
LinearSystem assemble_hodge_equations(bool include_chi0 = false);

std::size_t system_rank(const LinearSystem& system);

/// Rows of [A | b] that are linear combinations of others: each entry w of
/// the result satisfies sum_i w_i row_i = 0.
std::vector<std::vector<Rational>> row_dependencies(const LinearSystem& system);

/// Exact elimination. Throws InconsistentSystemError (whose message names
/// a violated row) or SingularSystemError when the rank is below the
/// number of unknowns.
ChernNumbers solve(const LinearSystem& system, const RingSpec& spec = og10_spec());

/// The combined RR + Hodge system for OG10, solved.
ChernNumbers solve_og10_chern_numbers();

/// The published OG10 Chern numbers, in og10_unknowns() order.
std::vector<Rational> og10_reference_chern_numbers();
ChernNumbers og10_reference_assignment();

/// sum_p (-1)^p chi^p(nums); equals the top Chern number c_dim.
Rational euler_characteristic_check(const ChernNumbers& nums);

/// True when `nums` satisfies every row exactly; failing provenances are
/// appended to `failures` when given.
bool satisfies(const LinearSystem& system, const ChernNumbers& nums, std::vector<std::string>* failures = nullptr);

}  // namespace hkrr
