#include "hkrr/chern_solver.hpp"

#include <sstream>
#include <stdexcept>

#include "hkrr/sequences.hpp"

namespace hkrr {

int FormPoly::degree() const {
    for (int i = static_cast<int>(coefficients.size()) - 1; i >= 0; --i) {
        if (!coefficients[static_cast<std::size_t>(i)].is_zero()) return i;
    }
    return -1;
}

IntegralForm FormPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coefficients.size())) return IntegralForm(spec);
    return coefficients[static_cast<std::size_t>(i)];
}

namespace {

// GradedClass (x) Q[y], indexed by the power of y.
using ClassPoly = std::vector<GradedClass>;

ClassPoly multiply(const ClassPoly& a, const ClassPoly& b, const RingSpec& spec) {
    if (a.empty() || b.empty()) return {};
    ClassPoly out(a.size() + b.size() - 1, GradedClass(spec));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

FormPoly nieper_rhs(const RingSpec& spec) {
    if (!spec.hk_mode) throw std::invalid_argument("nieper_rhs requires a hyperkahler ring");
    const int n = spec.dim / 2;
    auto p = chern_to_powersums(spec);

    ClassPoly exponent(static_cast<std::size_t>(spec.dim) + 1, GradedClass(spec));
    for (int k = 1; k <= n; ++k) {
        GradedClass scaled = p[static_cast<std::size_t>(2 * k)] * (Rational(-2) * modified_bernoulli(2 * k));
        UniPoly t = chebyshev_t(2 * k);
        for (int i = 0; i <= t.degree(); ++i) exponent[static_cast<std::size_t>(i)] += scaled * t.coeff(i);
    }

    // Every term of the exponent has class weight >= 2, so powers beyond n vanish.
    ClassPoly sum{GradedClass::constant(spec, 1)};
    ClassPoly term = sum;
    for (int m = 1; m <= n; ++m) {
        term = multiply(term, exponent, spec);
        for (auto& c : term) c *= Rational(1, m);
        if (sum.size() < term.size()) sum.resize(term.size(), GradedClass(spec));
        for (std::size_t i = 0; i < term.size(); ++i) sum[i] += term[i];
    }

    FormPoly out{spec, {}};
    for (const auto& c : sum) out.coefficients.push_back(integrate(c));
    while (!out.coefficients.empty() && out.coefficients.back().is_zero()) out.coefficients.pop_back();
    return out;
}

UniPoly rr_lambda_in_y(const HKFamily& family) {
    const UniPoly lambda_of_y({-4, 0, 4});
    return rr_in_lambda(family).compose(lambda_of_y);
}

// ---- linear systems ----

RationalMatrix LinearSystem::matrix() const {
    std::vector<std::vector<Rational>> m;
    for (const auto& r : rows) m.push_back(r.coeffs);
    if (m.empty()) return RationalMatrix(0, unknowns.size());
    return RationalMatrix(std::move(m));
}

std::vector<Rational> LinearSystem::rhs() const {
    std::vector<Rational> b;
    for (const auto& r : rows) b.push_back(r.rhs);
    return b;
}

std::string LinearSystem::describe_row(std::size_t i) const {
    const LinearRow& r = rows.at(i);
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
        if (r.coeffs[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << r.coeffs[j] << ")*" << monomial_name(unknowns[j]);
    }
    if (first) os << "0";
    os << " = " << r.rhs << "  [" << r.provenance << "]";
    return os.str();
}

LinearSystem LinearSystem::combined_with(const LinearSystem& other) const {
    if (unknowns != other.unknowns) throw std::invalid_argument("cannot combine systems with different unknowns");
    LinearSystem out = *this;
    out.rows.insert(out.rows.end(), other.rows.begin(), other.rows.end());
    return out;
}

LinearSystem LinearSystem::subset(const std::vector<std::size_t>& row_indices) const {
    LinearSystem out{unknowns, {}};
    for (auto i : row_indices) out.rows.push_back(rows.at(i));
    return out;
}

std::vector<Monomial> og10_unknowns() {
    return {{2, 2, 2, 2, 2}, {2, 2, 2, 4}, {2, 2, 6}, {2, 8}, {2, 4, 4}, {4, 6}, {10}};
}

RingSpec og10_spec() { return RingSpec::hyperkahler(10); }

LinearSystem assemble_rr_equations() {
    const RingSpec spec = og10_spec();
    FormPoly rhs = nieper_rhs(spec);
    UniPoly lhs = rr_lambda_in_y(HKFamily::og10());
    LinearSystem sys{og10_unknowns(), {}};
    for (int i = 0; i <= spec.dim; i += 2) {
        sys.rows.push_back({rhs.coeff(i).as_vector(sys.unknowns), lhs.coeff(i),
                            "y^" + std::to_string(i) + " coefficient of the Riemann-Roch identity in y"});
    }
    return sys;
}

std::vector<Rational> og10_chi_p_values() { return {6, -111, 1062, -7151, 33534}; }

LinearSystem assemble_hodge_equations(bool include_chi0) {
    return assemble_hodge_equations(og10_chi_p_values(), include_chi0);
}

LinearSystem assemble_hodge_equations(const std::vector<Rational>& values, bool include_chi0) {
    if (values.size() != 5) throw std::invalid_argument("expected chi^0..chi^4");
    const RingSpec spec = og10_spec();
    LinearSystem sys{og10_unknowns(), {}};
    for (int p = include_chi0 ? 0 : 1; p <= 4; ++p) {
        const Rational& v = values[static_cast<std::size_t>(p)];
        std::string source = p == 0 ? "chi(O_X) = n + 1" : "OG10 Hodge numbers";
        sys.rows.push_back({chi_p_form(spec, p).as_vector(sys.unknowns), v,
                            "chi^" + std::to_string(p) + " = " + v.to_string() + " (" + source + ")"});
    }
    return sys;
}

std::size_t system_rank(const LinearSystem& system) { return rank(system.matrix()); }

std::vector<std::vector<Rational>> row_dependencies(const LinearSystem& system) {
    // Left kernel of the augmented matrix.
    RationalMatrix aug(system.rows.size(), system.unknowns.size() + 1);
    for (std::size_t r = 0; r < system.rows.size(); ++r) {
        for (std::size_t c = 0; c < system.unknowns.size(); ++c) aug(r, c) = system.rows[r].coeffs[c];
        aug(r, system.unknowns.size()) = system.rows[r].rhs;
    }
    return null_space(aug.transposed());
}

ChernNumbers solve(const LinearSystem& system, const RingSpec& spec) {
    auto top = top_monomials(spec);
    if (top.size() != system.unknowns.size()) throw std::invalid_argument("unknowns do not match the ring");
    std::vector<Rational> x;
    try {
        x = solve_unique(system.matrix(), system.rhs());
    } catch (const InconsistentSystemError&) {
        // Name the first row that cannot be reconciled with those before it.
        for (std::size_t i = 0; i < system.rows.size(); ++i) {
            std::vector<std::size_t> prefix(i + 1);
            for (std::size_t j = 0; j <= i; ++j) prefix[j] = j;
            LinearSystem head = system.subset(prefix);
            RationalMatrix a = head.matrix();
            RationalMatrix aug(a.rows(), a.cols() + 1);
            for (std::size_t r = 0; r < a.rows(); ++r) {
                for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
                aug(r, a.cols()) = head.rows[r].rhs;
            }
            if (rank(aug) > rank(a)) {
                throw InconsistentSystemError("inconsistent linear system at row: " + system.describe_row(i));
            }
        }
        throw;
    }
    std::map<Monomial, Rational> values;
    for (std::size_t i = 0; i < x.size(); ++i) values.emplace(system.unknowns[i], x[i]);
    return ChernNumbers(spec, std::move(values));
}

ChernNumbers solve_og10_chern_numbers() {
    return solve(assemble_rr_equations().combined_with(assemble_hodge_equations()));
}

std::vector<Rational> og10_reference_chern_numbers() {
    return {127370880, 53071200, 12383280, 1791720, 22113000, 5159700, 176904};
}

ChernNumbers og10_reference_assignment() {
    auto names = og10_unknowns();
    auto vals = og10_reference_chern_numbers();
    std::map<Monomial, Rational> m;
    for (std::size_t i = 0; i < names.size(); ++i) m.emplace(names[i], vals[i]);
    return ChernNumbers(og10_spec(), std::move(m));
}

Rational euler_characteristic_check(const ChernNumbers& nums) {
    const RingSpec& spec = nums.spec();
    Rational total(0);
    for (int p = 0; p <= spec.dim; ++p) {
        Rational v = evaluate(chi_p_form(spec, p), nums);
        if (p % 2 == 0) total += v;
        else total -= v;
    }
    return total;
}

bool satisfies(const LinearSystem& system, const ChernNumbers& nums, std::vector<std::string>* failures) {
    bool ok = true;
    for (std::size_t i = 0; i < system.rows.size(); ++i) {
        Rational lhs(0);
        for (std::size_t j = 0; j < system.unknowns.size(); ++j) {
            lhs += system.rows[i].coeffs[j] * nums.at(system.unknowns[j]);
        }
        if (lhs != system.rows[i].rhs) {
            ok = false;
            if (failures) failures->push_back(system.rows[i].provenance);
        }
    }
    return ok;
}

}  // namespace hkrr
