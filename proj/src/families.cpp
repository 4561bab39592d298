#include "hkrr/families.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "hkrr/linalg.hpp"

namespace hkrr {

HKFamily HKFamily::make(FamilyKind kind, int n) {
    if (n < 1) throw std::invalid_argument("family requires n >= 1");
    if (kind == FamilyKind::OG6 && n != 3) throw std::invalid_argument("OG6 has n = 3");
    if (kind == FamilyKind::OG10 && n != 5) throw std::invalid_argument("OG10 has n = 5");
    return {kind, n};
}

std::string HKFamily::name() const {
    switch (kind) {
        case FamilyKind::K3n: return "K3^[" + std::to_string(n) + "]";
        case FamilyKind::Kumn: return "Kum_" + std::to_string(n);
        case FamilyKind::OG6: return "OG6";
        case FamilyKind::OG10: return "OG10";
    }
    return "?";
}

HKFamily parse_family(const std::string& name, int n) {
    std::string key;
    for (char c : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (key == "og6") return HKFamily::make(FamilyKind::OG6, n > 0 ? n : 3);
    if (key == "og10") return HKFamily::make(FamilyKind::OG10, n > 0 ? n : 5);
    if (key == "k3n" || key == "kumn") {
        if (n <= 0) throw std::invalid_argument("family '" + name + "' needs --n");
        return HKFamily::make(key == "k3n" ? FamilyKind::K3n : FamilyKind::Kumn, n);
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

UniPoly rr_polynomial(const HKFamily& f) {
    const Rational half(1, 2);
    switch (f.kind) {
        case FamilyKind::K3n:
        case FamilyKind::OG10:
            return binom_poly(half, f.n + 1, f.n);
        case FamilyKind::Kumn:
        case FamilyKind::OG6:
            return binom_poly(half, f.n, f.n) * Rational(f.n + 1);
    }
    throw std::logic_error("unhandled family");
}

Rational fujiki_constant(const HKFamily& f) { return factorial(f.dim()) * rr_polynomial(f).leading(); }

std::vector<Rational> huybrechts_constants(const HKFamily& f) {
    UniPoly rr = rr_polynomial(f);
    std::vector<Rational> a;
    for (int i = 0; i <= f.n; ++i) a.push_back(factorial(2 * i) * rr.coeff(i));
    return a;
}

Rational chi_line_bundle(const HKFamily& f, const Rational& q) { return rr_polynomial(f).eval(q); }

Rational lambda_q_ratio(const HKFamily& f) {
    UniPoly rr = rr_polynomial(f);
    Rational a = rr.coeff(f.n);
    Rational b = rr.coeff(f.n - 1);
    if (b.is_zero()) throw std::domain_error("lambda_q_ratio: subleading coefficient vanishes");
    return Rational(2 * f.n) * a / b;
}

UniPoly rr_in_lambda(const HKFamily& f) {
    return rr_polynomial(f).compose(UniPoly::monomial(lambda_q_ratio(f).inverse(), 1));
}

Rational c2_fujiki_constant(const HKFamily& f) {
    return Rational(12) * factorial(f.dim() - 2) * rr_polynomial(f).coeff(f.n - 1);
}

// ---- polarized Fujiki relation ----

BBGram::BBGram(std::vector<std::string> labels, std::vector<std::vector<Rational>> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
    if (entries_.size() != labels_.size()) throw std::invalid_argument("Gram matrix size does not match labels");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].size() != labels_.size()) throw std::invalid_argument("Gram matrix is not square");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (entries_[i][j] != entries_[j][i]) throw std::invalid_argument("Gram matrix is not symmetric");
        }
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw std::invalid_argument("duplicate Gram labels");
}

std::size_t BBGram::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::invalid_argument("unknown class label '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

void match_recursive(std::vector<bool>& used, std::vector<Pair>& pairs,
                     const std::function<void(std::span<const Pair>)>& visit) {
    auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) {
        visit(pairs);
        return;
    }
    std::size_t i = static_cast<std::size_t>(first - used.begin());
    used[i] = true;
    for (std::size_t j = i + 1; j < used.size(); ++j) {
        if (used[j]) continue;
        used[j] = true;
        pairs.emplace_back(i, j);
        match_recursive(used, pairs, visit);
        pairs.pop_back();
        used[j] = false;
    }
    used[i] = false;
}

}  // namespace

void for_each_perfect_matching(std::size_t count, const std::function<void(std::span<const Pair>)>& visit) {
    if (count % 2 != 0) throw std::invalid_argument("perfect matchings need an even slot count");
    std::vector<bool> used(count, false);
    std::vector<Pair> pairs;
    match_recursive(used, pairs, visit);
}

std::size_t count_perfect_matchings(std::size_t count) {
    std::size_t total = 0;
    for_each_perfect_matching(count, [&](std::span<const Pair>) { ++total; });
    return total;
}

Rational fujiki_polarized(const Rational& c_x, const BBGram& gram, std::span<const std::size_t> slots) {
    if (slots.empty() || slots.size() % 2 != 0) {
        throw std::invalid_argument("polarized Fujiki relation needs a positive even number of slots");
    }
    for (auto s : slots) {
        if (s >= gram.size()) throw std::invalid_argument("slot refers to a class outside the Gram matrix");
    }
    Rational sum(0);
    for_each_perfect_matching(slots.size(), [&](std::span<const Pair> pairs) {
        Rational prod(1);
        for (const auto& [i, j] : pairs) {
            prod *= gram(slots[i], slots[j]);
            if (prod.is_zero()) return;
        }
        sum += prod;
    });
    int n = static_cast<int>(slots.size() / 2);
    return c_x * Rational(2).pow(n) * factorial(n) / factorial(2 * n) * sum;
}

// ---- rational roots and the OG10 shift ----

namespace {

std::vector<BigInt> positive_divisors(BigInt v) {
    v = abs(v);
    std::vector<BigInt> small;
    std::vector<BigInt> large;
    for (BigInt d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            small.push_back(d);
            if (d * d != v) large.push_back(v / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    // Drop the factor t^k.
    int low = 0;
    while (p.coeff(low).is_zero()) ++low;
    if (low > 0) roots.push_back(0);
    BigInt lcm = 1;
    for (int i = low; i <= p.degree(); ++i) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.coeff(i).denominator().get_mpz_t());
    }
    BigInt constant = (p.coeff(low) * Rational(lcm)).numerator();
    BigInt lead = (p.leading() * Rational(lcm)).numerator();
    UniPoly reduced(std::vector<Rational>(p.coefficients().begin() + low, p.coefficients().end()));
    for (const auto& num : positive_divisors(constant)) {
        for (const auto& den : positive_divisors(lead)) {
            for (int sign : {1, -1}) {
                Rational cand(num * sign, den);
                if (reduced.eval(cand).is_zero()) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Rational solve_og10_shift() {
    const int n = 5;
    Rational chi_o = n + 1;
    UniPoly equation = binom_poly(1, n, n) - UniPoly::constant(chi_o);
    auto roots = rational_roots(equation);
    if (roots.size() != 1) {
        throw std::runtime_error("binom(s+5,5) = 6 has " + std::to_string(roots.size()) +
                                 " rational solutions, expected exactly one");
    }
    return roots.front();
}

Rational h0_theta_fiber(int m) {
    if (m < 0) throw std::invalid_argument("h0_theta_fiber: m must be nonnegative");
    static const Rational shift = solve_og10_shift();
    return binom_poly(1, shift + Rational(5), 5).eval(m);
}

// ---- OG6 ----

std::vector<DivisorDatum> og6_divisor_table() {
    return {
        {"Sigma", chi_of_divisor_bundle(3, -8), -8},
        {"B", chi_of_divisor_bundle(3, chi_omega_of_smooth(4)), -2},
    };
}

OG6Coefficients solve_og6_coefficients(std::span<const DivisorDatum> divisors) {
    if (divisors.size() < 2) throw std::invalid_argument("need at least two divisors to fix a_1 and a_2");
    const Rational a0 = 4;
    const Rational a3 = 60;
    RationalMatrix m(divisors.size(), 2);
    std::vector<Rational> rhs;
    for (std::size_t r = 0; r < divisors.size(); ++r) {
        const Rational& q = divisors[r].q;
        m(r, 0) = q / factorial(2);
        m(r, 1) = q.pow(2) / factorial(4);
        rhs.push_back(divisors[r].chi - a0 - a3 / factorial(6) * q.pow(3));
    }
    auto x = solve_unique(m, rhs);
    return {x[0], x[1]};
}

UniPoly og6_polynomial_from(const OG6Coefficients& a) {
    return UniPoly({4, a.a1 / factorial(2), a.a2 / factorial(4), Rational(60) / factorial(6)});
}

Rational chi_of_divisor_bundle(int n, const Rational& chi_omega_e) { return Rational(n + 1) + chi_omega_e; }

Rational chi_omega_of_smooth(const Rational& chi_structure_sheaf) { return -chi_structure_sheaf; }

}  // namespace hkrr
