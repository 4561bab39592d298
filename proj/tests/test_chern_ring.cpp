#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "hkrr/chern_ring.hpp"
#include "hkrr/series.hpp"
#include "splitting_oracle.hpp"
#include "test_support.hpp"

using namespace hkrr;
using hkrr::testing::RationalGen;

namespace {

const RingSpec kOG10 = RingSpec::hyperkahler(10);

GradedClass c(const RingSpec& s, int j) { return GradedClass::chern(s, j); }

GradedClass random_class(const RingSpec& spec, RationalGen& gen, int min_weight) {
    GradedClass g(spec);
    for (int w = min_weight; w <= spec.dim; ++w) {
        for (const auto& m : monomials_of_weight(spec, w)) {
            if (gen.uniform_int(0, 2) == 0) g += GradedClass::from_monomial(spec, m, gen());
        }
    }
    return g;
}

}  // namespace

TEST_CASE("ring spec") {
    CHECK(RingSpec::hyperkahler(10).generators() == std::vector<int>{2, 4, 6, 8, 10});
    CHECK(RingSpec::generic(3).generators() == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(RingSpec::hyperkahler(5), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec::generic(0), std::invalid_argument);
}

TEST_CASE("monomial names") {
    CHECK(monomial_name({2, 2, 2, 4}) == "c2^3*c4");
    CHECK(monomial_name({}) == "1");
    CHECK(parse_monomial("c2^3*c4") == Monomial{2, 2, 2, 4});
    CHECK(parse_monomial("c10") == Monomial{10});
    CHECK_THROWS_AS(parse_monomial("x2"), std::invalid_argument);
    for (const auto& m : top_monomials(RingSpec::generic(8))) CHECK(parse_monomial(monomial_name(m)) == m);
}

TEST_CASE("OG10 has seven top monomials and nineteen in total") {
    auto top = top_monomials(kOG10);
    CHECK(top.size() == 7);
    std::size_t total = 0;
    for (int w = 0; w <= 10; ++w) total += monomials_of_weight(kOG10, w).size();
    CHECK(total == 19);  // partitions into even parts of weight 0..10
    CHECK(top_monomials(RingSpec::generic(10)).size() == 42);
}

TEST_CASE("ring_arith examples") {
    GradedClass c2 = c(kOG10, 2);
    CHECK(c2 * c2 == GradedClass::from_monomial(kOG10, {2, 2}));
    GradedClass c2_cubed = c2 * c2 * c2;
    CHECK((c2_cubed * c2_cubed).is_zero());
    GradedClass one = GradedClass::constant(kOG10, 1);
    CHECK((one + c2) * (one - c2) == one - c2 * c2);
    CHECK(c(kOG10, 3).is_zero());
    CHECK(c(kOG10, 12).is_zero());
    CHECK_THROWS_AS(c2 + c(RingSpec::hyperkahler(4), 2), SpecMismatchError);
    CHECK_THROWS_AS(GradedClass::from_monomial(kOG10, {3}), std::invalid_argument);
}

TEST_CASE("products keep weights additive and drop exactly the overflow") {
    RationalGen gen(21);
    RingSpec spec = RingSpec::generic(6);
    for (int trial = 0; trial < 10; ++trial) {
        GradedClass a = random_class(spec, gen, 0);
        GradedClass b = random_class(spec, gen, 0);
        GradedClass prod = a * b;
        for (int w = 0; w <= spec.dim; ++w) {
            GradedClass expected(spec);
            for (int i = 0; i <= w; ++i) expected += a.component(i) * b.component(w - i);
            CHECK(prod.component(w) == expected);
        }
    }
}

TEST_CASE("exp_class examples") {
    CHECK(exp_class(GradedClass(kOG10)) == GradedClass::constant(kOG10, 1));
    RingSpec s4 = RingSpec::hyperkahler(4);
    GradedClass c2 = c(s4, 2);
    CHECK(exp_class(c2) == GradedClass::constant(s4, 1) + c2 + c2 * c2 * Rational(1, 2));
    CHECK(exp_class(c(kOG10, 10)) == GradedClass::constant(kOG10, 1) + c(kOG10, 10));
    CHECK_THROWS_AS(exp_class(GradedClass::constant(kOG10, 1)), std::invalid_argument);
}

TEST_CASE("exp_class is a homomorphism on nilpotent classes") {
    RationalGen gen(17);
    for (RingSpec spec : {RingSpec::hyperkahler(10), RingSpec::generic(6)}) {
        for (int trial = 0; trial < 8; ++trial) {
            GradedClass a = random_class(spec, gen, 1);
            GradedClass b = random_class(spec, gen, 1);
            CHECK(exp_class(a + b) == exp_class(a) * exp_class(b));
        }
    }
}

TEST_CASE("power sums from Newton's identities") {
    RingSpec gen4 = RingSpec::generic(4);
    auto p = chern_to_powersums(gen4);
    CHECK(p[1] == c(gen4, 1));
    CHECK(p[2] == c(gen4, 1) * c(gen4, 1) - c(gen4, 2) * Rational(2));
    auto ph = chern_to_powersums(kOG10);
    CHECK(ph[1].is_zero());
    CHECK(ph[2] == c(kOG10, 2) * Rational(-2));
    CHECK(ph[4] == c(kOG10, 2) * c(kOG10, 2) * Rational(2) - c(kOG10, 4) * Rational(4));
    for (int k = 1; k <= 9; k += 2) CHECK(ph[static_cast<std::size_t>(k)].is_zero());
}

TEST_CASE("power sums match the root oracle") {
    // p_k = sum x_i^k: coefficient 1 at x_1^k, 0 at every other root monomial.
    const int roots = 6;
    RingSpec spec = RingSpec::generic(roots);
    auto p = chern_to_powersums(spec);
    for (int k = 1; k <= roots; ++k) {
        for (const auto& lam : hkrr::testing::partitions(k, roots)) {
            Rational expected = lam.size() == 1 ? Rational(1) : Rational(0);
            CHECK(hkrr::testing::root_coefficient(p[static_cast<std::size_t>(k)], lam, roots) == expected);
        }
    }
}

TEST_CASE("Newton roundtrip is the identity") {
    for (int dim = 1; dim <= 12; ++dim) {
        for (bool hk : {false, true}) {
            if (hk && dim % 2 != 0) continue;
            RingSpec spec = hk ? RingSpec::hyperkahler(dim) : RingSpec::generic(dim);
            auto c_to_p = chern_to_powersums(spec);
            auto p_to_c = powersums_to_chern(spec);
            for (int k = 1; k <= dim; ++k) {
                // c_k written in p's, then each p_j written back in c's.
                CHECK(substitute(p_to_c[static_cast<std::size_t>(k)], c_to_p) == c(spec, k));
                CHECK(substitute(c_to_p[static_cast<std::size_t>(k)], p_to_c) == c(spec, k));
            }
        }
    }
}

TEST_CASE("chern character") {
    GradedClass ch = chern_character(10, kOG10);
    CHECK(ch.component(0) == GradedClass::constant(kOG10, 10));
    CHECK(ch.component(2) == -c(kOG10, 2));
    for (int w = 1; w <= 9; w += 2) CHECK(ch.component(w).is_zero());
    CHECK_THROWS_AS(chern_character(-1, kOG10), std::invalid_argument);
}

TEST_CASE("adams operations") {
    GradedClass ch = chern_character(10, kOG10);
    CHECK(adams(ch, 1) == ch);
    CHECK(adams(ch, 0) == GradedClass::constant(kOG10, 10));
    auto p = chern_to_powersums(kOG10);
    GradedClass small = GradedClass::constant(kOG10, 10) + p[2] * Rational(1, 2);
    CHECK(adams(small, 2) == GradedClass::constant(kOG10, 10) + p[2] * Rational(2));
    for (int m = -3; m <= 3; ++m) {
        for (int l = -3; l <= 3; ++l) CHECK(adams(adams(ch, m), l) == adams(ch, m * l));
    }
}

TEST_CASE("exterior power examples") {
    GradedClass ch = chern_character(10, kOG10);
    CHECK(exterior_power_ch(ch, 10, 0) == GradedClass::constant(kOG10, 1));
    CHECK(exterior_power_ch(ch, 10, 1) == ch);
    CHECK(exterior_power_ch(ch, 10, 10) == GradedClass::constant(kOG10, 1));
    CHECK_THROWS_AS(exterior_power_ch(ch, 10, 11), std::invalid_argument);
    CHECK_THROWS_AS(exterior_power_ch(ch, 10, -1), std::invalid_argument);
    // generic mode: det has ch = e^{c_1}
    RingSpec g3 = RingSpec::generic(3);
    CHECK(exterior_power_ch(chern_character(3, g3), 3, 3) == exp_class(c(g3, 1)));
}

TEST_CASE("exterior powers match the splitting-principle oracle") {
    // [x^lambda] e_p(e^{x_1}, ..., e^{x_r}) summed over p-subsets S of the
    // roots: roots outside S contribute only when their exponent is 0.
    for (int rank = 1; rank <= 4; ++rank) {
        RingSpec spec = RingSpec::generic(rank);
        GradedClass ch = chern_character(rank, spec);
        GradedClass total(spec);
        for (int p = 0; p <= rank; ++p) {
            GradedClass ext = exterior_power_ch(ch, rank, p);
            total += ext;
            for (int w = 0; w <= rank; ++w) {
                for (auto lam : hkrr::testing::partitions(w, rank)) {
                    lam.resize(static_cast<std::size_t>(rank), 0);
                    Rational expected(0);
                    for (unsigned mask = 0; mask < (1U << rank); ++mask) {
                        if (std::popcount(mask) != p) continue;
                        Rational term(1);
                        for (int i = 0; i < rank; ++i) {
                            int e = lam[static_cast<std::size_t>(i)];
                            term *= (mask >> i & 1U) ? factorial(e).inverse() : Rational(e == 0 ? 1 : 0);
                        }
                        expected += term;
                    }
                    CHECK(hkrr::testing::root_coefficient(ext, lam, rank) == expected);
                }
            }
        }
        // sum_p ch(Lambda^p) = prod (1 + e^{x_i})
        for (int w = 0; w <= rank; ++w) {
            for (auto lam : hkrr::testing::partitions(w, rank)) {
                lam.resize(static_cast<std::size_t>(rank), 0);
                Rational expected(1);
                for (int e : lam) expected *= e == 0 ? Rational(2) : factorial(e).inverse();
                CHECK(hkrr::testing::root_coefficient(total, lam, rank) == expected);
            }
        }
    }
}

TEST_CASE("todd class examples") {
    GradedClass td = todd_class(kOG10);
    CHECK(td.component(0) == GradedClass::constant(kOG10, 1));
    CHECK(td.component(2) == c(kOG10, 2) * Rational(1, 12));
    CHECK(td.component(4) == (c(kOG10, 2) * c(kOG10, 2) * Rational(3) - c(kOG10, 4)) * Rational(1, 720));
    RingSpec g4 = RingSpec::generic(4);
    GradedClass tdg = todd_class(g4);
    CHECK(tdg.component(1) == c(g4, 1) * Rational(1, 2));
    CHECK(tdg.component(2) == (c(g4, 1) * c(g4, 1) + c(g4, 2)) * Rational(1, 12));
    CHECK(tdg.component(3) == c(g4, 1) * c(g4, 2) * Rational(1, 24));
}

TEST_CASE("todd class matches the 10-root oracle through weight 8") {
    const int roots = 10;
    RingSpec spec = RingSpec::generic(roots);
    GradedClass td = todd_class(spec);
    TruncSeries factor = todd_root_series(8);
    for (int w = 0; w <= 8; ++w) {
        for (const auto& lam : hkrr::testing::partitions(w, roots)) {
            Rational expected(1);
            for (int e : lam) expected *= factor[e];
            CHECK_MESSAGE(hkrr::testing::root_coefficient(td, lam, roots) == expected, "weight ", w);
        }
    }
    // hk mode is the same class with odd generators set to zero
    GradedClass td_hk = todd_class(kOG10);
    for (const auto& [m, coeff] : td.terms()) {
        bool even = std::all_of(m.begin(), m.end(), [](int g) { return g % 2 == 0; });
        CHECK(td_hk.coeff(m) == (even ? coeff : Rational(0)));
    }
}

TEST_CASE("integrate and evaluate") {
    GradedClass c2 = c(kOG10, 2);
    GradedClass c2_5 = c2 * c2 * c2 * c2 * c2;
    IntegralForm f = integrate(c2_5);
    CHECK(f.coefficients().size() == 1);
    CHECK(f.coeff({2, 2, 2, 2, 2}) == Rational(1));
    CHECK(integrate(c2).is_zero());
    IntegralForm g = integrate(c(kOG10, 4) * c(kOG10, 6) * Rational(3) + c2);
    CHECK(g.coefficients().size() == 1);
    CHECK(g.coeff({4, 6}) == Rational(3));

    ChernNumbers zero = ChernNumbers::zero(kOG10);
    CHECK(evaluate(g, zero).is_zero());
    std::map<Monomial, Rational> vals;
    int i = 1;
    for (const auto& m : top_monomials(kOG10)) vals[m] = i++;
    ChernNumbers nums(kOG10, vals);
    CHECK(evaluate(g, nums) == Rational(3) * nums.at({4, 6}));
    CHECK_THROWS_AS(evaluate(integrate(c(RingSpec::hyperkahler(4), 4)), nums), SpecMismatchError);
    vals.erase(Monomial{10});
    CHECK_THROWS_AS(ChernNumbers(kOG10, vals), std::invalid_argument);
}

TEST_CASE("chi_p forms satisfy Serre symmetry exactly") {
    for (int dim : {2, 4, 6, 10}) {
        RingSpec spec = RingSpec::hyperkahler(dim);
        for (int p = 0; p <= dim; ++p) CHECK(chi_p_form(spec, p) == chi_p_form(spec, dim - p));
    }
    CHECK_THROWS_AS(chi_p_form(kOG10, 11), std::invalid_argument);
}

TEST_CASE("chi_p of a K3 surface and of K3^[2]") {
    // K3: c2 = 24, h^{1,1} = 20
    RingSpec k3 = RingSpec::hyperkahler(2);
    ChernNumbers k3_nums(k3, {{{2}, 24}});
    CHECK(evaluate(chi_p_form(k3, 0), k3_nums) == Rational(2));
    CHECK(evaluate(chi_p_form(k3, 1), k3_nums) == Rational(-20));
    // K3^[2]: c2^2 = 828, c4 = 324; h^{1,1} = 21, h^{2,2} = 232
    RingSpec s4 = RingSpec::hyperkahler(4);
    ChernNumbers nums(s4, {{{2, 2}, 828}, {{4}, 324}});
    CHECK(evaluate(chi_p_form(s4, 0), nums) == Rational(3));
    CHECK(evaluate(chi_p_form(s4, 1), nums) == Rational(-42));
    CHECK(evaluate(chi_p_form(s4, 2), nums) == Rational(234));
}

TEST_CASE("published OG10 Chern numbers") {
    ChernNumbers nums(kOG10, {{{2, 2, 2, 2, 2}, 127370880},
                              {{2, 2, 2, 4}, 53071200},
                              {{2, 2, 6}, 12383280},
                              {{2, 8}, 1791720},
                              {{2, 4, 4}, 22113000},
                              {{4, 6}, 5159700},
                              {{10}, 176904}});
    CHECK(evaluate(integrate(c(kOG10, 10)), nums) == Rational(176904));
    GradedClass c2 = c(kOG10, 2);
    CHECK(evaluate(integrate(c2 * c2 * c2 * c2 * c2), nums) == Rational(127370880));
    CHECK(evaluate(chi_p_form(kOG10, 0), nums) == Rational(6));
    CHECK(evaluate(chi_p_form(kOG10, 1), nums) == Rational(-111));
    CHECK(evaluate(chi_p_form(kOG10, 2), nums) == Rational(1062));
    CHECK(evaluate(chi_p_form(kOG10, 4), nums) == Rational(33534));
}
