#include "hkrr/suites.hpp"

#include <sstream>
#include <stdexcept>

#include "hkrr/chern_solver.hpp"

namespace hkrr {

namespace {

const char* kFujikiProvenance = "Fujiki relation: c_X = (2n)! * leading coefficient of RR";
const char* kOG10Provenance = "OG10 Lagrangian fibration: h^0(Theta + mF) = binom(k + m + 5, 5)";
const char* kOG6Provenance = "OG6 divisors Sigma (chi -4, q -8) and B (chi 0, q -2)";
const char* kIdentityProvenance = "RR in lambda equals Nieper's exponential formula in y = sqrt(lambda/4 + 1)";
const char* kChernProvenance = "published OG10 Chern numbers";

Json family_json(const HKFamily& f) { return {{"family", f.name()}, {"n", f.n}}; }

}  // namespace

Report rr_report(const HKFamily& family, const std::optional<Rational>& eval_at) {
    Report r;
    r.command = "rr";
    r.inputs = family_json(family);
    UniPoly rr = rr_polynomial(family);
    r.results["polynomial"] = rr.to_string("t");
    r.results["coefficients"] = poly_json(rr);
    Json a = Json::array();
    for (const auto& x : huybrechts_constants(family)) a.push_back(rational_json(x));
    r.results["huybrechts_constants"] = a;
    r.results["fujiki_constant"] = rational_json(fujiki_constant(family));
    if (family.n >= 1 && !rr.coeff(family.n - 1).is_zero()) {
        r.results["lambda_q_ratio"] = rational_json(lambda_q_ratio(family));
        r.results["c2_fujiki_constant"] = rational_json(c2_fujiki_constant(family));
    }
    if (eval_at) {
        r.inputs["eval"] = rational_json(*eval_at);
        r.results["chi"] = rational_json(chi_line_bundle(family, *eval_at));
    }
    r.checks.push_back(check_equal("a_0 = n + 1", Rational(family.n + 1), rr.coeff(0), "chi(O_X) = n + 1"));
    r.checks.push_back(check_true("c_X > 0", fujiki_constant(family) > Rational(0), "Fujiki constant is a volume"));
    return r;
}

Report chi_report(const HKFamily& family, const Rational& q) {
    Report r;
    r.command = "chi";
    r.inputs = family_json(family);
    r.inputs["q"] = rational_json(q);
    r.results["chi"] = rational_json(chi_line_bundle(family, q));
    return r;
}

Report fujiki_report(const Rational& c_x, const BBGram& gram, const std::string& slot_spec) {
    auto slots = parse_slot_spec(slot_spec, gram);
    Report r;
    r.command = "fujiki";
    r.inputs["cx"] = rational_json(c_x);
    r.inputs["labels"] = gram.labels();
    r.inputs["slots"] = slot_spec;
    r.results["integral"] = rational_json(fujiki_polarized(c_x, gram, slots));
    r.results["matchings"] = count_perfect_matchings(slots.size());
    return r;
}

// ---- chern ----

Report chern_report(const ChernOptions& options) {
    Report r;
    r.command = "chern";
    r.inputs["family"] = "OG10";
    std::vector<Rational> chi = og10_chi_p_values();
    Json chi_in = Json::object();
    for (const auto& [p, v] : options.chi_overrides) {
        if (p < 0 || p > 4) throw std::invalid_argument("chi override index must be in 0..4");
        chi[static_cast<std::size_t>(p)] = v;
    }
    for (std::size_t p = 0; p < chi.size(); ++p) chi_in["chi^" + std::to_string(p)] = rational_json(chi[p]);
    r.inputs["chi_p"] = chi_in;

    LinearSystem rr_rows = assemble_rr_equations();
    LinearSystem hodge_rows = assemble_hodge_equations(chi, false);
    LinearSystem combined = rr_rows.combined_with(hodge_rows);
    std::size_t rr_rank = system_rank(rr_rows);
    std::size_t combined_rank = system_rank(combined);
    r.results["rr_equations_rank"] = rr_rank;
    r.results["combined_rank"] = combined_rank;
    r.checks.push_back(check_equal("rr-equations rank", Rational(3), Rational(static_cast<std::int64_t>(rr_rank)),
                                   "only 3 of the 6 coefficient equations are independent"));
    r.checks.push_back(check_equal("combined rank", Rational(7), Rational(static_cast<std::int64_t>(combined_rank)),
                                   "RR and Hodge rows determine all 7 Chern numbers"));

    const auto unknowns = og10_unknowns();
    const auto published = og10_reference_chern_numbers();
    std::optional<ChernNumbers> solved;
    try {
        solved = solve(combined);
    } catch (const std::runtime_error& e) {
        r.results["error"] = e.what();
        r.checks.push_back(check_true("solve", false, "exact elimination of the combined system", e.what()));
    }
    if (solved) {
        Json nums = Json::object();
        for (std::size_t i = 0; i < unknowns.size(); ++i) {
            const Rational& v = solved->at(unknowns[i]);
            nums[monomial_name(unknowns[i])] = rational_json(v);
            r.checks.push_back(check_equal(monomial_name(unknowns[i]), published[i], v, kChernProvenance));
        }
        r.results["chern_numbers"] = nums;
        Rational euler = euler_characteristic_check(*solved);
        Rational top = solved->at({10});
        r.results["euler_check"] = rational_json(euler);
        r.checks.push_back(check_equal("euler check", top, euler, "sum_p (-1)^p chi^p = c10"));
    }

    // The published numbers, pushed through the chi^p integrals.
    ChernNumbers ref = og10_reference_assignment();
    for (int p = 0; p <= 4; ++p) {
        r.checks.push_back(check_equal("published numbers give chi^" + std::to_string(p),
                                       chi[static_cast<std::size_t>(p)],
                                       evaluate(chi_p_form(og10_spec(), p), ref), "chi^p input value"));
    }
    return r;
}

Json chern_json(const Report& report) {
    Json out = Json::object();
    out["family"] = "OG10";
    out["chern_numbers"] = report.results.contains("chern_numbers") ? report.results["chern_numbers"] : Json(nullptr);
    out["checks"] = checks_json(report.checks);
    return out;
}

std::string chern_table(const Report& report) {
    std::ostringstream os;
    os << "OG10 Chern numbers\n";
    if (report.results.contains("chern_numbers")) {
        for (const auto& [k, v] : report.results["chern_numbers"].items()) {
            os << "  " << k << " = " << v.get<std::string>() << "\n";
        }
    } else {
        os << "  (no unique solution: " << report.results.value("error", std::string("unknown")) << ")\n";
    }
    os << "rr-equations rank: " << report.results["rr_equations_rank"].get<std::size_t>() << "\n";
    os << "combined rank: " << report.results["combined_rank"].get<std::size_t>() << "\n";
    if (report.results.contains("euler_check")) {
        const std::string euler = report.results["euler_check"].get<std::string>();
        const std::string c10 = report.results["chern_numbers"]["c10"].get<std::string>();
        os << "euler check: " << euler << " = " << c10 << ", " << (euler == c10 ? "pass" : "FAIL") << "\n";
    }
    os << checks_table(report.checks);
    return os.str();
}

// ---- suites ----

Suite parse_suite(const std::string& name) {
    if (name == "og6") return Suite::OG6;
    if (name == "og10") return Suite::OG10;
    if (name == "identity") return Suite::Identity;
    if (name == "fujiki") return Suite::Fujiki;
    if (name == "chern") return Suite::Chern;
    if (name == "all") return Suite::All;
    throw std::invalid_argument("unknown suite '" + name + "'");
}

namespace {

std::vector<Check> og10_checks() {
    std::vector<Check> out;
    Rational shift = solve_og10_shift();
    out.push_back(check_equal("OG10 shift", Rational(1), shift, kOG10Provenance));
    UniPoly rebuilt = binom_poly(Rational(1, 2), shift + Rational(5), 5);
    UniPoly k3_5 = rr_polynomial(HKFamily::k3n(5));
    out.push_back(check_equal("OG10 polynomial from shift", k3_5.to_string(), rebuilt.to_string(),
                              "K3^[5] Riemann-Roch polynomial binom(t/2 + 6, 5)"));
    out.push_back(check_equal("OG10 family polynomial", k3_5.to_string(), rr_polynomial(HKFamily::og10()).to_string(),
                              "OG10 is of K3^[5] type"));
    out.push_back(check_equal("OG10 a_0", Rational(6), huybrechts_constants(HKFamily::og10())[0], "chi(O_X) = n + 1"));
    out.push_back(check_equal("h^0(Theta) at m = 0", Rational(6), h0_theta_fiber(0), kOG10Provenance));
    return out;
}

std::vector<Check> og6_checks() {
    std::vector<Check> out;
    auto table = og6_divisor_table();
    out.push_back(check_equal("chi(O(Sigma))", Rational(-4), table[0].chi, kOG6Provenance));
    out.push_back(check_equal("chi(O(B))", Rational(0), table[1].chi, kOG6Provenance));
    OG6Coefficients a = solve_og6_coefficients(table);
    auto kum3 = huybrechts_constants(HKFamily::kumn(3));
    out.push_back(check_equal("OG6 a_1", kum3[1], a.a1, "Kum_3 Huybrechts constant a_1"));
    out.push_back(check_equal("OG6 a_2", kum3[2], a.a2, "Kum_3 Huybrechts constant a_2"));
    out.push_back(check_equal("OG6 polynomial", rr_polynomial(HKFamily::kumn(3)).to_string(),
                              og6_polynomial_from(a).to_string(), "OG6 is of Kum_3 type: 4 binom(t/2 + 3, 3)"));
    out.push_back(check_equal("chi(OG6, q = -2)", Rational(0), chi_line_bundle(HKFamily::og6(), -2), kOG6Provenance));
    out.push_back(check_equal("chi(OG6, q = -8)", Rational(-4), chi_line_bundle(HKFamily::og6(), -8), kOG6Provenance));
    return out;
}

std::vector<Check> identity_checks() {
    std::vector<Check> out;
    UniPoly lhs = rr_lambda_in_y(HKFamily::og10());
    UniPoly direct = binom_poly(1, 0, 5).compose(UniPoly({-2, 0, 8}));
    out.push_back(check_equal("RR in y", direct.to_string("y"), lhs.to_string("y"), "binom(8y^2 - 2, 5)"));
    out.push_back(check_equal("lambda/q ratio", Rational(1, 4), lambda_q_ratio(HKFamily::og10()),
                              "RR_lambda(t) = RR_q(4t)"));
    LinearSystem rr = assemble_rr_equations();
    out.push_back(check_equal("rr-equations rank", Rational(3), Rational(static_cast<std::int64_t>(system_rank(rr))),
                              "only 3 independent equations"));
    out.push_back(check_equal("rank of y^8, y^6, y^2 rows", Rational(3),
                              Rational(static_cast<std::int64_t>(system_rank(rr.subset({4, 3, 1})))),
                              "independent rows y^8, y^6, y^2"));
    std::vector<std::string> failures;
    bool ok = satisfies(rr, og10_reference_assignment(), &failures);
    std::string detail;
    for (const auto& f : failures) detail += (detail.empty() ? "" : "; ") + f;
    out.push_back(check_true("published numbers satisfy all RR rows", ok, kIdentityProvenance, detail));
    return out;
}

std::vector<Check> fujiki_checks() {
    std::vector<Check> out;
    out.push_back(check_equal("c_X(OG10)", Rational(945), fujiki_constant(HKFamily::og10()), "9!! = 945"));
    out.push_back(check_equal("c_X(OG6)", Rational(60), fujiki_constant(HKFamily::og6()), kFujikiProvenance));
    BBGram gram({"Theta", "F"}, {{0, 1}, {1, 0}});
    std::vector<std::size_t> slots{0, 0, 0, 0, 0, 1, 1, 1, 1, 1};
    out.push_back(check_equal("Theta^5 F^5", factorial(5), fujiki_polarized(945, gram, slots),
                              "integral of Theta_t^5 over a principally polarized fibre = 5!"));
    out.push_back(check_equal("matchings of 10 slots", Rational(945),
                              Rational(static_cast<std::int64_t>(count_perfect_matchings(10))), "(2n - 1)!!"));
    out.push_back(check_equal("C(c_2(OG10))", Rational(5040), c2_fujiki_constant(HKFamily::og10()),
                              "C(c_2) = 12 (2n - 2)! b"));
    return out;
}

}  // namespace

std::vector<Check> run_suite(Suite suite) {
    switch (suite) {
        case Suite::OG6: return og6_checks();
        case Suite::OG10: return og10_checks();
        case Suite::Identity: return identity_checks();
        case Suite::Fujiki: return fujiki_checks();
        case Suite::Chern: return chern_report().checks;
        case Suite::All: {
            std::vector<Check> all;
            for (Suite s : {Suite::OG6, Suite::OG10, Suite::Identity, Suite::Fujiki, Suite::Chern}) {
                auto part = run_suite(s);
                all.insert(all.end(), part.begin(), part.end());
            }
            return all;
        }
    }
    return {};
}

Report verify_report(Suite suite) {
    static const char* names[] = {"og6", "og10", "identity", "fujiki", "chern", "all"};
    Report r;
    r.command = "verify";
    r.inputs["suite"] = names[static_cast<int>(suite)];
    r.checks = run_suite(suite);
    std::size_t passed = 0;
    for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
    r.results["passed"] = passed;
    r.results["total"] = r.checks.size();
    return r;
}

}  // namespace hkrr
