#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hkrr/report.hpp"
#include "hkrr/suites.hpp"
#include "test_support.hpp"

using namespace hkrr;

TEST_CASE("rationals round-trip through json strings") {
    hkrr::testing::RationalGen gen(11, 1000000, 1000);
    for (int i = 0; i < 200; ++i) {
        Rational r = gen();
        Json j = rational_json(r);
        CHECK(j.is_string());
        CHECK(rational_from_json(Json::parse(j.dump())) == r);
    }
    CHECK(rational_json(Rational(-3, 6)).get<std::string>() == "-1/2");
    CHECK(rational_json(Rational(7)).get<std::string>() == "7");
    CHECK(rational_from_json(Json(12)) == Rational(12));
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), std::exception);
}

TEST_CASE("polynomials serialize by increasing degree") {
    Json j = poly_json(UniPoly({1, Rational(1, 2), 0, 3}));
    CHECK(j.dump() == R"(["1","1/2","0","3"])");
}

TEST_CASE("every json number in a report round-trips") {
    Report r = rr_report(HKFamily::og10(), Rational(2));
    Json j = Json::parse(r.to_json().dump());
    for (const auto& c : j["results"]["coefficients"]) CHECK_NOTHROW(rational_from_json(c));
    UniPoly rr = rr_polynomial(HKFamily::og10());
    for (int i = 0; i <= 5; ++i) CHECK(rational_from_json(j["results"]["coefficients"][i]) == rr.coeff(i));
}

TEST_CASE("gram parsing") {
    BBGram g = parse_gram_json(R"({"labels": ["F", "Theta"], "entries": [[0, 1], [1, "-1/2"]]})");
    CHECK(g.size() == 2);
    CHECK(g(1, 1) == Rational(-1, 2));
    CHECK_THROWS_AS(parse_gram_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gram_json(R"({"labels": ["a"]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gram_json(R"({"labels": ["a", "b"], "entries": [[0, 1], [2, 0]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gram_json(R"({"labels": ["a"], "entries": [["x"]]})"), std::invalid_argument);
}

TEST_CASE("slot specs") {
    BBGram g = parse_gram_json(R"({"labels": ["F", "Theta"], "entries": [[0, 1], [1, 0]]})");
    auto a = parse_slot_spec("F^5*Theta^5", g);
    CHECK(a.size() == 10);
    CHECK(std::count(a.begin(), a.end(), 0U) == 5);
    CHECK(parse_slot_spec("F^5 Theta^5", g) == a);
    CHECK(parse_slot_spec("F,Theta,Theta", g) == std::vector<std::size_t>{0, 1, 1});
    CHECK_THROWS_AS(parse_slot_spec("G^2", g), std::invalid_argument);
    CHECK_THROWS_AS(parse_slot_spec("F^x", g), std::invalid_argument);
    CHECK_THROWS_AS(parse_slot_spec("F^-1", g), std::invalid_argument);
    CHECK_THROWS_AS(parse_slot_spec("", g), std::invalid_argument);
}

TEST_CASE("checks and report status") {
    Check ok = check_equal("x", Rational(1, 2), Rational(2, 4), "src");
    CHECK(ok.pass);
    CHECK(ok.expected == "1/2");
    Check bad = check_equal("y", Rational(1), Rational(2), "src");
    CHECK_FALSE(bad.pass);
    Report r{"test", Json::object(), Json::object(), {ok}};
    CHECK(r.all_pass());
    r.checks.push_back(bad);
    CHECK_FALSE(r.all_pass());
    Json j = r.to_json();
    CHECK(j["pass"] == false);
    CHECK(j["checks"][1]["provenance"] == "src");
    CHECK(r.to_table().find("FAIL") != std::string::npos);
}

TEST_CASE("chern json layout") {
    ChernOptions opt;
    opt.chi_overrides[3] = Rational(-7173);
    Report r = chern_report(opt);
    CHECK(r.all_pass());
    Json j = chern_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"family", "chern_numbers", "checks"});
    std::vector<std::string> names;
    for (auto it = j["chern_numbers"].begin(); it != j["chern_numbers"].end(); ++it) names.push_back(it.key());
    CHECK(names == std::vector<std::string>{"c2^5", "c2^3*c4", "c2^2*c6", "c2*c8", "c2*c4^2", "c4*c6", "c10"});
    CHECK(j["chern_numbers"]["c10"] == "176904");
    CHECK(chern_table(r).find("rr-equations rank: 3") != std::string::npos);
    CHECK(chern_table(r).find("euler check: 176904 = 176904, pass") != std::string::npos);
}

TEST_CASE("default chern report fails on the transcribed chi^3") {
    Report r = chern_report();
    CHECK_FALSE(r.all_pass());
    for (const auto& c : r.checks) CHECK_FALSE(c.provenance.empty());
}

TEST_CASE("suite names") {
    CHECK(parse_suite("og6") == Suite::OG6);
    CHECK(parse_suite("all") == Suite::All);
    CHECK_THROWS_AS(parse_suite("og8"), std::invalid_argument);
    for (Suite s : {Suite::OG10, Suite::Identity, Suite::Fujiki}) {
        auto checks = run_suite(s);
        CHECK_FALSE(checks.empty());
        for (const auto& c : checks) CHECK_MESSAGE(c.pass, c.name);
    }
    CHECK(verify_report(Suite::All).to_json().dump() == verify_report(Suite::All).to_json().dump());
}
