#pragma once

// Machine-readable results. Rationals are serialized as "p" or "p/q"
// strings because JSON numbers cannot carry them exactly.

#include <string>
#include <vector>

#include <json.hpp>

#include "hkrr/families.hpp"
#include "hkrr/poly.hpp"
#include "hkrr/rational.hpp"

namespace hkrr {

using Json = nlohmann::ordered_json;

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
    std::string provenance;  // where the expected value comes from
};

Check check_equal(std::string name, const Rational& expected, const Rational& actual, std::string provenance);
Check check_equal(std::string name, const std::string& expected, const std::string& actual, std::string provenance);
Check check_true(std::string name, bool ok, std::string provenance, std::string detail = {});

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::vector<Check> checks;

    bool all_pass() const;
    Json to_json() const;
    std::string to_table() const;
};

Json checks_json(const std::vector<Check>& checks);
std::string checks_table(const std::vector<Check>& checks);

Json rational_json(const Rational& r);
/// Coefficients in increasing degree, each as a rational string.
Json poly_json(const UniPoly& p);
/// Accepts a JSON integer or a rational string.
Rational rational_from_json(const Json& j);

/// {"labels": [...], "entries": [[...], ...]}; entries are integers or
/// rational strings. Throws std::invalid_argument on malformed input.
BBGram parse_gram_json(const std::string& text);

/// "F^5*Theta^5", "F^5 Theta^5" or "a,b,b" into Gram indices.
/// Throws std::invalid_argument for unknown labels or bad exponents.
std::vector<std::size_t> parse_slot_spec(const std::string& spec, const BBGram& gram);

}  // namespace hkrr
