#include "hkrr/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hkrr {

Check check_equal(std::string name, const Rational& expected, const Rational& actual, std::string provenance) {
    return {std::move(name), expected.to_string(), actual.to_string(), expected == actual, std::move(provenance)};
}

Check check_equal(std::string name, const std::string& expected, const std::string& actual, std::string provenance) {
    return {std::move(name), expected, actual, expected == actual, std::move(provenance)};
}

Check check_true(std::string name, bool ok, std::string provenance, std::string detail) {
    return {std::move(name), "true", ok ? "true" : (detail.empty() ? "false" : detail), ok, std::move(provenance)};
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json checks_json(const std::vector<Check>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name},
                       {"expected", c.expected},
                       {"actual", c.actual},
                       {"pass", c.pass},
                       {"provenance", c.provenance}});
    }
    return arr;
}

std::string checks_table(const std::vector<Check>& checks) {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": expected " << c.expected << ", got " << c.actual
           << "  (" << c.provenance << ")\n";
    }
    return os.str();
}

Json Report::to_json() const {
    return {{"command", command}, {"inputs", inputs}, {"results", results}, {"checks", checks_json(checks)},
            {"pass", all_pass()}};
}

std::string Report::to_table() const {
    std::ostringstream os;
    os << command << "\n";
    for (const auto& [key, value] : results.items()) {
        os << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    os << checks_table(checks);
    return os.str();
}

Json rational_json(const Rational& r) { return r.to_string(); }

Json poly_json(const UniPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.to_string());
    return arr;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a rational string, got " + j.dump());
}

BBGram parse_gram_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("Gram file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("labels") || !doc.contains("entries") || !doc["labels"].is_array() ||
        !doc["entries"].is_array()) {
        throw std::invalid_argument("Gram file needs array fields \"labels\" and \"entries\"");
    }
    std::vector<std::string> labels;
    for (const auto& l : doc["labels"]) {
        if (!l.is_string()) throw std::invalid_argument("Gram labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    std::vector<std::vector<Rational>> entries;
    for (const auto& row : doc["entries"]) {
        if (!row.is_array()) throw std::invalid_argument("Gram entries must be an array of rows");
        std::vector<Rational> r;
        for (const auto& x : row) r.push_back(rational_from_json(x));
        entries.push_back(std::move(r));
    }
    return BBGram(std::move(labels), std::move(entries));
}

std::vector<std::size_t> parse_slot_spec(const std::string& spec, const BBGram& gram) {
    std::string normalized = spec;
    for (char& c : normalized) {
        if (c == '*' || c == ',' || std::isspace(static_cast<unsigned char>(c))) c = ' ';
    }
    std::istringstream is(normalized);
    std::string token;
    std::vector<std::size_t> slots;
    while (is >> token) {
        int count = 1;
        auto caret = token.find('^');
        std::string label = token.substr(0, caret);
        if (caret != std::string::npos) {
            std::string exp = token.substr(caret + 1);
            if (exp.empty() || !std::all_of(exp.begin(), exp.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                throw std::invalid_argument("bad exponent in slot spec: '" + token + "'");
            }
            count = std::stoi(exp);
        }
        std::size_t idx = gram.index_of(label);
        slots.insert(slots.end(), static_cast<std::size_t>(count), idx);
    }
    if (slots.empty()) throw std::invalid_argument("empty slot spec");
    return slots;
}

}  // namespace hkrr
