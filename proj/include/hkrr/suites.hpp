#pragma once

// Report builders behind the command-line tool, plus the named
// verification suites.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hkrr/families.hpp"
#include "hkrr/report.hpp"

namespace hkrr {

Report rr_report(const HKFamily& family, const std::optional<Rational>& eval_at);
Report chi_report(const HKFamily& family, const Rational& q);
Report fujiki_report(const Rational& c_x, const BBGram& gram, const std::string& slot_spec);

struct ChernOptions {
    /// Replaces chi^p (p = 0..4) in the Hodge rows.
    std::map<int, Rational> chi_overrides;
};

/// Solves for the OG10 Chern numbers and compares them with the published
/// values. results["chern_numbers"] is keyed c2^5, c2^3*c4, ... in that order
/// and is absent when the system cannot be solved uniquely.
Report chern_report(const ChernOptions& options = {});

/// {"family", "chern_numbers", "checks"} layout of the chern command.
Json chern_json(const Report& report);
std::string chern_table(const Report& report);

enum class Suite { OG6, OG10, Identity, Fujiki, Chern, All };

/// Throws std::invalid_argument for unknown names.
Suite parse_suite(const std::string& name);
std::vector<Check> run_suite(Suite suite);
Report verify_report(Suite suite);

}  // namespace hkrr
