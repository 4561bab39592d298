// hkrr: Riemann-Roch polynomials and Chern numbers of hyperkahler manifolds.
//
// Exit status: 0 all checks pass, 1 a mathematical check failed,
// 2 bad usage or malformed input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hkrr/families.hpp"
#include "hkrr/report.hpp"
#include "hkrr/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int emit(const hkrr::Report& report, const std::string& format) {
    if (format == "json") std::cout << report.to_json().dump(2) << "\n";
    else std::cout << report.to_table();
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::map<int, hkrr::Rational> parse_chi_overrides(const std::vector<std::string>& specs) {
    std::map<int, hkrr::Rational> out;
    for (const auto& s : specs) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--chi expects P=VALUE, got '" + s + "'");
        int p = 0;
        try {
            std::size_t used = 0;
            p = std::stoi(s.substr(0, eq), &used);
            if (used != eq) throw std::invalid_argument(s);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("--chi expects P=VALUE, got '" + s + "'");
        }
        out[p] = hkrr::Rational::parse(s.substr(eq + 1));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riemann-Roch polynomials and Chern numbers of hyperkahler manifolds"};
    app.require_subcommand(1);
    std::string format = "table";
    const auto format_check = CLI::IsMember({"table", "json"});

    auto* rr = app.add_subcommand("rr", "Riemann-Roch polynomial of a deformation family");
    std::string rr_family;
    int rr_n = 0;
    std::optional<std::string> rr_eval;
    rr->add_option("family", rr_family, "k3n, kumn, og6 or og10")->required();
    rr->add_option("--n", rr_n, "half the complex dimension");
    rr->add_option("--eval", rr_eval, "Beauville-Bogomolov square q at which to evaluate chi");
    rr->add_option("--format", format)->check(format_check);

    auto* chern = app.add_subcommand("chern", "Chern numbers from the Riemann-Roch and Hodge constraints");
    std::string chern_target;
    std::vector<std::string> chi_overrides;
    chern->add_option("target", chern_target, "og10")->required()->check(CLI::IsMember({"og10"}));
    chern->add_option("--chi", chi_overrides, "override a chi^p input, e.g. --chi 3=-7173");
    chern->add_option("--format", format)->check(format_check);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "og6, og10, identity, fujiki, chern or all")
        ->required()
        ->check(CLI::IsMember({"og6", "og10", "identity", "fujiki", "chern", "all"}));
    verify->add_option("--format", format)->check(format_check);

    auto* fujiki = app.add_subcommand("fujiki", "polarized Fujiki relation");
    std::string cx;
    std::string gram_path;
    std::string slots;
    fujiki->add_option("--cx", cx, "Fujiki constant P/Q")->required();
    fujiki->add_option("--gram", gram_path, "JSON file {\"labels\": [...], \"entries\": [[...]]}")->required();
    fujiki->add_option("--slots", slots, "classes with multiplicity, e.g. F^5*Theta^5")->required();
    fujiki->add_option("--format", format)->check(format_check);

    auto* chi = app.add_subcommand("chi", "Euler characteristic of a line bundle with given q");
    std::string chi_family;
    int chi_n = 0;
    std::string chi_q;
    chi->add_option("--family", chi_family, "k3n, kumn, og6 or og10")->required();
    chi->add_option("--n", chi_n, "half the complex dimension");
    chi->add_option("--q", chi_q, "Beauville-Bogomolov square P/Q")->required();
    chi->add_option("--format", format)->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*rr) {
            std::optional<hkrr::Rational> at;
            if (rr_eval) at = hkrr::Rational::parse(*rr_eval);
            return emit(hkrr::rr_report(hkrr::parse_family(rr_family, rr_n), at), format);
        }
        if (*chi) {
            auto family = hkrr::parse_family(chi_family, chi_n);
            return emit(hkrr::chi_report(family, hkrr::Rational::parse(chi_q)), format);
        }
        if (*fujiki) {
            auto gram = hkrr::parse_gram_json(read_file(gram_path));
            return emit(hkrr::fujiki_report(hkrr::Rational::parse(cx), gram, slots), format);
        }
        if (*chern) {
            hkrr::ChernOptions options{parse_chi_overrides(chi_overrides)};
            auto report = hkrr::chern_report(options);
            if (format == "json") std::cout << hkrr::chern_json(report).dump(2) << "\n";
            else std::cout << hkrr::chern_table(report);
            return report.all_pass() ? kExitOk : kExitCheckFailed;
        }
        if (*verify) {
            return emit(hkrr::verify_report(hkrr::parse_suite(suite)), format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
