#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(HKRR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("hkrr_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("rr command") {
    Run r = run("rr og10 --format json");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["huybrechts_constants"][0] == "6");
    CHECK(j["results"]["huybrechts_constants"][5] == "945");

    Run og6 = run("rr og6 --eval -2 --format json");
    CHECK(og6.status == 0);
    CHECK(nlohmann::json::parse(og6.out)["results"]["chi"] == "0");

    Run k3 = run("rr k3n --n 1 --eval 0 --format json");
    CHECK(k3.status == 0);
    CHECK(nlohmann::json::parse(k3.out)["results"]["chi"] == "2");

    CHECK(run("rr k3n").status == 2);
    CHECK(run("rr og10 --n 4").status == 2);
    CHECK(run("rr nonsense --n 2").status == 2);
    CHECK(run("rr og10 --eval 1/0").status == 2);
}

TEST_CASE("chern command") {
    Run table = run("chern og10");
    CHECK(table.out.find("rr-equations rank: 3") != std::string::npos);
    // the transcribed chi^3 makes the published numbers unreachable
    CHECK(table.status == 1);

    Run fixed = run("chern og10 --chi 3=-7173 --format json");
    CHECK(fixed.status == 0);
    auto j = nlohmann::ordered_json::parse(fixed.out);
    CHECK(j.begin().key() == "family");
    CHECK(j["family"] == "OG10");
    const char* keys[] = {"c2^5", "c2^3*c4", "c2^2*c6", "c2*c8", "c2*c4^2", "c4*c6", "c10"};
    const char* values[] = {"127370880", "53071200", "12383280", "1791720", "22113000", "5159700", "176904"};
    auto it = j["chern_numbers"].begin();
    for (int i = 0; i < 7; ++i, ++it) {
        CHECK(it.key() == keys[i]);
        CHECK(it.value() == values[i]);
    }
    CHECK(run("chern og10 --chi 3=-7173").out.find("euler check: 176904 = 176904, pass") != std::string::npos);
    CHECK(run("chern og10 --chi 9=1").status == 2);
    CHECK(run("chern og10 --chi 3").status == 2);
    CHECK(run("chern og6").status == 2);
}

TEST_CASE("verify command") {
    CHECK(run("verify og10").status == 0);
    CHECK(run("verify fujiki").status == 0);
    CHECK(run("verify identity").status == 0);
    Run og6 = run("verify og6 --format json");
    CHECK(og6.status == 0);
    CHECK(run("verify og8").status == 2);
    Run a = run("verify all --format json");
    Run b = run("verify all --format json");
    CHECK(a.out == b.out);
    CHECK(a.status == b.status);
    CHECK(!a.out.empty());
}

TEST_CASE("fujiki command") {
    std::string gram = write_temp("gram.json", R"({"labels": ["F", "Theta"], "entries": [[0, 1], [1, 0]]})");
    Run r = run("fujiki --cx 945 --gram " + gram + " --slots 'F^5*Theta^5' --format json");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["results"]["integral"] == "120");

    std::string single = write_temp("single.json", R"({"labels": ["a"], "entries": [[3]]})");
    Run one = run("fujiki --cx 1 --gram " + single + " --slots 'a^2' --format json");
    CHECK(one.status == 0);
    CHECK(nlohmann::json::parse(one.out)["results"]["integral"] == "3");

    CHECK(run("fujiki --cx 1 --gram " + single + " --slots 'a^3'").status == 2);
    CHECK(run("fujiki --cx 1 --gram /nonexistent/gram.json --slots a^2").status == 2);
    std::string broken = write_temp("broken.json", "{");
    CHECK(run("fujiki --cx 1 --gram " + broken + " --slots a^2").status == 2);
}

TEST_CASE("chi command") {
    Run r = run("chi --family og6 --q -8 --format json");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["results"]["chi"] == "-4");
    Run og10 = run("chi --family og10 --q 2 --format json");
    CHECK(nlohmann::json::parse(og10.out)["results"]["chi"] == "21");
    CHECK(run("chi --family kumn --q 0").status == 2);
    CHECK(run("chi --family og6").status == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("").status == 2);
    CHECK(run("bogus").status == 2);
    CHECK(run("--help").status == 0);
    CHECK(run("rr og10 --format xml").status == 2);
}
