// Golden-invocation suite for the polyfc CLI: each case pins stdout JSON
// and the exit code contract (0 true/success, 1 false, 2 input error,
// 3 budget/timeout).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "polyfc/json_io.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(POLYFC_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

nlohmann::json first_json(const std::string& out) {
    return nlohmann::json::parse(out.substr(0, out.find('\n')));
}

nlohmann::json last_json(const std::string& out) {
    std::size_t end = out.find_last_not_of('\n');
    std::size_t start = out.rfind('\n', end);
    return nlohmann::json::parse(
        out.substr(start == std::string::npos ? 0 : start + 1, end - start));
}

void golden(const std::string& args, int code, const nlohmann::json& expected) {
    CAPTURE(args);
    RunResult r = run_cli(args);
    CHECK(r.code == code);
    CHECK(first_json(r.out) == expected);
}

void golden_code(const std::string& args, int code) {
    CAPTURE(args);
    CHECK(run_cli(args).code == code);
}

using nlohmann::json;

} // namespace

TEST_CASE("fibercount special") {
    golden("fibercount special 12", 0, json{{"fc", "2"}});
    golden("fibercount special 30", 0, json{{"fc", "3"}});
    golden("fibercount special 7", 0, json{{"fc", "0"}});
}

TEST_CASE("semiprime") {
    golden("semiprime 6", 0, json{{"is_one", true}});
    golden("semiprime 8", 0, json{{"is_one", true}});
    golden("semiprime 12", 1, json{{"is_one", false}});
    golden_code("semiprime", 2);
    golden_code("semiprime -4", 2);
}

TEST_CASE("gtheorem check") {
    golden("gtheorem check 3 1 6 12 8", 0, json{{"member", true}});
    golden("gtheorem check 3 1 6 12 9", 1, json{{"member", false}});
    golden("gtheorem check 4 1 5 10 10 5", 0, json{{"member", true}});
    golden_code("gtheorem check 3 1 6 12", 2); // wrong entry count
}

TEST_CASE("convert") {
    golden("convert f h 3 1 6 12 8", 0,
           json{{"d", 3}, {"entries", {"1", "3", "3", "1"}}});
    golden("convert h f 3 1 3 3 1", 0,
           json{{"d", 3}, {"entries", {"1", "6", "12", "8"}}});
    golden("convert f g 3 1 6 12 8", 0,
           json{{"d", "3"}, {"entries", {"1", "2"}}});
    golden("convert g f 6 1 3 3 3", 0,
           json{{"d", 6},
                {"entries", {"1", "10", "42", "98", "134", "102", "34"}}});
    golden_code("convert f q 3 1 6 12 8", 2);
}

TEST_CASE("pseudopower") {
    golden("pseudopower 4 2", 0, json{{"value", "5"}});
    golden("pseudopower 0 3", 0, json{{"value", "0"}});
    golden("pseudopower 3 1", 0, json{{"value", "6"}});
}

TEST_CASE("fibercount simplicial") {
    RunResult r = run_cli("fibercount simplicial 6 10 34");
    CHECK(r.code == 0);
    json j = first_json(r.out);
    CHECK(j["count"] == "2");
    REQUIRE(j["solutions"].size() == 2);
    CHECK(j["solutions"][0]["entries"] == json({"1", "3", "3", "3"}));
    CHECK(j["solutions"][1]["entries"] == json({"1", "3", "4"}));

    golden("fibercount simplicial 6 10 34 --is-one", 1, json{{"is_one", false}});
    golden("fibercount simplicial 9 10 10 --is-one", 0, json{{"is_one", true}});
    golden_code("fibercount simplicial 20 28 500 --node-cap 5", 3);
}

TEST_CASE("range simplicial") {
    golden("range simplicial 6 10 34 0 1000000000", 0, json{{"exists", true}});
    golden("range simplicial 6 10 34 43 43", 0, json{{"exists", true}});
    golden("range simplicial 6 10 34 0 41", 1, json{{"exists", false}});
}

TEST_CASE("phi") {
    golden("phi 15 7", 0,
           json{{"phi", "10"}, {"simplex_only", false}, {"witnesses", json::array()}});
    RunResult r = run_cli("phi 13 6");
    CHECK(r.code == 0);
    json j = first_json(r.out);
    CHECK(j["phi"] == "8");
    CHECK(j["witnesses"] == json::array({{{"r", "2"}, {"s", "3"}, {"t", "1"}}}));
    golden_code("phi 99 6", 2);
}

TEST_CASE("family trst") {
    RunResult r = run_cli("family trst 2 3 1");
    CHECK(r.code == 0);
    json j = first_json(r.out);
    CHECK(j["d"] == 6);
    CHECK(j["entries"][1] == "13");
    CHECK(j["entries"][2] == "42");
    CHECK(j["entries"][6] == "8");
}

TEST_CASE("reduce divisor") {
    RunResult r = run_cli("reduce divisor 3 4 12 --answer");
    CHECK(r.code == 0);
    json j = first_json(r.out);
    CHECK(j["a"] == "25");
    CHECK(j["b"] == "14");
    CHECK(j["answer"] == true);

    golden_code("reduce divisor 3 4 14 --answer", 1);
    golden_code("reduce divisor 3 4 20", 2); // sqrt(20) not in [3,4]
}

TEST_CASE("verify") {
    RunResult r = run_cli("verify divisor --max 60");
    CHECK(r.code == 0);
    json j = last_json(r.out);
    CHECK(j["clean"] == true);
    CHECK(j["discrepancy_count"] == 0);

    RunResult s = run_cli("verify semiprime --max 300 --seed 7");
    CHECK(s.code == 0);
    CHECK(last_json(s.out)["clean"] == true);
}

TEST_CASE("batch mode") {
    const std::string path = "cli_batch_test.txt";
    {
        std::ofstream f(path);
        f << "# comment line\n";
        f << "fibercount special 12\n";
        f << "semiprime 12\n";
        f << "pseudopower 4 2\n";
    }
    RunResult r = run_cli("--batch " + path);
    CHECK(r.code == 0); // decision-false lines do not fail a batch
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(json::parse(line) == json{{"fc", "2"}});
    std::getline(lines, line);
    CHECK(json::parse(line) == json{{"is_one", false}});
    std::getline(lines, line);
    CHECK(json::parse(line) == json{{"value", "5"}});
    std::remove(path.c_str());
}

TEST_CASE("usage errors") {
    golden_code("", 2);
    golden_code("frobnicate 1 2 3", 2);
    golden_code("pseudopower 4", 2);
    golden_code("fibercount simplicial 1 2 2", 2); // d < 2
}
