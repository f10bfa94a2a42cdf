#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "ghseries/rational.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

/// Runs the CLI with `args`, capturing stdout only.
RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " GHSERIES_CLI " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool ends_with(const std::string& s, const std::string& tail) {
    return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

} // namespace

TEST_CASE("compute csv ends at the desk row") {
    const auto r = run("compute --x 1 --a 1 --N 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\n4,8/5,12/5,8/5,12/5\n") != std::string::npos);
    CHECK(ends_with(r.out, "# equal=true\n"));
}

TEST_CASE("compute without a, and with a zero a_2") {
    const auto plain = run("compute --x 1 --N 3 --format csv");
    CHECK(plain.exit_code == 0);
    CHECK(plain.out.find("1,1,1,1,1\n2,2,2,2,2\n3,3,6,3,6\n") != std::string::npos);
    const auto zero = run("compute --x 1 --a 0/1 --N 3 --format csv");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out == plain.out);
}

TEST_CASE("compute json follows the report schema") {
    const auto r = run("compute --x 1 --a 1 --N 4 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "compute");
    CHECK(doc["params"]["a"] == nlohmann::json::array({"1"}));
    CHECK(doc["rows"].size() == 4);
    CHECK(doc["rows"][3][2] == "12/5");
    CHECK(doc["summary"]["equal"] == true);
    CHECK_FALSE(doc.contains("timestamp"));
    for (const auto& row : doc["rows"]) {
        for (const auto& cell : row) {
            const auto text = cell.get<std::string>();
            CHECK(ghseries::Rational::parse(text).to_string() == text);
        }
    }
    const auto stamped = nlohmann::json::parse(run("compute --N 2 --format json --timestamps").out);
    CHECK(stamped.contains("timestamp"));
}

TEST_CASE("gh-table examples") {
    const auto r = run("gh-table --x 1 --h 1/2 --N 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "n,moment,operator,genfunc,recurrence,agree\n"
          "0,1,1,1,1,true\n1,1,1,1,1,true\n2,2,2,2,2,true\n3,4,4,4,4,true\n# all_agree=true\n");

    const auto powers = nlohmann::json::parse(run("gh-table --x 2 --N 2 --format json").out);
    CHECK(powers["rows"][0][1] == "1");
    CHECK(powers["rows"][1][1] == "2");
    CHECK(powers["rows"][2][1] == "4");

    const auto at0 = nlohmann::json::parse(run("gh-table --x 0 --h 1 --N 2 --format json").out);
    CHECK(at0["rows"][2][1] == "2");
    CHECK(at0["summary"]["all_agree"] == true);

    const auto sub = run("gh-table --x 1 --h 1 --N 2 --routes recurrence,moment --format csv");
    CHECK(sub.out.rfind("n,moment,recurrence,agree\n", 0) == 0);
}

TEST_CASE("exit code 2 on input errors") {
    CHECK(run("compute --x 1/0").exit_code == 2);
    CHECK(run("compute --x abc").exit_code == 2);
    CHECK(run("compute --a 1,x").exit_code == 2);
    CHECK(run("compute --p 3 --a 1").exit_code == 2);
    CHECK(run("compute --N 0").exit_code == 2);
    CHECK(run("gh-table --routes bogus").exit_code == 2);
    CHECK(run("verify --cases 0").exit_code == 2);
    CHECK(run("compute --format xml").exit_code == 2);
    CHECK(run("").exit_code == 2);
    // exp(-t^2/2) has c_1 = 0
    CHECK(run("compute --x 0 --a -1 --N 3").exit_code == 2);
}

TEST_CASE("GHSERIES_FORMAT sets the default format") {
    const auto r = run("compute --N 2", "GHSERIES_FORMAT=csv");
    CHECK(r.out.rfind("n,x_n,x_n!", 0) == 0);
    const auto flag_wins = run("compute --N 2 --format json", "GHSERIES_FORMAT=csv");
    CHECK(flag_wins.out.front() == '{');
}

TEST_CASE("verify is deterministic and honours --cases") {
    const auto a = run("verify --seed 42 --cases 100 --format json");
    const auto b = run("verify --seed 42 --cases 100 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["summary"]["all_passed"] == true);
    CHECK(doc["rows"].size() == 5);
    for (const auto& row : doc["rows"]) {
        CHECK(row[1] == "100");
        CHECK(row[2] == "100");
    }
    CHECK(doc["params"]["ranges"].size() == 5);

    const auto one = nlohmann::json::parse(run("verify --cases 1 --format json").out);
    for (const auto& row : one["rows"]) {
        CHECK(row[1] == "1");
    }
    CHECK(run("verify --seed 7 --cases 3 --threads 1 --format csv").out ==
          run("verify --seed 7 --cases 3 --threads 3 --format csv").out);
}

TEST_CASE("bench report is well formed for N = 1") {
    const auto r = run("bench --N 1 --repeats 2 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "bench");
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][0][0] == "recurrence");
    CHECK(doc["rows"][1][0] == "genfunc");
    CHECK(doc["rows"][2][0] == "moment");
    CHECK(doc["params"]["a"] == nlohmann::json::array({"1", "1"}));
    CHECK(doc["summary"].contains("recurrence_faster_than_genfunc"));
}
