#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "copwin/cli.hpp"

using copwin::cli::run;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("solve subcommand") {
    Result r = cli({"solve", "Cl", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("kcopwin: false") != std::string::npos);
    CHECK(r.out.find("states: 32") != std::string::npos);

    r = cli({"solve", "Cl", "--k", "2", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["kcopwin"] == true);
    CHECK(j["graph"] == "Cl");
    CHECK(j["copwin_states"] == 80);
}

TEST_CASE("copnumber and dominate") {
    Result r = cli({"copnumber", "IheA@GUAo"});
    CHECK(r.code == 0);
    CHECK(r.out.find("cop_number: 3") != std::string::npos);

    r = cli({"dominate", "FhCKG", "--k", "2", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["delta"] == 1);
    CHECK(j["dominating"] == false);
    CHECK(j["witness"] == nlohmann::json::array({0, 3}));
}

TEST_CASE("dismantle hides the pair list outside json") {
    Result human = cli({"dismantle", "Bg"});
    CHECK(human.code == 0);
    CHECK(human.out.find("success: true") != std::string::npos);
    CHECK(human.out.find("order") == std::string::npos);

    Result j = cli({"dismantle", "Bg", "--format", "json"});
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["order"] == nlohmann::json::parse("[[0,1],[1,2]]"));
}

TEST_CASE("certify and match") {
    Result r = cli({"certify", "FhCKG", "--k", "1", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["greedy_verdict"] == false);
    CHECK(j["evasion_verdict"] == false);
    CHECK(j["q"] == 2);
    CHECK(j["dangerous_count"] == 7);
    CHECK(j["delta"] == 4);

    r = cli({"match", "Cl", "--k", "2", "--cop-strategy", "domset", "--format", "json"});
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["outcome"] == "captured");
    CHECK(j["end_round"].get<int>() <= 2);
    CHECK(j["rounds"].is_array());

    // domset cops require an actual dominating set of that size
    r = cli({"match", "FhCKG", "--k", "1", "--cop-strategy", "domset"});
    CHECK(r.code == 1);
    CHECK(r.err.find("dominating") != std::string::npos);
}

TEST_CASE("enumerate and formulas") {
    Result r = cli({"enumerate", "--n", "4", "--event", "kdom", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("count: 23") != std::string::npos);
    CHECK(r.out.find("total: 64") != std::string::npos);

    r = cli({"formulas", "--n", "4", "--k", "2", "--l", "1", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["first_moment"].get<double>() == doctest::Approx(3.375));
    CHECK(j["pair_domination"] == "5/2^3");
    CHECK(j["eta"] == "1/3");
}

TEST_CASE("estimate is reproducible byte for byte") {
    std::vector<std::string> args{"estimate", "--n",     "8",   "--event", "kcopwin",
                                  "--k",      "1",       "--trials", "50", "--seed", "9",
                                  "--format", "json"};
    Result a = cli(args);
    Result b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["seed"] == 9);
    CHECK(j["trials"] == 50);

    // no seed given: one is generated and reported
    Result c = cli({"estimate", "--n", "6", "--event", "universal", "--trials", "10",
                    "--format", "json"});
    CHECK(c.code == 0);
    CHECK(nlohmann::json::parse(c.out).contains("seed"));
}

TEST_CASE("sweep emits csv") {
    Result r = cli({"sweep", "--n-min", "4", "--n-max", "5", "--k", "1", "--mode", "exact"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n,p_kcopwin,p_kdom,first_moment,ratio_copwin_over_first_moment,ci_low,ci_high\n"
          "4,0.546875,0.359375,0.5,1.09375,0.546875,0.546875\n"
          "5,0.54296875,0.25,0.3125,1.7375,0.54296875,0.54296875\n");

    Result s = cli({"sweep", "--n-min", "5", "--n-max", "5", "--k", "1", "--mode", "estimate",
                    "--trials", "100", "--seed", "3"});
    CHECK(s.code == 0);
    CHECK(s.out.find("seed: 3\n") == 0);
    Result s2 = cli({"sweep", "--n-min", "5", "--n-max", "5", "--k", "1", "--mode", "estimate",
                     "--trials", "100", "--seed", "3"});
    CHECK(s.out == s2.out);

    Result bad = cli({"sweep", "--n-min", "5", "--n-max", "4", "--k", "1", "--mode", "exact"});
    CHECK(bad.code == 1);
}

TEST_CASE("batch file input") {
    std::string path = temp_file("copwin_batch.g6");
    {
        std::ofstream f(path);
        f << "Bw\nFhCKG\n";
    }
    Result r = cli({"copnumber", "--file", path, "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["cop_number"] == 1);
    CHECK(j[1]["cop_number"] == 2);

    Result csv = cli({"copnumber", "--file", path, "--format", "csv"});
    CHECK(csv.out == "graph,n,cop_number\nBw,3,1\nFhCKG,7,2\n");
    std::remove(path.c_str());
}

TEST_CASE("graph input must be given exactly once") {
    CHECK(cli({"copnumber"}).code == 1);
    CHECK(cli({"copnumber", "Bw", "--graph", "Bw"}).code == 1);
    CHECK(cli({"copnumber", "--file", temp_file("copwin_missing.g6")}).code == 1);
}

TEST_CASE("exit codes") {
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"solve", "--help"}).code == 0);
    CHECK(cli({}).code == 1);
    CHECK(cli({"nonsense"}).code == 1);
    CHECK(cli({"solve", "~~~"}).code == 1);       // n > 62
    CHECK(cli({"solve", "!!"}).code == 1);        // bad bytes
    CHECK(cli({"enumerate", "--n", "9", "--event", "kdom"}).code == 1);
    CHECK(cli({"estimate", "--n", "6", "--event", "bogus", "--trials", "5"}).code == 1);

    Result starved = cli({"solve", "Cl", "--k", "9", "--state-budget", "100"});
    CHECK(starved.code == 2);
    CHECK(starved.err.find("limit") != std::string::npos);
}

TEST_CASE("run records") {
    std::string path = temp_file("copwin_records.jsonl");
    std::remove(path.c_str());

    Result r = cli({"copnumber", "Bw", "--record", path});
    CHECK(r.code == 0);
    r = cli({"dominate", "Cl", "--k", "2", "--record", path});
    CHECK(r.code == 0);

    std::ifstream f(path);
    std::string line;
    REQUIRE(std::getline(f, line));
    auto rec = nlohmann::json::parse(line);
    CHECK(rec["command"] == "copnumber");
    CHECK(rec["version"] == "0.1.0");
    CHECK(rec["result"]["cop_number"] == 1);
    CHECK(rec.contains("duration_ms"));
    CHECK(rec.contains("params"));

    REQUIRE(std::getline(f, line));
    rec = nlohmann::json::parse(line);
    CHECK(rec["command"] == "dominate");
    CHECK(rec["result"]["delta"] == 0);
    std::remove(path.c_str());
}
