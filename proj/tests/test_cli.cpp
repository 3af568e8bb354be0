#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "graphseq/cli.hpp"

using nlohmann::json;

namespace {

struct result {
    int code;
    std::string out;
    std::string err;
};

result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = graphseq::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check reports the failing index") {
    const auto r = invoke({"check", "3,3,1,1"});
    CHECK(r.code == 1);
    CHECK(r.out.find("erdos_gallai: nongraphic EG_FAIL k=2") != std::string::npos);
    CHECK(r.out.find("rk_criterion: nongraphic RK_FAIL k=2") != std::string::npos);

    const auto ok = invoke({"check", "3,1,1,1", "--json"});
    CHECK(ok.code == 0);
    const auto j = json::parse(ok.out);
    CHECK(j["erdos_gallai"]["graphic"] == true);
    CHECK(j["erdos_gallai"]["reason"] == "EVEN_SUM_OK");
    CHECK(j["sequence"]["entries"] == json::array({3, 1, 1, 1}));
}

TEST_CASE("witness JSON for the near two-valued case") {
    const auto r = invoke({"witness", "5", "1", "7", "--json"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["case"] == "IV");
    CHECK(j["sequence"]["entries"] == json::array({5, 5, 5, 2, 1, 1, 1}));
    CHECK(j["sequence"]["run_length"] == "5^3,2,1^3");
    CHECK(j["nongraphic_certificate"] == 3);
    CHECK(j["triple"]["strict"] == true);

    const auto text = invoke({"witness", "5", "1", "7"});
    CHECK(text.out.find("sequence: 5^3,2,1^3") != std::string::npos);
    CHECK(text.out.find("case: IV") != std::string::npos);
}

TEST_CASE("bound reports both conditions and the case") {
    const auto r = invoke({"bound", "4", "2", "6", "--json"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["zz_sufficient"] == false);
    CHECK(j["sharp_sufficient"] == true);
    CHECK(j["case"] == "III");
    CHECK(j["sharp_threshold"] == 12);

    CHECK(invoke({"bound", "3", "1", "4"}).code == 1);
    CHECK(invoke({"bound", "0", "1", "4"}).code == 2);
}

TEST_CASE("realize prints sorted edges or NOT_REALIZABLE") {
    const auto r = invoke({"realize", "2,2,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 2\n1 3\n2 3\n");

    const auto j = invoke({"realize", "3,1,1,1", "--json"});
    CHECK(json::parse(j.out) == json{{"n", 4}, {"edges", {{1, 2}, {1, 3}, {1, 4}}}});

    const auto no = invoke({"realize", "3,3,1,1"});
    CHECK(no.code == 1);
    CHECK(no.out == "NOT_REALIZABLE\n");
}

TEST_CASE("two-element and uniform verdicts") {
    const auto r = invoke({"two-element", "3", "1", "4", "2", "--json"});
    CHECK(r.code == 1);
    const auto j = json::parse(r.out);
    CHECK(j["verdict"]["reason"] == "DISCRIMINANT_NEG");
    CHECK(j["discriminant"] == -2);

    CHECK(invoke({"two-element", "2", "1", "4", "2"}).code == 0);
    CHECK(invoke({"two-element", "3", "3", "5", "2"}).code == 2);
    CHECK(invoke({"uniform", "3", "4"}).code == 0);
    CHECK(invoke({"uniform", "3", "3"}).code == 1);
}

TEST_CASE("usage and domain errors exit with 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"check"}).code == 2);
    CHECK(invoke({"check", "0,1"}).code == 2);
    CHECK(invoke({"check", "3,,1"}).code == 2);
    CHECK(invoke({"witness", "3", "3", "5"}).code == 2);
    CHECK(invoke({"sweep", "--mode", "bogus", "--max-n", "3"}).code == 2);
    CHECK(invoke({"sweep", "--mode", "ground-truth", "--max-n", "9"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);

    const auto satisfied = invoke({"witness", "4", "2", "6"});
    CHECK(satisfied.code == 1);
    CHECK(satisfied.err.find("satisfies") != std::string::npos);
}

TEST_CASE("exit codes do not depend on --json") {
    const std::vector<std::vector<std::string>> cases{
        {"check", "3,3,1,1"}, {"check", "2,2,2"},      {"realize", "3,3,1,1"},      {"bound", "4", "2", "6"},
        {"bound", "5", "1", "7"}, {"witness", "5", "2", "6"}, {"witness", "4", "2", "6"}, {"two-element", "3", "1", "4", "2"},
        {"check", "0"},
    };
    for (auto args : cases) {
        const int plain = invoke(args).code;
        args.push_back("--json");
        REQUIRE(invoke(args).code == plain);
    }
}

TEST_CASE("JSON output is canonical") {
    const std::vector<std::vector<std::string>> cases{
        {"check", "5^3,2,1^3", "--json"}, {"witness", "5", "1", "7", "--json"},
        {"bound", "4", "2", "6", "--json"}, {"realize", "4,4,4,4,4", "--json"},
        {"two-element", "5", "2", "6", "4", "--json"},
    };
    for (const auto& args : cases) {
        const auto r = invoke(args);
        std::string line = r.out;
        REQUIRE(!line.empty());
        line.pop_back();
        REQUIRE(json::parse(line).dump() == line);
    }
}

TEST_CASE("sweep writes a JSON lines report") {
    const std::string path = "cli_sweep_report.jsonl";
    const auto r = invoke({"sweep", "--mode", "cases", "--max-n", "20", "--jobs", "2", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("clean") != std::string::npos);
    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    const auto j = json::parse(line);
    CHECK(j["type"] == "summary");
    CHECK(j["counts"]["triples"] == 8000);
    std::remove(path.c_str());

    const auto js = invoke({"sweep", "--mode", "sharpness", "--max-n", "12", "--json"});
    CHECK(js.code == 0);
    CHECK(json::parse(js.out)["clean"] == true);
}
