#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "splitspin/engines.hpp"

using namespace splitspin;

namespace {

struct cli_result {
    int code;
    std::string out, err;
};

cli_result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("term prints the fixed spinors") {
    CHECK(run_cli({"term", "--kind", "padovan", "--n", "2"}).out == "[1+3j; -2+2j]\n");
    CHECK(run_cli({"term", "--kind", "perrin", "--n", "0", "--format", "json"}).out ==
          "{\"c1\":{\"re\":\"3\",\"hy\":\"3\"},\"c2\":{\"re\":\"0\",\"hy\":\"2\"}}\n");
    CHECK(run_cli({"term", "--kind", "padovan", "--n", "2"}).code == 0);
}

TEST_CASE("term output is identical across the exact backends") {
    for (const char* kind : {"padovan", "perrin"}) {
        const auto reference = run_cli({"term", "--kind", kind, "--n", "37"});
        for (const char* backend : {"matpow", "det_banded"}) {
            const auto got = run_cli({"term", "--kind", kind, "--n", "37", "--backend", backend});
            CHECK(got.out == reference.out);
            CHECK(got.code == 0);
        }
    }
}

TEST_CASE("binet terms carry the approx label in text mode") {
    const auto r = run_cli({"term", "--kind", "padovan", "--n", "10", "--backend", "binet"});
    CHECK(r.out == "[12+28j; -16+21j] (approx)\n");
}

TEST_CASE("table prints one indexed spinor per line") {
    const auto r = run_cli({"table", "--kind", "perrin", "--from", "0", "--to", "2"});
    CHECK(r.out == "0\t[3+3j; 2j]\n1\t[2j; -2+3j]\n2\t[2+5j; -3+2j]\n");
}

TEST_CASE("sum prints closed form, direct sum and the equality flag") {
    const auto r = run_cli({"sum", "--kind", "padovan", "--m", "0", "--stride", "all"});
    CHECK(r.out == "closed [1+2j; -1+j]\ndirect [1+2j; -1+j]\nEQUAL\n");
    CHECK(r.code == 0);

    const auto j = run_cli({"sum", "--kind", "perrin", "--m", "3", "--stride", "odd",
                            "--format", "json"});
    const auto parsed = ordered_json::parse(j.out);
    CHECK(parsed["equal"] == true);
    CHECK(parsed["closed"] == parsed["direct"]);
}

TEST_CASE("gf lists coefficients that match term output") {
    const auto r = run_cli({"gf", "--kind", "padovan", "--count", "3"});
    CHECK(r.out == "0\t[1+2j; -1+j]\n1\t[1+2j; -1+2j]\n2\t[1+3j; -2+2j]\n");
}

TEST_CASE("egf reports closed form, series and deviation") {
    const auto r = run_cli({"egf", "--kind", "perrin", "--y", "1", "--terms", "40",
                            "--format", "json"});
    REQUIRE(r.code == 0);
    const auto parsed = ordered_json::parse(r.out);
    CHECK(parsed["max_deviation"].get<double>() < 1e-9);
    CHECK(parsed["closed"]["c1"].contains("re"));
    // poisson at y = 0 is identical to the plain evaluation
    const auto plain = run_cli({"egf", "--kind", "perrin", "--y", "0"});
    const auto poisson = run_cli({"egf", "--kind", "perrin", "--y", "0", "--poisson"});
    CHECK(plain.out.substr(0, plain.out.find("tail_bound")) ==
          poisson.out.substr(0, poisson.out.find("tail_bound")));
}

TEST_CASE("audit emits the report json and exits zero despite mismatches") {
    // json is the default product; a text table is opt-in
    const auto plain = run_cli({"audit", "--n-max", "8"});
    CHECK(plain.code == 0);
    CHECK(ordered_json::parse(plain.out).contains("identities"));
    const auto table = run_cli({"audit", "--n-max", "8", "--format", "text"});
    CHECK(table.out.find("mismatch ") != std::string::npos);

    const auto r = run_cli({"audit", "--n-max", "8", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto parsed = ordered_json::parse(r.out);
    bool mismatch_seen = false;
    for (const auto& item : parsed["identities"])
        if (item["verdict"] == "mismatch") mismatch_seen = true;
    CHECK(mismatch_seen);

    const std::string path = "audit_cli_test.json";
    const auto file_run = run_cli({"audit", "--n-max", "8", "--out", path});
    CHECK(file_run.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    ordered_json from_file;
    in >> from_file;
    CHECK(from_file["identities"].size() == parsed["identities"].size());
    std::remove(path.c_str());
}

TEST_CASE("check exits zero on agreement and reports skips") {
    const auto r = run_cli({"check", "--kind", "padovan", "--n-max", "32"});
    CHECK(r.code == 0);
    CHECK(r.out.find("agreement") != std::string::npos);
    CHECK(r.out.find("det_cereceda: skipped") != std::string::npos);

    const auto j = run_cli({"check", "--kind", "perrin", "--n-max", "16", "--backends",
                            "iter,matpow", "--format", "json"});
    const auto parsed = ordered_json::parse(j.out);
    CHECK(parsed["ok"] == true);
    CHECK(parsed["disagreement"].is_null());
}

TEST_CASE("bench writes one csv row per repetition") {
    const auto r = run_cli({"bench", "--kind", "padovan", "--n", "64", "--backends",
                            "iter,matpow", "--reps", "3"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "backend,n,rep,wall_ns,digest");
    int rows = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 6);
}

TEST_CASE("argument errors exit 2 with usage text") {
    CHECK(run_cli({"term"}).code == 2);                                  // missing --n
    CHECK(run_cli({"term", "--n", "-3"}).code == 2);                     // negative index
    CHECK(run_cli({"term", "--n", "1", "--kind", "nope"}).code == 2);    // bad kind
    CHECK(run_cli({"term", "--n", "1", "--kind", "custom"}).code == 2);  // seeds missing
    CHECK(run_cli({"term", "--n", "1", "--seeds", "1", "2", "3"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({"bench", "--n", "4", "--reps", "2"}).code == 2);      // reps below minimum
    CHECK(run_cli({"term", "--n", "1", "--s", "x"}).code == 2);          // unparsable rational
    CHECK(run_cli({"term", "--n", "1", "--s", "2", "--backend", "binet"}).code == 2);
    CHECK(run_cli({"sum", "--m", "2", "--s", "2"}).code == 2);
    CHECK(run_cli({"egf", "--y", "1", "--t", "3"}).code == 2);
    const auto usage = run_cli({"term"});
    CHECK(usage.err.find("Usage") != std::string::npos);
}

TEST_CASE("runtime errors exit 1, as json when requested") {
    const auto r = run_cli({"term", "--kind", "padovan", "--n", "4", "--backend", "det_cereceda"});
    CHECK(r.code == 1);
    const auto j = run_cli({"term", "--kind", "padovan", "--n", "4", "--backend", "det_cereceda",
                            "--format", "json"});
    CHECK(j.code == 1);
    const auto parsed = ordered_json::parse(j.err);
    CHECK(parsed["error"]["type"] == "internal");
}

TEST_CASE("help exits zero") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("splitspin") != std::string::npos);
}

TEST_CASE("rational parameters and custom seeds flow through") {
    const auto r = run_cli({"term", "--kind", "padovan", "--n", "6", "--s", "1/2", "--t", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find('/') != std::string::npos);

    const auto c = run_cli({"term", "--kind", "custom", "--seeds", "2", "1", "3", "--n", "5",
                            "--backend", "det_cereceda"});
    CHECK(c.code == 0);
    const auto iter_c = run_cli({"term", "--kind", "custom", "--seeds", "2", "1", "3", "--n", "5"});
    CHECK(c.out == iter_c.out);
}
