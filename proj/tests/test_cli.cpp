#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "staircase/cli.hpp"

using namespace staircase;
using cli::CommandResult;
using nlohmann::json;

static CommandResult run_cli(std::vector<std::string> args) { return cli::run(args); }

TEST_CASE("avoid count") {
    CommandResult r = run_cli({"avoid", "count", "--pattern", "1324", "--n", "5"});
    CHECK(r.exit_code == 0);
    CHECK(r.command == "avoid count");
    CHECK(r.output["count"] == "103");
    CHECK(r.inputs["n"] == 5);
    CHECK(r.elapsed_ms >= 0);
}

TEST_CASE("usage errors exit with 2 and a synopsis") {
    CHECK(run_cli({"avoid", "count"}).exit_code == 2);  // missing --n
    CHECK(run_cli({"nonsense"}).exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);
    CommandResult r = run_cli({"avoid", "count"});
    CHECK(r.output.contains("synopsis"));
}

TEST_CASE("domain errors exit with 1 and a reason") {
    CommandResult r = run_cli({"grid", "--perm", "1324"});
    CHECK(r.exit_code == 1);
    CHECK(r.output.contains("error"));
    CHECK(run_cli({"avoid", "count", "--pattern", "1124", "--n", "3"}).exit_code == 1);
}

TEST_CASE("grid emits a valid gridding") {
    CommandResult r = run_cli({"grid", "--perm", "2134"});
    CHECK(r.exit_code == 0);
    CHECK(r.output["valid"] == true);
    CHECK(r.output["perm"]["values"] == json::array({2, 1, 3, 4}));
    CHECK(r.output["labels"][0][1] == "Av213");
}

TEST_CASE("domino count matches its formula") {
    CommandResult r = run_cli({"domino", "count", "--n", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.output["count"] == "22");
    CHECK(r.output["formula"] == "22");
    CHECK(r.output["match"] == true);
}

TEST_CASE("domino stats") {
    CommandResult r = run_cli({"domino", "stats", "--n", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.output["top_leaf_total"] == "25");
    CHECK(r.output["match"] == true);
    // exact rationals as p/q strings
    std::string mean = r.output["expected_leaves"].get<std::string>();
    CHECK(mean.find('/') != std::string::npos);
}

TEST_CASE("arch roundtrip") {
    CommandResult r = run_cli({"arch", "roundtrip", "--n", "4"});
    CHECK(r.exit_code == 0);
    CHECK(r.output["ok"] == true);
    CHECK(r.output["systems"] == 14);
    CHECK(r.output["pattern_free_configurations"] == 91);
}

TEST_CASE("series output and minimal-polynomial checks") {
    CommandResult r = run_cli({"series", "--target", "domino", "--order", "6", "--check-minpoly"});
    CHECK(r.exit_code == 0);
    json c = r.output["coefficients"];
    CHECK(c.size() == 7);
    CHECK(c[3] == "22");
    CHECK(r.output["checks"]["cubic"] == true);
    CHECK(r.output["checks"]["rejected_quadratic"] == false);

    CommandResult m = run_cli({"series", "--target", "leaves", "--order", "6"});
    CHECK(m.exit_code == 0);
    CHECK(m.output["coefficients"][2].is_array());

    CommandResult s = run_cli({"series", "--target", "split", "--order", "6", "--check-minpoly"});
    CHECK(s.output["checks"]["row_sums_match_domino_counts"] == true);

    CHECK(run_cli({"series", "--target", "bogus", "--order", "3"}).exit_code == 2);
}

TEST_CASE("series cache round trip") {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "staircase-cache-test";
    std::filesystem::create_directories(dir);
    setenv("STAIRCASE_CACHE_DIR", dir.c_str(), 1);
    CommandResult first = run_cli({"series", "--target", "domino", "--order", "5"});
    CHECK(std::filesystem::exists(dir / "series-domino-5.json"));
    CommandResult second = run_cli({"series", "--target", "domino", "--order", "5"});
    CHECK(first.output["coefficients"] == second.output["coefficients"]);
    unsetenv("STAIRCASE_CACHE_DIR");
    std::filesystem::remove_all(dir);
}

TEST_CASE("bounds upper") {
    CommandResult r = run_cli({"bounds", "upper", "--n", "5"});
    CHECK(r.exit_code == 0);
    CHECK(r.output["bound"] == "27/2");
    CHECK(r.output["injective"] == true);
}

TEST_CASE("bounds lower --simple") {
    CommandResult r = run_cli({"bounds", "lower", "--simple"});
    CHECK(r.exit_code == 0);
    CHECK(r.output["bound"] == "81/8");
    CHECK(r.output["identity_ok"] == true);
    CHECK(r.output["p_1"] == "11218833266937680679613920");
}

TEST_CASE("bounds lower --certify") {
    CommandResult r = run_cli({"bounds", "lower", "--certify"});
    CHECK(r.exit_code == 0);
    CHECK(r.output["valid"] == true);
    double bound = r.output["bound"].get<double>();
    CHECK(bound == doctest::Approx(10.271012).epsilon(1e-5));
    CHECK(r.output["alpha"].get<std::string>().find('/') != std::string::npos);

    // parameters from a file
    std::filesystem::path f = std::filesystem::temp_directory_path() / "staircase-params.json";
    {
        std::ofstream out(f);
        out << R"({"gamma": 0.951509, "kappa": 0.496339, "z0": 0.097361383})";
    }
    CommandResult r2 = run_cli({"bounds", "lower", "--certify", "--params", f.string()});
    CHECK(r2.exit_code == 0);
    CHECK(r2.output["bound"].get<double>() == doctest::Approx(bound).epsilon(1e-12));
    std::filesystem::remove(f);

    // an illegal z0 is a domain failure
    std::filesystem::path bad = std::filesystem::temp_directory_path() / "staircase-bad.json";
    {
        std::ofstream out(bad);
        out << R"({"z0": 0.9})";
    }
    CHECK(run_cli({"bounds", "lower", "--certify", "--params", bad.string()}).exit_code == 1);
    std::filesystem::remove(bad);
}

TEST_CASE("bounds lower flag exclusivity is a usage error") {
    CHECK(run_cli({"bounds", "lower"}).exit_code == 2);
    CHECK(run_cli({"bounds", "lower", "--simple", "--certify"}).exit_code == 2);
}

TEST_CASE("high precision certification agrees") {
    CommandResult r64 = run_cli({"--precision", "64", "bounds", "lower", "--certify"});
    CommandResult r128 = run_cli({"--precision", "128", "bounds", "lower", "--certify"});
    CHECK(r64.exit_code == 0);
    CHECK(r128.exit_code == 0);
    CHECK(r64.output["bound"].get<double>() ==
          doctest::Approx(r128.output["bound"].get<double>()).epsilon(1e-9));
}

TEST_CASE("optimize with a tiny budget still certifies") {
    CommandResult r =
        run_cli({"--seed", "3", "bounds", "lower", "--optimize", "--budget", "60"});
    CHECK(r.exit_code == 0);
    CHECK(r.output["valid"] == true);
    CHECK(r.output["bound"].get<double>() > 10.27);
}

TEST_CASE("printer emits one-line JSON, or indented with --pretty") {
    std::ostringstream plain, pretty;
    CHECK(cli::run_and_print({"domino", "count", "--n", "2"}, plain) == 0);
    CHECK(cli::run_and_print({"--pretty", "domino", "count", "--n", "2"}, pretty) == 0);
    json a = json::parse(plain.str()), b = json::parse(pretty.str());
    CHECK(a == b);
    CHECK(plain.str().find('\n') == plain.str().size() - 1);
    CHECK(pretty.str().find('\n') < pretty.str().size() - 1);
    CHECK(a["command"] == "domino count");
    CHECK(!a["inputs"].contains("__pretty"));
}
