#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "wps/cli.hpp"
#include "wps/io.hpp"

using namespace wps;

namespace {

struct CliResult {
    int rc;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int rc = run_cli(args, out, err);
    return {rc, out.str(), err.str()};
}

} // namespace

TEST_CASE("integer list parsing") {
    CHECK(parse_uint_list("2, 3,4") == std::vector<std::uint32_t>{2, 3, 4});
    CHECK(parse_uint_list("7") == std::vector<std::uint32_t>{7});
    CHECK_THROWS_AS(parse_uint_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_uint_list("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_uint_list("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_uint_list("-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_uint_list("4294967296"), std::invalid_argument);
    CHECK_THROWS_AS(parse_uint_list("99999999999999999999"), std::invalid_argument);
}

TEST_CASE("point and weight wire formats") {
    CHECK(parse_weights("1,1,2,4") == Weights({1, 1, 2, 4}));
    CHECK(format_weights(Weights({1, 1, 2, 4})) == "1,1,2,4");

    auto f5 = make_field(5, 1);
    const auto coords = parse_point("0,0,1,2", *f5);
    REQUIRE(coords.size() == 4);
    CHECK(format_point(coords) == "0,0,1,2");
    CHECK_THROWS_AS(parse_point("5,0", *f5), std::invalid_argument);
    CHECK_THROWS_AS(parse_point("1,a", *f5), std::invalid_argument);
}

TEST_CASE("census serialization") {
    auto census = enumerate_space(make_field(2, 1), Weights({1, 1}));
    const auto j = census_json(census);
    CHECK(j["q"] == 2);
    CHECK(j["p"] == 2);
    CHECK(j["k"] == 1);
    CHECK(j["weights"] == nlohmann::ordered_json({1, 1}));
    CHECK(j["count"] == 3);
    CHECK(j["points"] == nlohmann::ordered_json({"0,1", "1,0", "1,1"}));
    CHECK(j["charts"] == nlohmann::ordered_json({{2}, {2}}));
    CHECK(census_csv(census) == "point\n\"0,1\"\n\"1,0\"\n\"1,1\"\n");
}

TEST_CASE("fiber report serialization") {
    const FiberReport r = reproduce_counterexample();
    const auto j = fiber_report_json(r);
    CHECK(j["q"] == 5);
    CHECK(j["p"] == 5);
    CHECK(j["k"] == 1);
    CHECK(j["target_weights"] == nlohmann::ordered_json({1, 1, 2, 4}));
    CHECK(j["i"] == 2);
    CHECK(j["point"] == "0,0,1,2");
    CHECK(j["delta_P"] == 2);
    CHECK(j["delta_iP"] == 4);
    CHECK(j["brute"] == 1);
    CHECK(j["formula"] == 1);
    CHECK(j["old_formula"] == 2);
    CHECK(j["hypothesis"] == false);
    CHECK(j["match"] == true);
    CHECK(j["old_match"] == false);

    CHECK(fiber_report_csv_header() ==
          "q,p,k,target_weights,i,point,delta_P,delta_iP,brute,formula,old_formula,"
          "hypothesis,match,old_match");
    CHECK(fiber_report_csv_row(r) ==
          "5,5,1,\"1,1,2,4\",2,\"0,0,1,2\",2,4,1,1,2,false,true,false");
}

TEST_CASE("sweep serialization parses back") {
    SweepConfig cfg;
    cfg.q_list = {5};
    cfg.n_min = cfg.n_max = 1;
    cfg.weight_max = 2;
    const SweepReport report = run_sweep(cfg);

    const auto j = nlohmann::json::parse(sweep_report_json(report));
    REQUIRE(j.contains("cases"));
    REQUIRE(j.contains("totals"));
    REQUIRE(j.contains("mismatches"));
    CHECK(j["cases"].size() == report.totals.cases);
    CHECK(j["totals"]["cases"] == report.totals.cases);
    CHECK(j["totals"]["matches"] == report.totals.matches);
    CHECK(j["totals"]["mismatches"] == 0);
    CHECK(j["totals"]["old_formula_mismatches"] == report.totals.old_formula_mismatches);
    CHECK(j["mismatches"].empty());

    const std::string csv = sweep_report_csv(report);
    CHECK(csv.rfind(fiber_report_csv_header() + "\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + report.cases.size());
}

TEST_CASE("argument parsing fills the documented defaults") {
    unsetenv("WPS_BUDGET");
    const CliInvocation count = parse_args({"count", "--p", "2", "--weights", "1,1"});
    CHECK(count.cmd == Subcommand::count);
    CHECK(count.p == 2);
    CHECK(count.k == 1);
    CHECK(count.weights == "1,1");
    CHECK(count.format == "text");
    CHECK(count.budget == kDefaultBudget);

    const CliInvocation fiber = parse_args(
        {"fiber", "--p", "5", "--weights", "1,1,2,4", "--i", "2", "--point", "0,0,1,2"});
    CHECK(fiber.cmd == Subcommand::fiber);
    CHECK(fiber.i == 2);
    CHECK(fiber.point == "0,0,1,2");
    CHECK(fiber.format == "json");

    const CliInvocation sweep = parse_args(
        {"verify-lemma", "--q-list", "2,3,4,5,7", "--n-max", "2", "--weight-max", "6"});
    CHECK(sweep.cmd == Subcommand::verify_lemma);
    CHECK(sweep.q_list == std::vector<std::uint32_t>{2, 3, 4, 5, 7});
    CHECK(sweep.n_min == 1);
    CHECK(sweep.n_max == 2);
    CHECK(sweep.weight_max == 6);
    CHECK(sweep.mode == "exhaustive");
    CHECK(sweep.format == "json");

    const CliInvocation sampled = parse_args({"verify-lemma", "--mode", "sampled", "--samples",
                                              "50", "--seed", "42", "--jobs", "4"});
    CHECK(sampled.mode == "sampled");
    CHECK(sampled.samples == 50);
    CHECK(sampled.seed == 42);
    CHECK(sampled.jobs == 4);
}

TEST_CASE("argument parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_args({}), CliUsageError);
    CHECK_THROWS_AS(parse_args({"frobnicate"}), CliUsageError);
    CHECK_THROWS_AS(parse_args({"count", "--weights", "1,1"}), CliUsageError);
    CHECK_THROWS_AS(parse_args({"count", "--p", "2"}), CliUsageError);
    CHECK_THROWS_AS(parse_args({"count", "--p", "2", "--weights", "1,1", "--format", "xml"}),
                    CliUsageError);
    CHECK_THROWS_AS(parse_args({"count", "--p", "2", "--weights", "1,1", "--bogus"}),
                    CliUsageError);
    CHECK_THROWS_AS(parse_args({"verify-lemma", "--mode", "random"}), CliUsageError);
}

TEST_CASE("gcd-identity flag rules") {
    const CliInvocation single =
        parse_args({"gcd-identity", "--a", "2", "--d", "4", "--m", "4"});
    CHECK(single.triple_given);
    CHECK_FALSE(single.max_given);
    CHECK(single.a == 2);
    CHECK(single.d == 4);
    CHECK(single.m == 4);

    const CliInvocation swept = parse_args({"gcd-identity", "--max", "20"});
    CHECK(swept.max_given);
    CHECK(swept.max == 20);

    CHECK_THROWS_AS(parse_args({"gcd-identity"}), CliUsageError);
    CHECK_THROWS_AS(parse_args({"gcd-identity", "--a", "2"}), CliUsageError);
    CHECK_THROWS_AS(parse_args({"gcd-identity", "--a", "2", "--d", "4"}), CliUsageError);
    CHECK_THROWS_AS(parse_args({"gcd-identity", "--max", "10", "--a", "1"}), CliUsageError);
    CHECK_THROWS_AS(parse_args({"gcd-identity", "--max", "0"}), CliUsageError);
    CHECK_THROWS_AS(parse_args({"gcd-identity", "--max", "501"}), CliUsageError);
}

TEST_CASE("budget resolution order") {
    unsetenv("WPS_BUDGET");
    CHECK(parse_args({"count", "--p", "2", "--weights", "1,1"}).budget == kDefaultBudget);

    setenv("WPS_BUDGET", "123", 1);
    CHECK(parse_args({"count", "--p", "2", "--weights", "1,1"}).budget == 123);
    CHECK(parse_args({"count", "--p", "2", "--weights", "1,1", "--budget", "77"}).budget == 77);

    setenv("WPS_BUDGET", "12x", 1);
    CHECK_THROWS_AS(parse_args({"count", "--p", "2", "--weights", "1,1"}), CliUsageError);
    setenv("WPS_BUDGET", "", 1);
    CHECK_THROWS_AS(parse_args({"count", "--p", "2", "--weights", "1,1"}), CliUsageError);
    unsetenv("WPS_BUDGET");
}

TEST_CASE("help output") {
    const CliInvocation top = parse_args({"--help"});
    CHECK(top.cmd == Subcommand::help);
    CHECK(top.help_text.find("count") != std::string::npos);
    CHECK(top.help_text.find("verify-lemma") != std::string::npos);

    const CliInvocation sub = parse_args({"fiber", "--help"});
    CHECK(sub.cmd == Subcommand::help);
    CHECK(sub.help_text.find("--point") != std::string::npos);

    const CliResult r = cli({"--help"});
    CHECK(r.rc == 0);
    CHECK_FALSE(r.out.empty());

    const CliResult bare = cli({});
    CHECK(bare.rc == 2);
    CHECK(bare.out.empty());
    CHECK(bare.err.rfind("error:", 0) == 0);
}

TEST_CASE("count subcommand") {
    const CliResult text = cli({"count", "--p", "2", "--weights", "1,1"});
    CHECK(text.rc == 0);
    CHECK(text.out == "3\n");
    CHECK(text.err.empty());

    const CliResult ext = cli({"count", "--p", "2", "--k", "2", "--weights", "3,5"});
    CHECK(ext.rc == 0);
    CHECK(ext.out == "5\n");

    const CliResult json = cli({"count", "--p", "5", "--weights", "1,1,2,4", "--format", "json"});
    CHECK(json.rc == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["q"] == 5);
    CHECK(j["weights"] == nlohmann::json({1, 1, 2, 4}));
    CHECK(j["count"] == 156);

    CHECK(cli({"count", "--p", "4", "--weights", "1,1"}).rc == 2);
    CHECK(cli({"count", "--p", "5", "--weights", "1,0"}).rc == 2);
}

TEST_CASE("enumerate subcommand") {
    const CliResult json = cli({"enumerate", "--p", "2", "--weights", "1,1"});
    CHECK(json.rc == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["points"] == nlohmann::json({"0,1", "1,0", "1,1"}));
    CHECK(j["charts"] == nlohmann::json({{2}, {2}}));

    const CliResult csv = cli({"enumerate", "--p", "2", "--weights", "1,1", "--format", "csv"});
    CHECK(csv.rc == 0);
    CHECK(csv.out == "point\n\"0,1\"\n\"1,0\"\n\"1,1\"\n");

    const CliResult text = cli({"enumerate", "--p", "2", "--weights", "1,1", "--format", "text"});
    CHECK(text.rc == 0);
    CHECK(text.out == "0,1\n1,0\n1,1\n");

    const CliResult capped =
        cli({"enumerate", "--p", "7", "--weights", "1,2,3", "--budget", "100"});
    CHECK(capped.rc == 2);
    CHECK(capped.err.find("budget") != std::string::npos);
}

TEST_CASE("fiber subcommand") {
    const std::vector<std::string> base = {"fiber",     "--p",     "5", "--weights", "1,1,2,4",
                                           "--i",       "2",       "--point", "0,0,1,2"};
    const CliResult json = cli(base);
    CHECK(json.rc == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["brute"] == 1);
    CHECK(j["formula"] == 1);
    CHECK(j["old_formula"] == 2);
    CHECK(j["match"] == true);
    CHECK(j["old_match"] == false);

    auto with_format = [&](const std::string& f) {
        auto args = base;
        args.push_back("--format");
        args.push_back(f);
        return cli(args);
    };
    const CliResult text = with_format("text");
    CHECK(text.rc == 0);
    CHECK(text.out.find("brute=1 formula=1 old=2") != std::string::npos);
    CHECK(text.out.find("match=true old_match=false") != std::string::npos);

    const CliResult csv = with_format("csv");
    CHECK(csv.rc == 0);
    CHECK(csv.out == fiber_report_csv_header() + "\n" +
                         "5,5,1,\"1,1,2,4\",2,\"0,0,1,2\",2,4,1,1,2,false,true,false\n");

    // a representative with a unit at i never exists for this class
    const CliResult outside =
        cli({"fiber", "--p", "5", "--weights", "4,2", "--i", "0", "--point", "2,1"});
    CHECK(outside.rc == 2);
    CHECK(outside.err.rfind("error:", 0) == 0);

    const CliResult badpoint =
        cli({"fiber", "--p", "5", "--weights", "4,2", "--i", "0", "--point", "5,1"});
    CHECK(badpoint.rc == 2);
}

TEST_CASE("verify-lemma subcommand") {
    const std::vector<std::string> base = {"verify-lemma", "--q-list", "5",
                                           "--n-max", "1", "--weight-max", "2"};
    auto with = [&](std::initializer_list<std::string> extra) {
        auto args = base;
        args.insert(args.end(), extra);
        return cli(args);
    };

    const CliResult text = with({"--format", "text"});
    CHECK(text.rc == 0);
    CHECK(text.out.rfind("cases=", 0) == 0);
    CHECK(text.out.find(" mismatches=0 ") != std::string::npos);

    const CliResult json = with({});
    CHECK(json.rc == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["totals"]["mismatches"] == 0);
    CHECK(j["totals"]["cases"] == j["cases"].size());

    const CliResult parallel = with({"--jobs", "4"});
    CHECK(parallel.out == json.out);

    const CliResult csv = with({"--format", "csv"});
    CHECK(csv.rc == 0);
    CHECK(csv.out.rfind(fiber_report_csv_header() + "\n", 0) == 0);

    const CliResult sampled = cli({"verify-lemma", "--q-list", "2,3", "--n-min", "2", "--n-max",
                                   "2", "--weight-max", "2", "--mode", "sampled", "--samples",
                                   "10", "--seed", "7", "--format", "text"});
    CHECK(sampled.rc == 0);
    CHECK(sampled.out.find(" mismatches=0 ") != std::string::npos);
}

TEST_CASE("counterexample subcommand") {
    const CliResult text = cli({"counterexample"});
    CHECK(text.rc == 0);
    CHECK(text.out.find("target weights 1,1,2,4 over F_5, i=2, point 0,0,1,2") !=
          std::string::npos);
    CHECK(text.out.find("brute=1 formula=1 old=2") != std::string::npos);
    CHECK(text.out.find("hypothesis=false") != std::string::npos);

    const CliResult json = cli({"counterexample", "--format", "json"});
    CHECK(json.rc == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["match"] == true);
    CHECK(j["old_match"] == false);

    const CliResult shifted = cli({"counterexample", "--a0", "2", "--a1", "3"});
    CHECK(shifted.rc == 0);
    CHECK(shifted.out.find("target weights 2,3,2,4") != std::string::npos);
    CHECK(shifted.out.find("match=true") != std::string::npos);
}

TEST_CASE("gcd-identity subcommand") {
    const CliResult single = cli({"gcd-identity", "--a", "2", "--d", "4", "--m", "4"});
    CHECK(single.rc == 0); // the failing triple is not coprime, so no violation is claimed
    const auto j = nlohmann::json::parse(single.out);
    CHECK(j["coprime"] == false);
    CHECK(j["holds"] == false);
    REQUIRE(j["witnesses"].is_array());
    bool saw_two = false;
    for (const auto& w : j["witnesses"]) {
        if (w["ell"] == 2) {
            saw_two = true;
            CHECK(w["lhs"] == 0);
            CHECK(w["rhs"] == 1);
        }
    }
    CHECK(saw_two);

    const CliResult coprime = cli({"gcd-identity", "--a", "12", "--d", "35", "--m", "5"});
    CHECK(coprime.rc == 0);
    const auto cj = nlohmann::json::parse(coprime.out);
    CHECK(cj["coprime"] == true);
    CHECK(cj["holds"] == true);

    const CliResult swept = cli({"gcd-identity", "--max", "20"});
    CHECK(swept.rc == 0);
    const auto sj = nlohmann::json::parse(swept.out);
    CHECK(sj["max"] == 20);
    CHECK(sj["violations"] == 0);
    CHECK(sj["all_hold"] == true);
    CHECK(sj["coprime_triples"] > 0);
    CHECK(sj["first_violations"].empty());

    const CliResult text = cli({"gcd-identity", "--max", "20", "--format", "text"});
    CHECK(text.rc == 0);
    CHECK(text.out.find("all_hold=true") != std::string::npos);
}

TEST_CASE("galois-check subcommand") {
    const CliResult json = cli({"galois-check", "--p", "5", "--weights", "1,1"});
    CHECK(json.rc == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["q"] == 5);
    CHECK(j["base_count"] == 6);
    CHECK(j["fixed_count"] == 6);
    CHECK(j["equal"] == true);

    const CliResult text =
        cli({"galois-check", "--p", "2", "--k", "2", "--weights", "2,4", "--format", "text"});
    CHECK(text.rc == 0);
    CHECK(text.out == "base_count=5 fixed_count=5 equal=true\n");
}
