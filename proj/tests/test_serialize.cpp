#include <doctest.h>

#include <json.hpp>

#include "ramprimes/format.hpp"
#include "ramprimes/serialize.hpp"

#include "fixtures.hpp"

using namespace ramprimes;

TEST_CASE("fixed precision formatting") {
    CHECK(fixed6(1.1151660563) == "1.115166");
    CHECK(fixed6(0.0106212) == "0.010621");
    CHECK(fixed6(-0.6672538227) == "-0.667254");
    CHECK(format_number(392.0) == "392");
    CHECK(format_number(20.5) == "20.500000");
    CHECK(round6(1.1151660563) == 1.115166);
}

TEST_CASE("format names parse or get rejected") {
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK(parse_format("bfile") == OutputFormat::bfile);
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK_THROWS_AS(parse_format("yaml"), usage_error);
    CHECK_THROWS_AS(parse_format(""), usage_error);
}

TEST_CASE("the b-file rendering of the first five values") {
    auto rt = compute_ramanujan(5);
    CHECK(render_ramanujan(rt, OutputFormat::bfile) ==
          "1 2\n2 11\n3 17\n4 29\n5 41\n");
}

TEST_CASE("sequence renderings in every format") {
    auto rt = compute_ramanujan(5);

    CHECK(render_ramanujan(rt, OutputFormat::csv) ==
          "n,ramanujan_prime,prime_index\n"
          "1,2,1\n2,11,5\n3,17,7\n4,29,10\n5,41,13\n");

    CHECK(render_ramanujan(rt, OutputFormat::text) ==
          "R_1 = 2 = p_1\nR_2 = 11 = p_5\nR_3 = 17 = p_7\n"
          "R_4 = 29 = p_10\nR_5 = 41 = p_13\n");

    auto j = nlohmann::json::parse(render_ramanujan(rt, OutputFormat::json));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 5);
    CHECK(j[4]["n"] == 5);
    CHECK(j[4]["ramanujan_prime"] == 41);
    CHECK(j[4]["prime_index"] == 13);

    // keys keep the documented column order
    std::string text = render_ramanujan(rt, OutputFormat::json);
    CHECK(text.find("\"n\"") < text.find("\"ramanujan_prime\""));
    CHECK(text.find("\"ramanujan_prime\"") < text.find("\"prime_index\""));
}

TEST_CASE("report renderings") {
    CheckRun run("demo", 1, 100);
    run.record_exact(1, true);
    run.record_exact(42, false);
    std::vector<CheckReport> reports{run.report()};

    CHECK(to_text(reports[0]) ==
          "demo range=[1,100] samples=2 result=FAIL first_failure=42");

    CHECK(render_reports(reports, OutputFormat::csv) ==
          "check_id,lo,hi,passed,first_failure,samples_checked,indeterminate_count\n"
          "demo,1,100,false,42,2,0\n");

    auto j = nlohmann::json::parse(render_reports(reports, OutputFormat::json));
    REQUIRE(j.is_array());
    CHECK(j[0]["check_id"] == "demo");
    CHECK(j[0]["passed"] == false);
    CHECK(j[0]["first_failure"] == 42);
    CHECK(j[0]["samples_checked"] == 2);

    CheckRun ok("fine", 1, 1);
    ok.record_exact(1, true);
    std::vector<CheckReport> passing{ok.report()};
    CHECK(to_text(passing[0]) == "fine range=[1,1] samples=1 result=PASS");
    CHECK(render_reports(passing, OutputFormat::csv) ==
          "check_id,lo,hi,passed,first_failure,samples_checked,indeterminate_count\n"
          "fine,1,1,true,,1,0\n");
    auto jp = nlohmann::json::parse(render_reports(passing, OutputFormat::json));
    CHECK(jp[0]["first_failure"].is_null());
}

TEST_CASE("notes and indeterminates surface in text reports") {
    CheckRun run("edge", 1, 2);
    run.record(1.5, Verdict::indeterminate);
    run.set_note("needs a finer grid");
    std::string line = to_text(run.report());
    CHECK(line.find("result=FAIL") != std::string::npos);
    CHECK(line.find("first_failure=1.500000") != std::string::npos);
    CHECK(line.find("indeterminate=1") != std::string::npos);
    CHECK(line.find("note=\"needs a finer grid\"") != std::string::npos);
}

TEST_CASE("twin renderings") {
    std::vector<TwinPair> twins{{149, 151, true}, {191, 193, false}};
    CHECK(render_twins(twins, OutputFormat::csv) ==
          "p,q,both_ramanujan\n149,151,true\n191,193,false\n");

    auto j = nlohmann::json::parse(render_twins(twins, OutputFormat::json));
    CHECK(j["pairs"] == 2);
    CHECK(j["both_ramanujan"] == 1);
    CHECK(j["twins"][0]["p"] == 149);

    std::string text = render_twins(twins, OutputFormat::text);
    CHECK(text.find("(149, 151) both ramanujan\n") != std::string::npos);
    CHECK(text.find("pairs=2 both_ramanujan=1\n") != std::string::npos);

    CHECK_THROWS_AS(render_twins(twins, OutputFormat::bfile), usage_error);
}

TEST_CASE("run renderings carry the baseline column") {
    LongestRuns lr;
    lr.ramanujan = {RunKind::ramanujan, 1, 2};
    lr.non_ramanujan = {RunKind::non_ramanujan, 3, 1};
    lr.runs = {{RunKind::ramanujan, 1, 2}, {RunKind::non_ramanujan, 3, 1}};
    lr.stats = summarize_runs(lr.runs);

    std::string csv = render_runs(lr, 3, OutputFormat::csv);
    std::string baseline = fixed6(finch_expected_run(3));
    CHECK(csv == "kind,start_prime_index,length,finch_expected\n"
                 "ramanujan,1,2," + baseline + "\n"
                 "non_ramanujan,3,1," + baseline + "\n");

    auto j = nlohmann::json::parse(render_runs(lr, 3, OutputFormat::json));
    CHECK(j["first_primes"] == 3);
    CHECK(j["longest_ramanujan"]["length"] == 2);
    CHECK(j["longest_non_ramanujan"]["start_prime_index"] == 3);
    CHECK(j["run_counts_ramanujan"]["2"] == 1);
    CHECK(j["runs"].size() == 2);

    std::string text = render_runs(lr, 3, OutputFormat::text);
    CHECK(text.find("longest ramanujan run: length 2 starting at p_1 (count 1)\n") !=
          std::string::npos);
    CHECK(text.find("finch baseline for 3 primes: " + baseline + "\n") !=
          std::string::npos);

    CHECK_THROWS_AS(render_runs(lr, 3, OutputFormat::bfile), usage_error);
}

TEST_CASE("ratio renderings") {
    const auto& t = fixtures::table_1m();
    const auto& rt = fixtures::rt500();
    auto series = ratio_series(t, rt);

    std::string csv = render_ratios(t, rt, series, OutputFormat::csv);
    CHECK(csv.substr(0, csv.find('\n')) == "n,ramanujan_prime,prime_2n,ratio,epsilon");
    CHECK(csv.find("\n500,8831,7919,1.115166,0.115166\n") != std::string::npos);
    CHECK(csv.find("\n1,2,3,0.666667,-0.333333\n") != std::string::npos);

    auto j = nlohmann::json::parse(render_ratios(t, rt, series, OutputFormat::json));
    REQUIRE(j.size() == 500);
    CHECK(j[499]["ratio"] == 1.115166);
    CHECK(j[499]["prime_2n"] == 7919);

    CHECK_THROWS_AS(render_ratios(t, rt, series, OutputFormat::bfile), usage_error);
}

TEST_CASE("density renderings") {
    CHECK(render_epsilon(1000000, 36960, 0.0106212695, OutputFormat::text) ==
          "x=1000000 s=36960 epsilon=0.010621\n");
    CHECK(render_epsilon(1000000, 36960, 0.0106212695, OutputFormat::csv) ==
          "x,s,epsilon\n1000000,36960,0.010621\n");
    auto j = nlohmann::json::parse(
        render_epsilon(1000000, 36960, 0.0106212695, OutputFormat::json));
    CHECK(j["x"] == 1000000);
    CHECK(j["s"] == 36960);
    CHECK(j["epsilon"] == 0.010621);
    CHECK_THROWS_AS(render_epsilon(1, 1, 0.0, OutputFormat::bfile), usage_error);
}
