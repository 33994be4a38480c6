#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramprimes/prime_table.hpp"
#include "ramprimes/ramanujan.hpp"

namespace {

std::string g_cli;

// Runs the binary with a shell-ready argument string; returns the exit code
// and fills `out` with captured stdout (stderr is dropped unless asked for).
int run_cli(const std::string& args, std::string* out = nullptr,
            bool merge_stderr = false) {
    std::string cmd = "'" + g_cli + "' " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    std::string acc;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) acc.append(buf, n);
    int status = pclose(pipe);
    if (out) *out = acc;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& tag) {
    return "/tmp/ramprimes_cli_test_" + std::to_string(getpid()) + "_" + tag;
}

} // namespace

TEST_CASE("bfile output is byte exact") {
    std::string out;
    CHECK(run_cli("ramanujan --count 5 --format bfile", &out) == 0);
    CHECK(out == "1 2\n2 11\n3 17\n4 29\n5 41\n");
}

TEST_CASE("single row and text default") {
    std::string out;
    CHECK(run_cli("ramanujan --count 1", &out) == 0);
    CHECK(out == "R_1 = 2 = p_1\n");
}

TEST_CASE("five hundred rows of csv end at 8831") {
    std::string out;
    CHECK(run_cli("ramanujan --count 500 --format csv", &out) == 0);
    CHECK(out.substr(0, out.find('\n')) == "n,ramanujan_prime,prime_index");
    CHECK(out.find("\n500,8831,1100\n") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
    std::string a, b;
    CHECK(run_cli("stats runs --first 1100 --format csv", &a) == 0);
    CHECK(run_cli("stats runs --first 1100 --format csv", &b) == 0);
    CHECK(!a.empty());
    CHECK(a == b);

    std::string c, d;
    CHECK(run_cli("check theorem2 --n-max 200 --format json", &c) == 0);
    CHECK(run_cli("check theorem2 --n-max 200 --format json", &d) == 0);
    CHECK(c == d);
}

TEST_CASE("output lands in the requested file with the same bytes") {
    std::string streamed;
    CHECK(run_cli("ramanujan --count 20 --format csv", &streamed) == 0);

    std::string path = temp_path("table.csv");
    std::string stdout_side;
    CHECK(run_cli("ramanujan --count 20 --format csv --output " + path,
                  &stdout_side) == 0);
    CHECK(stdout_side.empty());
    CHECK(slurp(path) == streamed);
    std::remove(path.c_str());
}

TEST_CASE("checks succeed and report their verdict") {
    std::string out;
    CHECK(run_cli("check conjecture1 --n-max 1000", &out) == 0);
    CHECK(out.find("conjecture1") != std::string::npos);
    CHECK(out.find("result=PASS") != std::string::npos);
    CHECK(out.find("samples=1000") != std::string::npos);
}

TEST_CASE("check reports serialize as json") {
    std::string out;
    CHECK(run_cli("check eq1 --limit 2000 --format json", &out) == 0);
    auto j = nlohmann::json::parse(out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["check_id"] == "eq1");
    CHECK(j[0]["passed"] == true);
    CHECK(j[0]["samples_checked"] == 1700);
    CHECK(j[0]["first_failure"].is_null());
}

TEST_CASE("the twin ratio check reports its settle point") {
    std::string out;
    CHECK(run_cli("check conjecture3 --limit 1000", &out) == 0);
    CHECK(out.find("result=PASS") != std::string::npos);
    CHECK(out.find("settles at x=571") != std::string::npos);

    CHECK(run_cli("check conjecture3 --limit 1000 --pair-convention smaller", &out) ==
          0);
    CHECK(out.find("settles at x=569") != std::string::npos);

    CHECK(run_cli("check conjecture3 --limit 1000 --pair-convention middle", &out) ==
          2);
}

TEST_CASE("the inequality suite emits one csv row per sub-check") {
    std::string out;
    CHECK(run_cli("check inequalities --limit 3000 --format csv", &out) == 0);
    std::istringstream lines(out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 10); // header + nine checks
    CHECK(rows[0] ==
          "check_id,lo,hi,passed,first_failure,samples_checked,indeterminate_count");
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].find(",true,") != std::string::npos);
    CHECK(rows[1].substr(0, rows[1].find(',')) == "rosser_nlogn");
}

TEST_CASE("twin statistics match the published counts") {
    std::string out;
    CHECK(run_cli("stats twins --first 1100 --format csv", &out) == 0);
    std::istringstream lines(out);
    std::string line;
    std::size_t rows = 0, both = 0;
    std::getline(lines, line);
    CHECK(line == "p,q,both_ramanujan");
    while (std::getline(lines, line)) {
        ++rows;
        if (line.find(",true") != std::string::npos) ++both;
    }
    CHECK(rows == 186);
    CHECK(both == 70);
}

TEST_CASE("twin statistics accept an explicit bound") {
    std::string out;
    CHECK(run_cli("stats twins --limit 1000 --format json", &out) == 0);
    auto j = nlohmann::json::parse(out);

    auto table = ramprimes::PrimeTable::build(1200);
    std::uint64_t expected = 0;
    for (std::uint64_t p : table.primes())
        if (p + 2 <= 1000 && table.is_prime(p + 2)) ++expected;
    CHECK(j["pairs"] == expected);
}

TEST_CASE("run statistics expose the longest runs and the baseline") {
    std::string out;
    CHECK(run_cli("stats runs --first 1100 --format json", &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["longest_ramanujan"]["length"] == 13);
    CHECK(j["longest_ramanujan"]["start_prime_index"] == 384);
    CHECK(j["longest_non_ramanujan"]["length"] == 10);
    CHECK(j["run_counts_non_ramanujan"]["10"] == 3);
    CHECK(j["finch_expected"] == 9.436034);
}

TEST_CASE("ratio statistics quote the classic value") {
    std::string out;
    CHECK(run_cli("stats ratios --n 500 --format csv", &out) == 0);
    CHECK(out.find("\n500,8831,7919,1.115166,0.115166\n") != std::string::npos);

    std::string alias;
    CHECK(run_cli("stats ratios --n-max 500 --format csv", &alias) == 0);
    CHECK(alias == out);
}

TEST_CASE("density statistics at ten thousand") {
    std::string out;
    CHECK(run_cli("stats epsilon --limit 10000", &out) == 0);

    auto table = ramprimes::PrimeTable::build(10000);
    std::uint64_t s = ramprimes::s_value(table, 10000);
    CHECK(out == "x=10000 s=" + std::to_string(s) + " epsilon=0.015779\n");
}

TEST_CASE("usage errors exit with two") {
    CHECK(run_cli("check bogus") == 2);
    CHECK(run_cli("stats bogus") == 2);
    CHECK(run_cli("ramanujan --count 0") == 2);
    CHECK(run_cli("ramanujan") == 2);           // missing required flag
    CHECK(run_cli("") == 2);                    // missing subcommand
    CHECK(run_cli("ramanujan --count 1 --format yaml") == 2);
    CHECK(run_cli("stats twins --format bfile") == 2);
    CHECK(run_cli("check theorem2 --n-max 10 --format bfile") == 2);
    CHECK(run_cli("stats epsilon --limit 2") == 2);
}

TEST_CASE("help exits cleanly") {
    std::string out;
    CHECK(run_cli("--help", &out) == 0);
    CHECK(out.find("ramanujan") != std::string::npos);
}

TEST_CASE("resource problems exit with three") {
    CHECK(run_cli("ramanujan --count 1000 --memory-budget 1000") == 3);
    CHECK(run_cli("ramanujan --count 5 --output /nonexistent-dir/out.txt") == 3);
}

TEST_CASE("errors name the problem on stderr") {
    std::string quiet;
    CHECK(run_cli("check bogus", &quiet) == 2);
    CHECK(quiet.empty()); // nothing on stdout

    std::string merged;
    CHECK(run_cli("check bogus", &merged, true) == 2);
    CHECK(merged.find("unknown check id") != std::string::npos);
}

int cli_tests_main(int argc, char** argv) {
    std::vector<char*> pass;
    for (int i = 0; i < argc; ++i) {
        if (std::string(argv[i]) == "--cli" && i + 1 < argc) {
            g_cli = argv[++i];
            continue;
        }
        pass.push_back(argv[i]);
    }
    if (g_cli.empty()) {
        if (const char* env = std::getenv("RAMPRIMES_CLI")) g_cli = env;
    }
    if (g_cli.empty()) {
        std::fprintf(stderr, "cli_tests: pass --cli <path-to-binary>\n");
        return 1;
    }
    doctest::Context ctx(static_cast<int>(pass.size()), pass.data());
    return ctx.run();
}

int main(int argc, char** argv) { return cli_tests_main(argc, argv); }
