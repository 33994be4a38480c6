#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramprimes/bounds.hpp"
#include "ramprimes/prime_table.hpp"
#include "ramprimes/ramanujan.hpp"
#include "ramprimes/serialize.hpp"
#include "ramprimes/statistics.hpp"

namespace {

using namespace ramprimes;

void emit(const std::string& content, const std::string& output_path) {
    if (output_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        if (std::fflush(stdout) != 0)
            throw resource_error("failed writing to standard output");
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out)
        throw resource_error("cannot open output file: " + output_path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out)
        throw resource_error("failed writing output file: " + output_path);
}

PairConvention parse_convention(const std::string& name) {
    if (name == "larger") return PairConvention::larger;
    if (name == "smaller") return PairConvention::smaller;
    throw usage_error("unknown pair convention: " + name);
}

struct CommonOpts {
    std::string format = "text";
    std::string output;
    std::uint64_t memory_budget = PrimeTable::kDefaultMemoryBudget;

    void attach(CLI::App* sub) {
        sub->add_option("--format", format, "Output format: csv, json, bfile or text");
        sub->add_option("--output", output, "Write output to this file instead of stdout");
        sub->add_option("--memory-budget", memory_budget,
                        "Table memory budget in bytes");
    }
};

int run_ramanujan(std::uint64_t count, const CommonOpts& opts) {
    RamanujanTable rt = compute_ramanujan(count, opts.memory_budget);
    emit(render_ramanujan(rt, parse_format(opts.format)), opts.output);
    return 0;
}

int run_check(const std::string& id, std::uint64_t n_max, std::uint64_t limit,
              const std::string& convention, const CommonOpts& opts) {
    std::vector<CheckReport> reports;
    if (id == "theorem2") {
        PrimeTable table = PrimeTable::build(
            std::max(scan_bound_for(n_max), nth_prime_upper_bound(4 * n_max)),
            opts.memory_budget);
        RamanujanTable rt = compute_ramanujan_with(table, n_max);
        reports.push_back(check_theorem2(table, rt));
    } else if (id == "theorem4") {
        PrimeTable table =
            PrimeTable::build(nth_prime_upper_bound(3 * n_max), opts.memory_budget);
        reports.push_back(check_theorem4(table, n_max));
    } else if (id == "conjecture1") {
        PrimeTable table = PrimeTable::build(
            std::max(scan_bound_for(n_max), nth_prime_upper_bound(3 * n_max)),
            opts.memory_budget);
        RamanujanTable rt = compute_ramanujan_with(table, n_max);
        reports.push_back(check_conjecture1(table, rt));
    } else if (id == "conjecture3") {
        const std::uint64_t reach = limit + 2;
        const std::uint64_t n = count_for_coverage(reach);
        PrimeTable table = PrimeTable::build(std::max(scan_bound_for(n), reach),
                                             opts.memory_budget);
        RamanujanTable rt = compute_ramanujan_with(table, n);
        reports.push_back(
            conjecture3_series(table, rt, limit, parse_convention(convention)).report);
    } else if (id == "proposition1") {
        PrimeTable table = PrimeTable::build(limit, opts.memory_budget);
        reports.push_back(proposition1_verify(table, limit));
    } else if (id == "inequalities") {
        PrimeTable table = PrimeTable::build(limit, opts.memory_budget);
        reports = inequality_suite(table, limit);
    } else if (id == "eq1") {
        PrimeTable table = PrimeTable::build(limit, opts.memory_budget);
        reports.push_back(check_eq1(table, limit));
    } else {
        throw usage_error("unknown check id: " + id);
    }
    emit(render_reports(reports, parse_format(opts.format)), opts.output);
    for (const auto& r : reports)
        if (!r.passed) return 1;
    return 0;
}

int run_stats(const std::string& kind, std::uint64_t first, std::uint64_t n_max,
              std::uint64_t limit, bool limit_given, const CommonOpts& opts) {
    const OutputFormat format = parse_format(opts.format);
    if (kind == "runs") {
        const std::uint64_t reach = nth_prime_upper_bound(first);
        const std::uint64_t n = count_for_coverage(reach);
        PrimeTable table = PrimeTable::build(std::max(scan_bound_for(n), reach),
                                             opts.memory_budget);
        RamanujanTable rt = compute_ramanujan_with(table, n);
        emit(render_runs(longest_runs(table, rt, first), first, format), opts.output);
        return 0;
    }
    if (kind == "twins") {
        const std::uint64_t reach = limit_given ? limit : nth_prime_upper_bound(first);
        const std::uint64_t n = count_for_coverage(reach);
        PrimeTable table = PrimeTable::build(std::max(scan_bound_for(n), reach),
                                             opts.memory_budget);
        const std::uint64_t qlim = limit_given ? limit : table.nth_prime(first);
        RamanujanTable rt = compute_ramanujan_with(table, n);
        emit(render_twins(enumerate_twins(table, rt, qlim), format), opts.output);
        return 0;
    }
    if (kind == "ratios") {
        PrimeTable table = PrimeTable::build(
            std::max(scan_bound_for(n_max), nth_prime_upper_bound(2 * n_max)),
            opts.memory_budget);
        RamanujanTable rt = compute_ramanujan_with(table, n_max);
        emit(render_ratios(table, rt, ratio_series(table, rt), format), opts.output);
        return 0;
    }
    if (kind == "epsilon") {
        PrimeTable table = PrimeTable::build(limit, opts.memory_budget);
        emit(render_epsilon(limit, s_value(table, limit), pnt_epsilon(table, limit),
                            format),
             opts.output);
        return 0;
    }
    throw usage_error("unknown stats kind: " + kind);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramanujan primes: computation, verification and statistics"};
    app.require_subcommand(1);

    CLI::App* ram = app.add_subcommand("ramanujan", "Compute R_1..R_N");
    std::uint64_t count = 0;
    ram->add_option("--count", count, "How many Ramanujan primes to compute")
        ->required();
    CommonOpts ram_opts;
    ram_opts.attach(ram);

    CLI::App* check = app.add_subcommand(
        "check", "Verify a theorem, conjecture or inequality sweep");
    std::string check_id;
    std::uint64_t check_n_max = 1000;
    std::uint64_t check_limit = 100000;
    std::string convention = "larger";
    check->add_option("id", check_id,
                      "One of: theorem2, theorem4, conjecture1, conjecture3, "
                      "proposition1, inequalities, eq1")
        ->required();
    check->add_option("--n-max", check_n_max, "Index range for theorem/conjecture checks");
    check->add_option("--limit", check_limit, "x range for sweep checks");
    check->add_option("--pair-convention", convention,
                      "Which twin member anchors \"pair <= x\": larger or smaller");
    CommonOpts check_opts;
    check_opts.attach(check);

    CLI::App* stats = app.add_subcommand("stats", "Run, twin, ratio and density statistics");
    std::string stats_kind;
    std::uint64_t stats_first = 1100;
    std::uint64_t stats_n_max = 500;
    std::uint64_t stats_limit = 1000000;
    stats->add_option("kind", stats_kind, "One of: runs, twins, ratios, epsilon")
        ->required();
    stats->add_option("--first", stats_first, "Window: the first M primes");
    CLI::Option* stats_limit_opt =
        stats->add_option("--limit", stats_limit, "Upper bound on x");
    stats->add_option("--n-max,--n", stats_n_max, "How many ratio points");
    CommonOpts stats_opts;
    stats_opts.attach(stats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ram->parsed()) return run_ramanujan(count, ram_opts);
        if (check->parsed())
            return run_check(check_id, check_n_max, check_limit, convention, check_opts);
        return run_stats(stats_kind, stats_first, stats_n_max, stats_limit,
                         stats_limit_opt->count() > 0, stats_opts);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
