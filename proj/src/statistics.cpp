#include "ramprimes/statistics.hpp"

#include <cmath>
#include <string>

namespace ramprimes {

namespace {

void require_table_limit(const PrimeTable& table, std::uint64_t x, const char* who) {
    if (x > table.limit())
        throw resource_error(std::string(who) + ": needs primality data to " +
                             std::to_string(x) + ", table stops at " +
                             std::to_string(table.limit()));
}

void require_ramanujan_coverage(const RamanujanTable& rt, std::uint64_t x,
                                const char* who) {
    if (rt.count() == 0 || rt.largest() < x)
        throw resource_error(std::string(who) +
                             ": needs Ramanujan classification to " +
                             std::to_string(x) + ", table stops at " +
                             std::to_string(rt.count() ? rt.largest() : 0));
}

} // namespace

std::vector<bool> classify_first_primes(const PrimeTable& table,
                                        const RamanujanTable& rt,
                                        std::uint64_t m) {
    if (table.prime_count() < m)
        throw resource_error("classify_first_primes: table holds " +
                             std::to_string(table.prime_count()) +
                             " primes, needs " + std::to_string(m));
    std::vector<bool> out(m);
    if (m == 0) return out;
    require_ramanujan_coverage(rt, table.nth_prime(m), "classify_first_primes");
    for (std::uint64_t i = 0; i < m; ++i)
        out[i] = rt.is_ramanujan(table.nth_prime(i + 1));
    return out;
}

std::vector<RunRecord> decompose_runs(const std::vector<bool>& classification) {
    std::vector<RunRecord> runs;
    std::size_t i = 0;
    while (i < classification.size()) {
        std::size_t j = i;
        while (j < classification.size() && classification[j] == classification[i]) ++j;
        runs.push_back({classification[i] ? RunKind::ramanujan : RunKind::non_ramanujan,
                        static_cast<std::uint64_t>(i + 1),
                        static_cast<std::uint64_t>(j - i)});
        i = j;
    }
    return runs;
}

RunStats summarize_runs(const std::vector<RunRecord>& runs) {
    RunStats stats;
    for (const auto& run : runs) {
        if (run.kind == RunKind::ramanujan) {
            stats.run_counts_ramanujan[run.length] += 1;
            stats.longest_ramanujan = std::max(stats.longest_ramanujan, run.length);
        } else {
            stats.run_counts_non_ramanujan[run.length] += 1;
            stats.longest_non_ramanujan = std::max(stats.longest_non_ramanujan, run.length);
        }
    }
    return stats;
}

LongestRuns longest_runs(const PrimeTable& table, const RamanujanTable& rt,
                         std::uint64_t m) {
    if (m < 1)
        throw usage_error("longest_runs: m must be at least 1");
    LongestRuns out{{RunKind::ramanujan, 0, 0}, {RunKind::non_ramanujan, 0, 0}, {}, {}};
    out.runs = decompose_runs(classify_first_primes(table, rt, m));
    out.stats = summarize_runs(out.runs);
    for (const auto& run : out.runs) {
        RunRecord& best =
            run.kind == RunKind::ramanujan ? out.ramanujan : out.non_ramanujan;
        if (run.length > best.length) best = run;
    }
    return out;
}

double finch_expected_run(std::uint64_t n) {
    if (n < 1)
        throw usage_error("finch_expected_run: n must be at least 1");
    constexpr double gamma = 0.5772156649;
    return (std::log(static_cast<double>(n)) + gamma) / std::log(2.0) - 1.5;
}

std::vector<TwinPair> enumerate_twins(const PrimeTable& table,
                                      const RamanujanTable& rt,
                                      std::uint64_t limit) {
    std::vector<TwinPair> out;
    if (limit < 5) return out;
    require_table_limit(table, limit, "enumerate_twins");
    require_ramanujan_coverage(rt, limit, "enumerate_twins");
    for (std::uint64_t p : table.primes()) {
        if (p + 2 > limit) break;
        if (!table.is_prime(p + 2)) continue;
        out.push_back({p, p + 2, rt.is_ramanujan(p) && rt.is_ramanujan(p + 2)});
    }
    return out;
}

CheckReport proposition1_verify(const PrimeTable& table, std::uint64_t limit) {
    if (limit < 7)
        throw usage_error("proposition1_verify: limit must be at least 7");
    require_table_limit(table, limit, "proposition1_verify");
    CheckRun run("proposition1", 7, static_cast<double>(limit));
    for (std::uint64_t p : table.primes()) {
        if (p + 2 > limit) break;
        if (p <= 5 || !table.is_prime(p + 2)) continue;
        run.record_exact(static_cast<double>(p),
                         s_value(table, p + 2) == s_value(table, p) + 1);
    }
    return run.report();
}

Conjecture3Result conjecture3_series(const PrimeTable& table,
                                     const RamanujanTable& rt,
                                     std::uint64_t xmax,
                                     PairConvention convention) {
    if (xmax < 571)
        throw usage_error("conjecture3_series: xmax must be at least 571");
    const bool by_smaller = convention == PairConvention::smaller;
    const std::uint64_t reach = xmax + (by_smaller ? 2 : 0);
    require_table_limit(table, reach, "conjecture3_series");
    require_ramanujan_coverage(rt, reach, "conjecture3_series");

    Conjecture3Result result;
    CheckRun run("conjecture3", 571, static_cast<double>(xmax));
    std::uint64_t total = 0;
    std::uint64_t both = 0;
    std::uint64_t last_violation = 0;
    for (std::uint64_t x = 3; x <= xmax; ++x) {
        const bool event = by_smaller
                               ? table.is_prime(x) && table.is_prime(x + 2)
                               : x >= 5 && table.is_prime(x) && table.is_prime(x - 2);
        if (event) {
            const std::uint64_t p = by_smaller ? x : x - 2;
            ++total;
            if (rt.is_ramanujan(p) && rt.is_ramanujan(p + 2)) ++both;
            result.series.push_back({x, total, both,
                                     static_cast<double>(both) / static_cast<double>(total)});
        }
        const bool holds = total > 0 && 4 * both > total;
        if (!holds && total > 0) last_violation = x;
        if (x >= 571) run.record_exact(static_cast<double>(x), holds);
    }
    result.settle_point = last_violation + 1;
    run.set_note("settles at x=" + std::to_string(result.settle_point) + " under " +
                 (by_smaller ? "smaller" : "larger") + "-member counting");
    result.report = run.report();
    return result;
}

std::uint64_t conjecture3_settle_point(const PrimeTable& table,
                                       const RamanujanTable& rt,
                                       std::uint64_t xmax,
                                       PairConvention convention) {
    return conjecture3_series(table, rt, xmax, convention).settle_point;
}

} // namespace ramprimes
