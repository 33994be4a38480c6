#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ramprimes/check_report.hpp"
#include "ramprimes/prime_table.hpp"
#include "ramprimes/ramanujan.hpp"

namespace ramprimes {

// Run-length machinery over the classification of consecutive primes as
// Ramanujan / non-Ramanujan.

enum class RunKind { ramanujan, non_ramanujan };

struct RunRecord {
    RunKind kind;
    std::uint64_t start_prime_index; // 1-based index of the run's first prime
    std::uint64_t length;
};

struct RunStats {
    std::uint64_t longest_ramanujan = 0;
    std::uint64_t longest_non_ramanujan = 0;
    std::map<std::uint64_t, std::uint64_t> run_counts_ramanujan;
    std::map<std::uint64_t, std::uint64_t> run_counts_non_ramanujan;
};

// classification[i] says whether the (i+1)-th prime is a Ramanujan prime.
std::vector<bool> classify_first_primes(const PrimeTable& table,
                                        const RamanujanTable& rt,
                                        std::uint64_t m);

std::vector<RunRecord> decompose_runs(const std::vector<bool>& classification);

RunStats summarize_runs(const std::vector<RunRecord>& runs);

struct LongestRuns {
    RunRecord ramanujan;     // earliest run of maximal length (length 0 if none)
    RunRecord non_ramanujan;
    RunStats stats;
    std::vector<RunRecord> runs; // the full maximal-run decomposition
};

// Longest runs of each kind over the first m primes, with multiplicities.
LongestRuns longest_runs(const PrimeTable& table, const RamanujanTable& rt,
                         std::uint64_t m);

// Heuristic expected length of the longest run among the first n primes:
// (ln n + gamma) / ln 2 - 3/2.
double finch_expected_run(std::uint64_t n);

// Twin primes and how Ramanujan primes sit inside them.

struct TwinPair {
    std::uint64_t p; // smaller member
    std::uint64_t q; // larger member, q = p + 2
    bool both_ramanujan;
};

enum class PairConvention { larger, smaller };

// All twin pairs with larger member q <= limit.
std::vector<TwinPair> enumerate_twins(const PrimeTable& table,
                                      const RamanujanTable& rt,
                                      std::uint64_t limit);

// For every twin pair p, p+2 with p > 5 and p+2 <= limit, checks
// s(p+2) == s(p) + 1.
CheckReport proposition1_verify(const PrimeTable& table, std::uint64_t limit);

struct RatioSeriesPoint {
    std::uint64_t x;             // twin-pair event (anchor member, by convention)
    std::uint64_t twin_pairs;    // pairs counted so far
    std::uint64_t ramanujan_pairs; // pairs whose both members are Ramanujan
    double ratio;
};

struct Conjecture3Result {
    std::vector<RatioSeriesPoint> series; // one point per twin-pair event <= xmax
    CheckReport report;                   // ratio > 1/4 over [571, xmax]
    std::uint64_t settle_point;           // smallest x with no violation at or past it
};

// A pair is counted as "<= x" by its larger member (default) or its smaller
// member. The comparison 4 * ramanujan_pairs > twin_pairs is exact.
Conjecture3Result conjecture3_series(const PrimeTable& table,
                                     const RamanujanTable& rt,
                                     std::uint64_t xmax,
                                     PairConvention convention = PairConvention::larger);

std::uint64_t conjecture3_settle_point(const PrimeTable& table,
                                       const RamanujanTable& rt,
                                       std::uint64_t xmax,
                                       PairConvention convention = PairConvention::larger);

} // namespace ramprimes
