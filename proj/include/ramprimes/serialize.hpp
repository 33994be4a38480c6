#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramprimes/bounds.hpp"
#include "ramprimes/check_report.hpp"
#include "ramprimes/ramanujan.hpp"
#include "ramprimes/statistics.hpp"

namespace ramprimes {

enum class OutputFormat { csv, json, bfile, text };

OutputFormat parse_format(const std::string& name); // usage_error on no match

// Every renderer returns the complete, newline-terminated output. All float
// columns print with six fixed decimals, so identical inputs give identical
// bytes. bfile is only meaningful for the Ramanujan sequence itself; the
// other renderers reject it with a usage_error.

// Columns: n,ramanujan_prime,prime_index. bfile rows are "n R_n".
std::string render_ramanujan(const RamanujanTable& rt, OutputFormat format);

// Columns: kind,start_prime_index,length,finch_expected — one row per
// maximal run; finch_expected is the baseline for the whole window of m
// primes, repeated per row.
std::string render_runs(const LongestRuns& lr, std::uint64_t m, OutputFormat format);

// Columns: p,q,both_ramanujan.
std::string render_twins(const std::vector<TwinPair>& twins, OutputFormat format);

// Columns: n,ramanujan_prime,prime_2n,ratio,epsilon.
std::string render_ratios(const PrimeTable& table, const RamanujanTable& rt,
                          const std::vector<RatioPoint>& series, OutputFormat format);

// Columns: x,s,epsilon — a single row.
std::string render_epsilon(std::uint64_t x, std::uint64_t s, double epsilon,
                           OutputFormat format);

// Columns: check_id,lo,hi,passed,first_failure,samples_checked,
// indeterminate_count. JSON output is always an array, text one line per
// report.
std::string render_reports(const std::vector<CheckReport>& reports,
                           OutputFormat format);

} // namespace ramprimes
