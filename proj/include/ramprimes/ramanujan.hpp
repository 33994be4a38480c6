#ifndef RAMPRIMES_RAMANUJAN_HPP
#define RAMPRIMES_RAMANUJAN_HPP

#include <cstdint>
#include <vector>

#include "ramprimes/prime_table.hpp"

namespace ramprimes {

// R_1..R_N with each value's index among all primes. Immutable once computed.
struct RamanujanTable {
    std::vector<std::uint64_t> values;      // values[n-1] = R_n
    std::vector<std::uint64_t> prime_index; // prime_index[n-1] = k with R_n = p_k
    std::uint64_t scan_bound = 0;           // largest x the computing scan visited

    std::uint64_t count() const noexcept { return values.size(); }

    // R_n, 1-based.
    std::uint64_t value(std::uint64_t n) const {
        if (n < 1 || n > values.size())
            throw range_error("RamanujanTable: n out of range", values.size());
        return values[n - 1];
    }

    // k with R_n = p_k, 1-based n.
    std::uint64_t index_in_primes(std::uint64_t n) const {
        if (n < 1 || n > prime_index.size())
            throw range_error("RamanujanTable: n out of range", prime_index.size());
        return prime_index[n - 1];
    }

    std::uint64_t largest() const {
        if (values.empty())
            throw range_error("RamanujanTable: empty", 0);
        return values.back();
    }

    // Membership among the computed values. Queries above largest() throw
    // range_error rather than returning false: a prime beyond the table is
    // not known to be non-Ramanujan.
    bool is_ramanujan(std::uint64_t p) const;
};

// s(x) = pi(x) - pi(floor(x/2)), the number of primes in (x/2, x].
// Defined for x >= 1 (s(1) = 0, the witness below R_1).
std::uint64_t s_value(const PrimeTable& table, std::uint64_t x);

// Scan bound B = max(11, ceil(4n log 4n)). The bound R_n < 4n log 4n
// guarantees a scan to B sees R_1..R_n; the floor of 11 covers n = 1, where
// 4 log 4 = 5.5.. would stop short of the x-range that witnesses R_2.
std::uint64_t scan_bound_for(std::uint64_t n);

// Smallest N whose table is guaranteed to reach past `limit`, via the lower
// bound R_N > 2N log 2N.
std::uint64_t count_for_coverage(std::uint64_t limit);

// Computes R_1..R_count by one incremental pass of s(x) over [2, B],
// B = scan_bound_for(count). The _with variant reuses a caller-provided
// table (which must satisfy table.limit() >= B); the plain variant builds
// a table of exactly that limit.
RamanujanTable compute_ramanujan(std::uint64_t count,
                                 std::uint64_t memory_budget = PrimeTable::kDefaultMemoryBudget);
RamanujanTable compute_ramanujan_with(const PrimeTable& table, std::uint64_t count);

// Definitional oracle: the smallest R with s(x) >= n for every x in
// [R, horizon], found by a direct backward scan with two pi lookups per x.
// Kept independent of compute_ramanujan's incremental recurrence so the two
// can cross-check each other. Requires horizon >= scan_bound_for(n), which
// makes the result equal to R_n.
std::uint64_t brute_force_ramanujan(std::uint64_t n, std::uint64_t horizon,
                                    std::uint64_t memory_budget = PrimeTable::kDefaultMemoryBudget);

} // namespace ramprimes

#endif // RAMPRIMES_RAMANUJAN_HPP
