#include "ramprimes/ramanujan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ramprimes {

bool RamanujanTable::is_ramanujan(std::uint64_t p) const {
    if (values.empty() || p > values.back())
        throw range_error("is_ramanujan: query beyond computed range",
                          values.empty() ? 0 : values.back());
    return std::binary_search(values.begin(), values.end(), p);
}

std::uint64_t s_value(const PrimeTable& table, std::uint64_t x) {
    if (x < 1)
        throw usage_error("s_value: x must be at least 1");
    return table.pi(x) - table.pi(x / 2); // pi throws range_error past limit
}

std::uint64_t scan_bound_for(std::uint64_t n) {
    if (n < 1)
        throw usage_error("scan_bound_for: n must be at least 1");
    double nd = static_cast<double>(n);
    auto b = static_cast<std::uint64_t>(std::ceil(4.0 * nd * std::log(4.0 * nd)));
    return std::max<std::uint64_t>(11, b);
}

std::uint64_t count_for_coverage(std::uint64_t limit) {
    std::uint64_t n = 1;
    while (2.0 * static_cast<double>(n) * std::log(2.0 * static_cast<double>(n)) <
           static_cast<double>(limit))
        ++n;
    return n;
}

RamanujanTable compute_ramanujan_with(const PrimeTable& table, std::uint64_t count) {
    if (count < 1)
        throw usage_error("compute_ramanujan: count must be at least 1");
    const std::uint64_t bound = scan_bound_for(count);
    if (table.limit() < bound)
        throw resource_error("compute_ramanujan: table limit " +
                             std::to_string(table.limit()) +
                             " is below the required scan bound " +
                             std::to_string(bound));

    RamanujanTable rt;
    rt.scan_bound = bound;
    rt.values.assign(count, 0);

    // Backward pass. R_n = 1 + max{x <= B : s(x) < n}; the first x (largest,
    // scanning downward) where s drops below the running minimum settles
    // every level between the two. s itself is advanced by the recurrence
    // s(x-1) = s(x) - [x prime] + [x even][x/2 prime], two primality
    // lookups per step.
    std::uint64_t s = s_value(table, bound);
    std::uint64_t min_seen = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t x = bound; x >= 2; --x) {
        if (s < min_seen) {
            std::uint64_t top = std::min(min_seen, count);
            for (std::uint64_t n = s + 1; n <= top; ++n) rt.values[n - 1] = x + 1;
            min_seen = s;
        }
        s -= table.is_prime(x) ? 1 : 0;
        if (x % 2 == 0 && table.is_prime(x / 2)) ++s;
    }
    // Levels never settled have their witness at x = 1, where s(1) = 0;
    // in practice that is exactly n = 1 (s(x) >= 1 for every x >= 2).
    for (std::uint64_t n = 1; n <= std::min(min_seen, count); ++n) rt.values[n - 1] = 2;

    rt.prime_index.reserve(count);
    for (std::uint64_t v : rt.values) rt.prime_index.push_back(table.pi(v));
    return rt;
}

RamanujanTable compute_ramanujan(std::uint64_t count, std::uint64_t memory_budget) {
    if (count < 1)
        throw usage_error("compute_ramanujan: count must be at least 1");
    PrimeTable table = PrimeTable::build(scan_bound_for(count), memory_budget);
    return compute_ramanujan_with(table, count);
}

std::uint64_t brute_force_ramanujan(std::uint64_t n, std::uint64_t horizon,
                                    std::uint64_t memory_budget) {
    if (n < 1)
        throw usage_error("brute_force_ramanujan: n must be at least 1");
    if (horizon < scan_bound_for(n))
        throw usage_error("brute_force_ramanujan: horizon below scan_bound_for(n)");
    PrimeTable table = PrimeTable::build(horizon, memory_budget);
    for (std::uint64_t x = horizon; x >= 2; --x)
        if (table.pi(x) - table.pi(x / 2) < n) return x + 1;
    return 2; // only x = 1 has s(x) < n, i.e. n = 1
}

} // namespace ramprimes
