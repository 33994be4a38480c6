#include "ramprimes/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ramprimes {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Upper estimate of pi(x) for sizing the primes vector.
std::uint64_t pi_upper_estimate(std::uint64_t limit) {
    if (limit < 17) return 8;
    double x = static_cast<double>(limit);
    return static_cast<std::uint64_t>(1.26 * x / std::log(x)) + 1;
}

} // namespace

std::uint64_t PrimeTable::estimate_bytes(std::uint64_t limit) {
    std::uint64_t n = limit + 1;
    std::uint64_t primality_bytes = (n + 7) / 8;
    std::uint64_t prefix_bytes = 4 * n;
    std::uint64_t primes_bytes = 8 * pi_upper_estimate(limit);
    return primality_bytes + prefix_bytes + primes_bytes;
}

PrimeTable PrimeTable::build(std::uint64_t limit, std::uint64_t memory_budget,
                             std::uint64_t segment_size) {
    if (limit < 2)
        throw usage_error("PrimeTable: limit must be at least 2");
    if (segment_size == 0)
        segment_size = kDefaultSegmentSize;
    if (estimate_bytes(limit) > memory_budget)
        throw resource_error("PrimeTable: limit " + std::to_string(limit) +
                             " needs ~" + std::to_string(estimate_bytes(limit)) +
                             " bytes, budget is " + std::to_string(memory_budget));

    PrimeTable t;
    t.limit_ = limit;
    t.primality_.assign(limit + 1, false);

    // base primes up to sqrt(limit), plain sieve
    std::uint64_t root = isqrt(limit);
    std::vector<char> base(root + 1, 1);
    std::vector<std::uint64_t> base_primes;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!base[i]) continue;
        base_primes.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) base[j] = 0;
    }

    // segmented pass over [2, limit]
    std::vector<char> seg(segment_size);
    for (std::uint64_t low = 2; low <= limit; low += segment_size) {
        std::uint64_t high = std::min(low + segment_size - 1, limit);
        std::fill(seg.begin(), seg.begin() + (high - low + 1), 1);
        for (std::uint64_t p : base_primes) {
            if (p * p > high) break;
            std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
            for (std::uint64_t j = start; j <= high; j += p) seg[j - low] = 0;
        }
        for (std::uint64_t x = low; x <= high; ++x)
            if (seg[x - low]) t.primality_[x] = true;
    }

    t.pi_prefix_.assign(limit + 1, 0);
    t.primes_.reserve(pi_upper_estimate(limit));
    std::uint32_t count = 0;
    for (std::uint64_t x = 0; x <= limit; ++x) {
        if (t.primality_[x]) {
            ++count;
            t.primes_.push_back(x);
        }
        t.pi_prefix_[x] = count;
    }
    return t;
}

std::uint64_t nth_prime_upper_bound(std::uint64_t k) {
    if (k < 6) return 13; // p_5 = 11
    double kd = static_cast<double>(k);
    return static_cast<std::uint64_t>(std::ceil(kd * std::log(kd * std::log(kd)))) + 1;
}

} // namespace ramprimes
