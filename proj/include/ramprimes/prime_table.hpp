#ifndef RAMPRIMES_PRIME_TABLE_HPP
#define RAMPRIMES_PRIME_TABLE_HPP

#include <cstdint>
#include <vector>

#include "ramprimes/errors.hpp"

namespace ramprimes {

// Dense prime table over [0, limit]: per-integer primality, per-integer
// prefix counts pi(x), and the ordered list of primes. Immutable after
// build; all queries are O(1) and safe to share across threads.
//
// The prefix counts are stored one per integer because the Ramanujan scan
// needs pi at every x and is the hot loop; at 4 bytes per integer a 10^8
// table costs ~460 MB, which is what the default memory budget allows.
class PrimeTable {
public:
    static constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 16;
    static constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{512} << 20;

    // Sieves [2, limit] in cache-sized segments. The result is identical for
    // any segment_size. Throws usage_error for limit < 2 and resource_error
    // when estimate_bytes(limit) exceeds memory_budget.
    static PrimeTable build(std::uint64_t limit,
                            std::uint64_t memory_budget = kDefaultMemoryBudget,
                            std::uint64_t segment_size = kDefaultSegmentSize);

    // Approximate resident size of a table with the given limit.
    static std::uint64_t estimate_bytes(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }

    // Number of primes <= x.
    std::uint64_t pi(std::uint64_t x) const {
        if (x > limit_)
            throw range_error("pi: x exceeds table limit", limit_);
        return pi_prefix_[x];
    }

    bool is_prime(std::uint64_t x) const {
        if (x > limit_)
            throw range_error("is_prime: x exceeds table limit", limit_);
        return primality_[x];
    }

    // The k-th prime, 1-based. The range_error carries prime_count() so the
    // caller can size a rebuild.
    std::uint64_t nth_prime(std::uint64_t k) const {
        if (k < 1 || k > primes_.size())
            throw range_error("nth_prime: k out of range", primes_.size());
        return primes_[k - 1];
    }

    // pi(limit)
    std::uint64_t prime_count() const noexcept { return primes_.size(); }

    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

private:
    PrimeTable() = default;

    std::uint64_t limit_ = 0;
    std::vector<bool> primality_;         // bit per integer in [0, limit]
    std::vector<std::uint32_t> pi_prefix_; // pi_prefix[x] = pi(x)
    std::vector<std::uint64_t> primes_;    // primes[k-1] = p_k
};

// Upper bound on p_k: k log(k log k) for k >= 6 (a classical explicit bound),
// small fixed values below that. Used to size tables that must cover the
// first k primes.
std::uint64_t nth_prime_upper_bound(std::uint64_t k);

} // namespace ramprimes

#endif // RAMPRIMES_PRIME_TABLE_HPP
