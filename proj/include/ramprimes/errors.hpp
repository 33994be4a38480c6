#ifndef RAMPRIMES_ERRORS_HPP
#define RAMPRIMES_ERRORS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ramprimes {

// Query outside the range a table covers. available(), when set, tells the
// caller how far the table actually reaches (e.g. pi(limit) for nth_prime)
// so it can rebuild a larger one.
class range_error : public std::out_of_range {
public:
    explicit range_error(const std::string& what,
                         std::optional<std::uint64_t> available = std::nullopt)
        : std::out_of_range(what), available_(available) {}

    std::optional<std::uint64_t> available() const noexcept { return available_; }

private:
    std::optional<std::uint64_t> available_;
};

// Argument violates an operation's precondition.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Build would exceed the configured memory budget, or a check was asked to
// sweep past what the supplied tables cover.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ramprimes

#endif // RAMPRIMES_ERRORS_HPP
