#ifndef RAMPRIMES_CHECK_REPORT_HPP
#define RAMPRIMES_CHECK_REPORT_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <json.hpp>

namespace ramprimes {

// Outcome of one input of an inequality sweep. Comparisons with a
// real-valued side are only a definite pass (or fail) when the difference
// clears a margin of a few rounding units; anything inside the margin is
// indeterminate, never a pass.
enum class Verdict { pass, fail, indeterminate };

// Margin for a strict comparison whose real side has magnitude
// |real_side|: four units of relative rounding error.
inline double rounding_margin(double real_side) {
    return 4.0 * std::numeric_limits<double>::epsilon() * std::abs(real_side);
}

// Verdict for "lhs > rhs" under the given margin.
inline Verdict strict_greater(double lhs, double rhs, double margin) {
    if (lhs - rhs > margin) return Verdict::pass;
    if (rhs - lhs > margin) return Verdict::fail;
    return Verdict::indeterminate;
}

// Outcome of a bound/conjecture sweep over a range of inputs.
// first_failure is the smallest input that was not a definite pass; when it
// is absent the sweep passed. Inputs are doubles because some sweeps run on
// real grids (half- or quarter-integer steps); integer sweeps store exact
// integral values.
struct CheckReport {
    std::string check_id;
    double lo = 0;
    double hi = 0;
    bool passed = false;
    std::optional<double> first_failure;
    std::uint64_t samples_checked = 0;
    std::uint64_t indeterminate_count = 0;
    std::string note;
};

// Accumulates verdicts for inputs visited in ascending order.
class CheckRun {
public:
    CheckRun(std::string check_id, double lo, double hi)
        : report_{std::move(check_id), lo, hi, true, std::nullopt, 0, 0, {}} {}

    void record(double input, Verdict v) {
        ++report_.samples_checked;
        if (v == Verdict::indeterminate) ++report_.indeterminate_count;
        if (v != Verdict::pass && !report_.first_failure) {
            report_.first_failure = input;
            report_.passed = false;
        }
    }

    void record_exact(double input, bool holds) {
        record(input, holds ? Verdict::pass : Verdict::fail);
    }

    void set_note(std::string note) { report_.note = std::move(note); }

    const CheckReport& report() const noexcept { return report_; }

private:
    CheckReport report_;
};

// One line per report, stable field order:
//   <id> range=[lo,hi] samples=<n> result=PASS
//   <id> range=[lo,hi] samples=<n> result=FAIL first_failure=<v>
// with " indeterminate=<k>" appended when k > 0 and " note=..." when set.
std::string to_text(const CheckReport& report);

nlohmann::ordered_json to_json(const CheckReport& report);

} // namespace ramprimes

#endif // RAMPRIMES_CHECK_REPORT_HPP
