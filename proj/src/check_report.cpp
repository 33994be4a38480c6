#include "ramprimes/check_report.hpp"

#include <cmath>

#include "ramprimes/format.hpp"

namespace ramprimes {

namespace {

// Integral doubles serialize as JSON integers; grid values stay doubles.
nlohmann::ordered_json json_number(double v) {
    if (std::floor(v) == v && std::abs(v) < 9.0e15)
        return static_cast<std::int64_t>(v);
    return round6(v);
}

} // namespace

std::string to_text(const CheckReport& report) {
    std::string line = report.check_id;
    line += " range=[" + format_number(report.lo) + "," + format_number(report.hi) + "]";
    line += " samples=" + std::to_string(report.samples_checked);
    line += report.passed ? " result=PASS" : " result=FAIL";
    if (report.first_failure)
        line += " first_failure=" + format_number(*report.first_failure);
    if (report.indeterminate_count > 0)
        line += " indeterminate=" + std::to_string(report.indeterminate_count);
    if (!report.note.empty())
        line += " note=\"" + report.note + "\"";
    return line;
}

nlohmann::ordered_json to_json(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["check_id"] = report.check_id;
    j["range"] = nlohmann::ordered_json::array({json_number(report.lo), json_number(report.hi)});
    j["passed"] = report.passed;
    j["first_failure"] = report.first_failure
                             ? json_number(*report.first_failure)
                             : nlohmann::ordered_json{};
    j["samples_checked"] = report.samples_checked;
    j["indeterminate_count"] = report.indeterminate_count;
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

} // namespace ramprimes
