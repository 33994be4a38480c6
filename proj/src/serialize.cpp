#include "ramprimes/serialize.hpp"

#include <json.hpp>

#include "ramprimes/errors.hpp"
#include "ramprimes/format.hpp"

namespace ramprimes {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kind_name(RunKind kind) {
    return kind == RunKind::ramanujan ? "ramanujan" : "non_ramanujan";
}

const char* bool_name(bool v) { return v ? "true" : "false"; }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void reject_bfile() {
    throw usage_error("bfile format is only valid for integer sequences");
}

ordered_json run_to_json(const RunRecord& run) {
    return {{"kind", kind_name(run.kind)},
            {"start_prime_index", run.start_prime_index},
            {"length", run.length}};
}

ordered_json counts_to_json(const std::map<std::uint64_t, std::uint64_t>& counts) {
    ordered_json j = ordered_json::object();
    for (const auto& [length, count] : counts) j[std::to_string(length)] = count;
    return j;
}

} // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    if (name == "bfile") return OutputFormat::bfile;
    if (name == "text") return OutputFormat::text;
    throw usage_error("unknown format: " + name);
}

std::string render_ramanujan(const RamanujanTable& rt, OutputFormat format) {
    std::string out;
    switch (format) {
    case OutputFormat::bfile:
        for (std::uint64_t n = 1; n <= rt.count(); ++n)
            out += std::to_string(n) + " " + std::to_string(rt.value(n)) + "\n";
        return out;
    case OutputFormat::csv:
        out = "n,ramanujan_prime,prime_index\n";
        for (std::uint64_t n = 1; n <= rt.count(); ++n)
            out += std::to_string(n) + "," + std::to_string(rt.value(n)) + "," +
                   std::to_string(rt.index_in_primes(n)) + "\n";
        return out;
    case OutputFormat::json: {
        ordered_json rows = ordered_json::array();
        for (std::uint64_t n = 1; n <= rt.count(); ++n)
            rows.push_back({{"n", n},
                            {"ramanujan_prime", rt.value(n)},
                            {"prime_index", rt.index_in_primes(n)}});
        return dump(rows);
    }
    case OutputFormat::text:
        for (std::uint64_t n = 1; n <= rt.count(); ++n)
            out += "R_" + std::to_string(n) + " = " + std::to_string(rt.value(n)) +
                   " = p_" + std::to_string(rt.index_in_primes(n)) + "\n";
        return out;
    }
    throw usage_error("unknown format");
}

std::string render_runs(const LongestRuns& lr, std::uint64_t m, OutputFormat format) {
    const double finch = finch_expected_run(m);
    std::string out;
    switch (format) {
    case OutputFormat::bfile:
        reject_bfile();
    case OutputFormat::csv:
        out = "kind,start_prime_index,length,finch_expected\n";
        for (const auto& run : lr.runs)
            out += std::string(kind_name(run.kind)) + "," +
                   std::to_string(run.start_prime_index) + "," +
                   std::to_string(run.length) + "," + fixed6(finch) + "\n";
        return out;
    case OutputFormat::json: {
        ordered_json j;
        j["first_primes"] = m;
        j["finch_expected"] = round6(finch);
        j["longest_ramanujan"] = run_to_json(lr.ramanujan);
        j["longest_non_ramanujan"] = run_to_json(lr.non_ramanujan);
        j["run_counts_ramanujan"] = counts_to_json(lr.stats.run_counts_ramanujan);
        j["run_counts_non_ramanujan"] = counts_to_json(lr.stats.run_counts_non_ramanujan);
        ordered_json rows = ordered_json::array();
        for (const auto& run : lr.runs) rows.push_back(run_to_json(run));
        j["runs"] = rows;
        return dump(j);
    }
    case OutputFormat::text: {
        for (const auto& run : lr.runs)
            out += std::string(kind_name(run.kind)) + " start=p_" +
                   std::to_string(run.start_prime_index) + " length=" +
                   std::to_string(run.length) + "\n";
        auto count_of = [](const std::map<std::uint64_t, std::uint64_t>& counts,
                           std::uint64_t length) -> std::uint64_t {
            auto it = counts.find(length);
            return it == counts.end() ? 0 : it->second;
        };
        out += "longest ramanujan run: length " + std::to_string(lr.ramanujan.length) +
               " starting at p_" + std::to_string(lr.ramanujan.start_prime_index) +
               " (count " +
               std::to_string(count_of(lr.stats.run_counts_ramanujan, lr.ramanujan.length)) +
               ")\n";
        out += "longest non_ramanujan run: length " +
               std::to_string(lr.non_ramanujan.length) + " starting at p_" +
               std::to_string(lr.non_ramanujan.start_prime_index) + " (count " +
               std::to_string(
                   count_of(lr.stats.run_counts_non_ramanujan, lr.non_ramanujan.length)) +
               ")\n";
        out += "finch baseline for " + std::to_string(m) +
               " primes: " + fixed6(finch) + "\n";
        return out;
    }
    }
    throw usage_error("unknown format");
}

std::string render_twins(const std::vector<TwinPair>& twins, OutputFormat format) {
    std::uint64_t both = 0;
    for (const auto& t : twins) both += t.both_ramanujan ? 1 : 0;
    std::string out;
    switch (format) {
    case OutputFormat::bfile:
        reject_bfile();
    case OutputFormat::csv:
        out = "p,q,both_ramanujan\n";
        for (const auto& t : twins)
            out += std::to_string(t.p) + "," + std::to_string(t.q) + "," +
                   bool_name(t.both_ramanujan) + "\n";
        return out;
    case OutputFormat::json: {
        ordered_json j;
        j["pairs"] = twins.size();
        j["both_ramanujan"] = both;
        ordered_json rows = ordered_json::array();
        for (const auto& t : twins)
            rows.push_back(
                {{"p", t.p}, {"q", t.q}, {"both_ramanujan", t.both_ramanujan}});
        j["twins"] = rows;
        return dump(j);
    }
    case OutputFormat::text:
        for (const auto& t : twins)
            out += "(" + std::to_string(t.p) + ", " + std::to_string(t.q) + ") " +
                   (t.both_ramanujan ? "both ramanujan" : "-") + "\n";
        out += "pairs=" + std::to_string(twins.size()) +
               " both_ramanujan=" + std::to_string(both) + "\n";
        return out;
    }
    throw usage_error("unknown format");
}

std::string render_ratios(const PrimeTable& table, const RamanujanTable& rt,
                          const std::vector<RatioPoint>& series, OutputFormat format) {
    std::string out;
    switch (format) {
    case OutputFormat::bfile:
        reject_bfile();
    case OutputFormat::csv:
        out = "n,ramanujan_prime,prime_2n,ratio,epsilon\n";
        for (const auto& pt : series)
            out += std::to_string(pt.n) + "," + std::to_string(rt.value(pt.n)) + "," +
                   std::to_string(table.nth_prime(2 * pt.n)) + "," + fixed6(pt.ratio) +
                   "," + fixed6(pt.epsilon) + "\n";
        return out;
    case OutputFormat::json: {
        ordered_json rows = ordered_json::array();
        for (const auto& pt : series)
            rows.push_back({{"n", pt.n},
                            {"ramanujan_prime", rt.value(pt.n)},
                            {"prime_2n", table.nth_prime(2 * pt.n)},
                            {"ratio", round6(pt.ratio)},
                            {"epsilon", round6(pt.epsilon)}});
        return dump(rows);
    }
    case OutputFormat::text:
        for (const auto& pt : series)
            out += "n=" + std::to_string(pt.n) + " R=" + std::to_string(rt.value(pt.n)) +
                   " p_2n=" + std::to_string(table.nth_prime(2 * pt.n)) +
                   " ratio=" + fixed6(pt.ratio) + " epsilon=" + fixed6(pt.epsilon) + "\n";
        return out;
    }
    throw usage_error("unknown format");
}

std::string render_epsilon(std::uint64_t x, std::uint64_t s, double epsilon,
                           OutputFormat format) {
    switch (format) {
    case OutputFormat::bfile:
        reject_bfile();
    case OutputFormat::csv:
        return "x,s,epsilon\n" + std::to_string(x) + "," + std::to_string(s) + "," +
               fixed6(epsilon) + "\n";
    case OutputFormat::json:
        return dump(ordered_json{{"x", x}, {"s", s}, {"epsilon", round6(epsilon)}});
    case OutputFormat::text:
        return "x=" + std::to_string(x) + " s=" + std::to_string(s) +
               " epsilon=" + fixed6(epsilon) + "\n";
    }
    throw usage_error("unknown format");
}

std::string render_reports(const std::vector<CheckReport>& reports,
                           OutputFormat format) {
    std::string out;
    switch (format) {
    case OutputFormat::bfile:
        reject_bfile();
    case OutputFormat::csv:
        out = "check_id,lo,hi,passed,first_failure,samples_checked,indeterminate_count\n";
        for (const auto& r : reports) {
            out += r.check_id + "," + format_number(r.lo) + "," + format_number(r.hi) +
                   "," + bool_name(r.passed) + ",";
            if (r.first_failure) out += format_number(*r.first_failure);
            out += "," + std::to_string(r.samples_checked) + "," +
                   std::to_string(r.indeterminate_count) + "\n";
        }
        return out;
    case OutputFormat::json: {
        ordered_json rows = ordered_json::array();
        for (const auto& r : reports) rows.push_back(to_json(r));
        return dump(rows);
    }
    case OutputFormat::text:
        for (const auto& r : reports) out += to_text(r) + "\n";
        return out;
    }
    throw usage_error("unknown format");
}

} // namespace ramprimes
