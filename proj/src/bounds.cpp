#include "ramprimes/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ramprimes {

namespace {

Verdict worst(Verdict a, Verdict b) {
    if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
    if (a == Verdict::indeterminate || b == Verdict::indeterminate)
        return Verdict::indeterminate;
    return Verdict::pass;
}

void require_prime_coverage(const PrimeTable& table, std::uint64_t k,
                            const char* who) {
    if (table.prime_count() < k)
        throw resource_error(std::string(who) + ": table holds " +
                             std::to_string(table.prime_count()) +
                             " primes, needs p_" + std::to_string(k));
}

} // namespace

double eq1_lower_bound(double x) {
    if (!(x > 300.0))
        throw std::domain_error("eq1_lower_bound: only valid for x > 300");
    return (x / 6.0 - 3.0 * std::sqrt(x)) / std::log(x);
}

double solve_eq1_threshold(std::uint64_t n) {
    if (n < 1)
        throw usage_error("solve_eq1_threshold: n must be at least 1");
    const double target = static_cast<double>(n);
    double lo = 324.0; // eq1_lower_bound(324) = 0 exactly
    double hi = 648.0;
    while (eq1_lower_bound(hi) <= target) hi *= 2.0;
    while (hi - lo > 1e-6) {
        double mid = 0.5 * (lo + hi);
        if (eq1_lower_bound(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::uint64_t eq1_integer_bound(std::uint64_t n) {
    return static_cast<std::uint64_t>(std::floor(solve_eq1_threshold(n)));
}

CheckReport check_theorem2(const PrimeTable& table, const RamanujanTable& rt) {
    const std::uint64_t n_max = rt.count();
    require_prime_coverage(table, 4 * n_max, "check_theorem2");
    CheckRun run("theorem2", 1, static_cast<double>(n_max));
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const double nd = static_cast<double>(n);
        const double r = static_cast<double>(rt.value(n));
        const double lower = 2.0 * nd * std::log(2.0 * nd);
        const double upper = 4.0 * nd * std::log(4.0 * nd);
        Verdict v = worst(strict_greater(r, lower, rounding_margin(lower)),
                          strict_greater(upper, r, rounding_margin(upper)));
        if (n > 1) {
            bool sandwich = table.nth_prime(2 * n) < rt.value(n) &&
                            rt.value(n) < table.nth_prime(4 * n);
            v = worst(v, sandwich ? Verdict::pass : Verdict::fail);
        }
        run.record(nd, v);
    }
    return run.report();
}

CheckReport check_theorem4(const PrimeTable& table, std::uint64_t n_max) {
    if (n_max < 1)
        throw usage_error("check_theorem4: n_max must be at least 1");
    require_prime_coverage(table, 3 * n_max, "check_theorem4");
    CheckRun run("theorem4", 1, static_cast<double>(n_max));
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::uint64_t p3n = table.nth_prime(3 * n);
        run.record_exact(static_cast<double>(n), s_value(table, p3n) > n);
    }
    return run.report();
}

CheckReport check_conjecture1(const PrimeTable& table, const RamanujanTable& rt) {
    const std::uint64_t n_max = rt.count();
    require_prime_coverage(table, 3 * n_max, "check_conjecture1");
    CheckRun run("conjecture1", 1, static_cast<double>(n_max));
    for (std::uint64_t n = 1; n <= n_max; ++n)
        run.record_exact(static_cast<double>(n), rt.value(n) < table.nth_prime(3 * n));
    return run.report();
}

std::vector<RatioPoint> ratio_series(const PrimeTable& table, const RamanujanTable& rt) {
    require_prime_coverage(table, 2 * rt.count(), "ratio_series");
    std::vector<RatioPoint> out;
    out.reserve(rt.count());
    for (std::uint64_t n = 1; n <= rt.count(); ++n) {
        double r = static_cast<double>(rt.value(n)) /
                   static_cast<double>(table.nth_prime(2 * n));
        out.push_back({n, r, r - 1.0});
    }
    return out;
}

double pnt_epsilon(const PrimeTable& table, std::uint64_t x) {
    if (x < 3)
        throw usage_error("pnt_epsilon: x must be at least 3");
    const double xd = static_cast<double>(x);
    return static_cast<double>(s_value(table, x)) * std::log(xd) / xd - 0.5;
}

CheckReport check_eq1(const PrimeTable& table, std::uint64_t xmax) {
    if (xmax < 301)
        throw usage_error("check_eq1: xmax must be at least 301");
    if (xmax > table.limit())
        throw resource_error("check_eq1: xmax " + std::to_string(xmax) +
                             " exceeds table limit " + std::to_string(table.limit()));
    CheckRun run("eq1", 301, static_cast<double>(xmax));
    for (std::uint64_t x = 301; x <= xmax; ++x) {
        double bound = eq1_lower_bound(static_cast<double>(x));
        run.record(static_cast<double>(x),
                   strict_greater(static_cast<double>(s_value(table, x)), bound,
                                  rounding_margin(bound)));
    }
    return run.report();
}

std::vector<CheckReport> inequality_suite(const PrimeTable& table, std::uint64_t xmax) {
    if (xmax > table.limit())
        throw resource_error("inequality_suite: xmax " + std::to_string(xmax) +
                             " exceeds table limit " + std::to_string(table.limit()));
    std::vector<CheckReport> out;
    const std::uint64_t pi_xmax = table.pi(xmax);

    // (a) k log k < p_k
    {
        CheckRun run("rosser_nlogn", 1, static_cast<double>(pi_xmax));
        for (std::uint64_t k = 1; k <= pi_xmax; ++k) {
            double bound = static_cast<double>(k) * std::log(static_cast<double>(k));
            run.record(static_cast<double>(k),
                       strict_greater(static_cast<double>(table.nth_prime(k)), bound,
                                      rounding_margin(bound)));
        }
        out.push_back(run.report());
    }

    // (b) pi(2x) < 2 pi(x), integers x >= 11
    {
        const std::uint64_t hi = xmax / 2;
        CheckRun run("pi_doubling", 11, static_cast<double>(hi));
        for (std::uint64_t x = 11; x <= hi; ++x)
            run.record_exact(static_cast<double>(x), table.pi(2 * x) < 2 * table.pi(x));
        out.push_back(run.report());
    }

    // (c) pi(2x) - pi(x) > (3/5) x / log x on the half-integer grid from 20.5
    {
        CheckRun run("interval_three_fifths", 20.5, static_cast<double>(xmax) / 2.0);
        for (std::uint64_t t = 41; t <= xmax; ++t) { // t = 2x
            double x = static_cast<double>(t) / 2.0;
            double gap = static_cast<double>(table.pi(t) - table.pi(t / 2));
            double bound = 0.6 * x / std::log(x);
            run.record(x, strict_greater(gap, bound, rounding_margin(bound)));
        }
        out.push_back(run.report());
    }

    // (d) 2y log 4y / log(2y log 4y) > (5/3) y, fixed grid y in [4, 10^6]
    {
        CheckRun run("calculus_2ylog4y", 4.0, 1e6);
        for (std::uint64_t i = 0;; ++i) {
            double y = 4.0 + 0.25 * static_cast<double>(i);
            if (y > 1e6) break;
            double inner = 2.0 * y * std::log(4.0 * y);
            double lhs = inner / std::log(inner);
            double rhs = (5.0 / 3.0) * y;
            run.record(y, strict_greater(lhs, rhs,
                                         rounding_margin(std::max(std::abs(lhs), std::abs(rhs)))));
        }
        out.push_back(run.report());
    }

    // (e) pi(x) < (5/4) x / log x, integers from ceil(113.6)
    {
        CheckRun run("pi_five_fourths", 114, static_cast<double>(xmax));
        for (std::uint64_t x = 114; x <= xmax; ++x) {
            double bound = 1.25 * static_cast<double>(x) / std::log(static_cast<double>(x));
            run.record(static_cast<double>(x),
                       strict_greater(bound, static_cast<double>(table.pi(x)),
                                      rounding_margin(bound)));
        }
        out.push_back(run.report());
    }

    // (f) p_k < k log(k log k), k >= 6
    {
        CheckRun run("nth_prime_log_bound", 6, static_cast<double>(pi_xmax));
        for (std::uint64_t k = 6; k <= pi_xmax; ++k) {
            double kd = static_cast<double>(k);
            double bound = kd * std::log(kd * std::log(kd));
            run.record(kd, strict_greater(bound, static_cast<double>(table.nth_prime(k)),
                                          rounding_margin(bound)));
        }
        out.push_back(run.report());
    }

    // (g) pi(x/2) < (2/3) x / log x, integers above 2^16
    {
        const std::uint64_t start = (std::uint64_t{1} << 16) + 1;
        CheckRun run("half_pi_two_thirds", static_cast<double>(start),
                     static_cast<double>(xmax));
        run.set_note("swept from 2^16+1; the classical statement asserts it only for x > 2^24");
        for (std::uint64_t x = start; x <= xmax; ++x) {
            double bound = (2.0 / 3.0) * static_cast<double>(x) /
                           std::log(static_cast<double>(x));
            run.record(static_cast<double>(x),
                       strict_greater(bound, static_cast<double>(table.pi(x / 2)),
                                      rounding_margin(bound)));
        }
        out.push_back(run.report());
    }

    // (h) s(x) > (log 2 / 60) x / log x, integers from 8000
    {
        const double c = std::log(2.0) / 60.0;
        CheckRun run("erdos_log2_over_60", 8000, static_cast<double>(xmax));
        for (std::uint64_t x = 8000; x <= xmax; ++x) {
            double bound = c * static_cast<double>(x) / std::log(static_cast<double>(x));
            run.record(static_cast<double>(x),
                       strict_greater(static_cast<double>(s_value(table, x)), bound,
                                      rounding_margin(bound)));
        }
        out.push_back(run.report());
    }

    // (i) s(x) > (x/6 - 3 sqrt x) / log x, integers from 301
    {
        CheckRun run("eq1_lower_bound", 301, static_cast<double>(xmax));
        for (std::uint64_t x = 301; x <= xmax; ++x) {
            double bound = eq1_lower_bound(static_cast<double>(x));
            run.record(static_cast<double>(x),
                       strict_greater(static_cast<double>(s_value(table, x)), bound,
                                      rounding_margin(bound)));
        }
        out.push_back(run.report());
    }

    return out;
}

} // namespace ramprimes
