#ifndef RAMPRIMES_BOUNDS_HPP
#define RAMPRIMES_BOUNDS_HPP

#include <cstdint>
#include <vector>

#include "ramprimes/check_report.hpp"
#include "ramprimes/prime_table.hpp"
#include "ramprimes/ramanujan.hpp"

namespace ramprimes {

// One point of the series R_n / p_2n, which tends to 1.
struct RatioPoint {
    std::uint64_t n;
    double ratio;   // R_n / p_2n
    double epsilon; // ratio - 1
};

// The classical lower bound (x/6 - 3 sqrt(x)) / log x for s(x), valid for
// x > 300; ruled out of domain below that.
double eq1_lower_bound(double x);

// The unique x > 324 where eq1_lower_bound(x) = n, by bisection to an
// absolute tolerance of 1e-6 (the bound is increasing past 300).
double solve_eq1_threshold(std::uint64_t n);

// floor(solve_eq1_threshold(n)): an integer X with s(x) >= n + 1 for every
// x >= X, hence R_{n+1} <= X. For n = 1 this reproduces the bound
// R_2 <= 392.
std::uint64_t eq1_integer_bound(std::uint64_t n);

// 2n log 2n < R_n < 4n log 4n for n >= 1, and p_2n < R_n < p_4n for n > 1.
// The table must cover p_4N.
CheckReport check_theorem2(const PrimeTable& table, const RamanujanTable& rt);

// s(p_3n) > n for 1 <= n <= n_max. The table must cover p_3n_max.
CheckReport check_theorem4(const PrimeTable& table, std::uint64_t n_max);

// R_n < p_3n for all computed n (proved by Laishram; checked directly).
CheckReport check_conjecture1(const PrimeTable& table, const RamanujanTable& rt);

// R_n / p_2n for n = 1..N. The table must cover p_2N.
std::vector<RatioPoint> ratio_series(const PrimeTable& table, const RamanujanTable& rt);

// s(x) log(x) / x - 1/2: the deviation of the prime density in (x/2, x]
// from its limiting value. Requires x >= 3.
double pnt_epsilon(const PrimeTable& table, std::uint64_t x);

// Standalone sweep of s(x) > eq1_lower_bound(x) over [301, xmax].
CheckReport check_eq1(const PrimeTable& table, std::uint64_t xmax);

// The nine classical inequalities the Ramanujan-prime bounds rest on, each
// swept over its own validity range up to xmax:
//   rosser_nlogn          k log k < p_k                       k <= pi(xmax)
//   pi_doubling           pi(2x) < 2 pi(x)                    11 <= x <= xmax/2
//   interval_three_fifths pi(2x) - pi(x) > (3/5) x/log x      x = 20.5, 21, .. xmax/2
//   calculus_2ylog4y      2y log 4y / log(2y log 4y) > 5y/3   y = 4, 4.25, .. 10^6
//   pi_five_fourths       pi(x) < (5/4) x/log x               114 <= x <= xmax
//   nth_prime_log_bound   p_k < k log(k log k)                6 <= k <= pi(xmax)
//   half_pi_two_thirds    pi(x/2) < (2/3) x/log x             2^16 < x <= xmax
//   erdos_log2_over_60    s(x) > (log 2 / 60) x/log x         8000 <= x <= xmax
//   eq1_lower_bound       s(x) > eq1_lower_bound(x)           301 <= x <= xmax
std::vector<CheckReport> inequality_suite(const PrimeTable& table, std::uint64_t xmax);

} // namespace ramprimes

#endif // RAMPRIMES_BOUNDS_HPP
